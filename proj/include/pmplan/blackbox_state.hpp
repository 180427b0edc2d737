#ifndef PMPLAN_BLACKBOX_STATE_HPP
#define PMPLAN_BLACKBOX_STATE_HPP

#include <cstddef>
#include <cstdint>
#include <cstring>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "pmplan/fact_set.hpp"

namespace pmplan {

/// Opaque simulator state. Search sees only the canonical bytes, equality
/// and the hash; the simulator (and σ mappings written against it) decode
/// the payload.
class BlackBoxState {
public:
    BlackBoxState() = default;
    explicit BlackBoxState(std::vector<std::uint64_t> payload)
        : payload_(std::move(payload)), hash_(hash_words(payload_)) {}

    std::span<const std::byte> bytes() const { return std::as_bytes(std::span(payload_)); }
    std::uint64_t hash() const { return hash_; }
    const std::vector<std::uint64_t>& payload() const { return payload_; }

    friend bool operator==(const BlackBoxState& a, const BlackBoxState& b) {
        return a.hash_ == b.hash_ && a.payload_ == b.payload_;
    }

private:
    std::vector<std::uint64_t> payload_;
    std::uint64_t hash_ = hash_words({});
};

} // namespace pmplan

template <>
struct std::hash<pmplan::BlackBoxState> {
    std::size_t operator()(const pmplan::BlackBoxState& s) const noexcept {
        return static_cast<std::size_t>(s.hash());
    }
};

#endif // PMPLAN_BLACKBOX_STATE_HPP
