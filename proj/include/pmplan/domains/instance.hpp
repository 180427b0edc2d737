#ifndef PMPLAN_DOMAINS_INSTANCE_HPP
#define PMPLAN_DOMAINS_INSTANCE_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "pmplan/pddl/pddl.hpp"
#include "pmplan/strips.hpp"

namespace pmplan::domains {

struct Range {
    int lo = 0;
    int hi = 0;
};

class InfeasibleRange : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct GeneratorParams {
    std::string domain;
    std::string dataset = "test";
    std::map<std::string, Range> ranges;
    double wood_factor_lo = 1.0;
    double wood_factor_hi = 1.4;
    std::uint64_t seed = 1;
    int count = 1;

    Range range(const std::string& key) const {
        auto it = ranges.find(key);
        if (it == ranges.end()) throw InfeasibleRange("missing range '" + key + "' for " + domain);
        return it->second;
    }
};

/// Checks count >= 1 and that every range is non-empty with lo >= min_lo.
inline void check_params(const GeneratorParams& p, const std::map<std::string, int>& min_lo) {
    if (p.count < 1) throw InfeasibleRange("count must be at least 1");
    for (const auto& [key, floor] : min_lo) {
        Range r = p.range(key);
        if (r.lo > r.hi) throw InfeasibleRange("empty range for '" + key + "'");
        if (r.lo < floor)
            throw InfeasibleRange("range for '" + key + "' must start at " + std::to_string(floor) + " or more");
    }
}

/// A generated task plus the semantic annotation partial models are built
/// from (object types, cities, targets, goal attributes, ...).
struct DomainInstance {
    std::string id;  // "<seed>-<index>"
    std::string domain;
    std::string dataset;
    pddl::LiftedProblem problem;
    std::shared_ptr<const StripsTask> task;
    nlohmann::json annotation;

    std::map<std::string, std::string> object_types() const {
        return annotation.at("objects").get<std::map<std::string, std::string>>();
    }
};

/// splitmix64 finaliser, used to derive per-instance and per-attempt seeds.
inline std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index, std::uint64_t attempt) {
    return mix_seed(mix_seed(mix_seed(seed) ^ index) ^ attempt);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
    int uniform(Range r) { return uniform(r.lo, r.hi); }
    double uniform_real(double lo, double hi) {
        return lo == hi ? lo : std::uniform_real_distribution<double>(lo, hi)(gen_);
    }
    bool coin() { return uniform(0, 1) == 1; }
    template <typename T>
    const T& pick(const std::vector<T>& v) {
        if (v.empty()) throw std::logic_error("Rng::pick on empty vector");
        return v[static_cast<std::size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
    }
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[static_cast<std::size_t>(uniform(0, static_cast<int>(i) - 1))]);
    }

private:
    std::mt19937_64 gen_;
};

inline pddl::Atom atom(std::string pred, std::vector<std::string> args) {
    return {std::move(pred), std::move(args), 0, 0};
}

} // namespace pmplan::domains

#endif // PMPLAN_DOMAINS_INSTANCE_HPP
