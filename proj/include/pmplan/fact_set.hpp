#ifndef PMPLAN_FACT_SET_HPP
#define PMPLAN_FACT_SET_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace pmplan {

using FactIndex = std::uint32_t;

/// 64-bit FNV-1a over a word span, byte by byte in little-endian order so the
/// value depends only on the canonical bytes.
inline std::uint64_t hash_words(std::span<const std::uint64_t> words) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::uint64_t w : words) {
        for (int b = 0; b < 8; ++b) {
            h ^= (w >> (8 * b)) & 0xffu;
            h *= 0x100000001b3ull;
        }
    }
    return h;
}

/// Fixed-width bit set over the facts 0..size-1 of one task. Bits beyond
/// size() are always zero, so word-wise equality is set equality.
class FactSet {
public:
    FactSet() = default;
    explicit FactSet(std::size_t num_facts)
        : size_(num_facts), words_((num_facts + 63) / 64, 0) {}
    FactSet(std::size_t num_facts, std::initializer_list<FactIndex> facts)
        : FactSet(num_facts) {
        for (FactIndex f : facts) insert(f);
    }
    FactSet(std::size_t num_facts, std::span<const FactIndex> facts)
        : FactSet(num_facts) {
        for (FactIndex f : facts) insert(f);
    }

    static FactSet from_words(std::size_t num_facts, std::vector<std::uint64_t> words) {
        FactSet s;
        s.size_ = num_facts;
        if (words.size() != (num_facts + 63) / 64)
            throw std::invalid_argument("FactSet::from_words: word count does not match fact count");
        if (num_facts % 64 != 0 && !words.empty() &&
            (words.back() >> (num_facts % 64)) != 0)
            throw std::invalid_argument("FactSet::from_words: bits set beyond fact count");
        s.words_ = std::move(words);
        return s;
    }

    std::size_t size() const { return size_; }

    bool contains(FactIndex f) const {
        return f < size_ && ((words_[f / 64] >> (f % 64)) & 1u);
    }
    void insert(FactIndex f) {
        check(f);
        words_[f / 64] |= std::uint64_t{1} << (f % 64);
    }
    void erase(FactIndex f) {
        check(f);
        words_[f / 64] &= ~(std::uint64_t{1} << (f % 64));
    }

    std::size_t count() const {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }
    bool empty() const {
        return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
    }

    bool is_subset_of(const FactSet& other) const {
        same_width(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }
    bool intersects(const FactSet& other) const {
        same_width(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    FactSet& operator|=(const FactSet& other) {
        same_width(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }
    FactSet& operator&=(const FactSet& other) {
        same_width(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }
    /// Set difference.
    FactSet& operator-=(const FactSet& other) {
        same_width(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
        return *this;
    }

    /// Ascending list of member indices.
    std::vector<FactIndex> indices() const {
        std::vector<FactIndex> out;
        for_each([&](FactIndex f) { out.push_back(f); });
        return out;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                int bit = std::countr_zero(w);
                fn(static_cast<FactIndex>(i * 64 + static_cast<std::size_t>(bit)));
                w &= w - 1;
            }
        }
    }

    std::span<const std::uint64_t> words() const { return words_; }
    std::uint64_t hash() const { return hash_words(words_); }

    friend bool operator==(const FactSet& a, const FactSet& b) {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }

private:
    void check(FactIndex f) const {
        if (f >= size_) throw std::out_of_range("FactSet: fact index out of range");
    }
    void same_width(const FactSet& other) const {
        if (other.size_ != size_) throw std::invalid_argument("FactSet: width mismatch");
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

inline FactSet operator|(FactSet a, const FactSet& b) { return a |= b; }
inline FactSet operator&(FactSet a, const FactSet& b) { return a &= b; }
inline FactSet operator-(FactSet a, const FactSet& b) { return a -= b; }

} // namespace pmplan

template <>
struct std::hash<pmplan::FactSet> {
    std::size_t operator()(const pmplan::FactSet& s) const noexcept {
        return static_cast<std::size_t>(s.hash());
    }
};

#endif // PMPLAN_FACT_SET_HPP
