#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace simvote {

/// Fixed-universe set of label indices backed by a bitset. Domains up to 128
/// labels stay inline.
class LabelSet {
public:
    LabelSet() = default;
    explicit LabelSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

    static LabelSet full(std::size_t universe);
    static LabelSet of(std::size_t universe, std::initializer_list<std::size_t> members);

    std::size_t universe() const noexcept { return universe_; }

    void insert(std::size_t i) { words_[i / 64] |= bit(i); }
    void erase(std::size_t i) { words_[i / 64] &= ~bit(i); }
    bool contains(std::size_t i) const noexcept { return i < universe_ && (words_[i / 64] & bit(i)) != 0; }

    std::size_t size() const noexcept;
    bool empty() const noexcept;

    bool intersects(const LabelSet& other) const noexcept;
    bool is_subset_of(const LabelSet& other) const noexcept;

    LabelSet& operator&=(const LabelSet& other) noexcept;
    LabelSet& operator|=(const LabelSet& other) noexcept;
    LabelSet& operator-=(const LabelSet& other) noexcept;

    friend LabelSet operator&(LabelSet a, const LabelSet& b) noexcept { return a &= b; }
    friend LabelSet operator|(LabelSet a, const LabelSet& b) noexcept { return a |= b; }
    friend LabelSet operator-(LabelSet a, const LabelSet& b) noexcept { return a -= b; }

    friend bool operator==(const LabelSet& a, const LabelSet& b) noexcept {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }

    /// Smallest member; universe() when empty.
    std::size_t first() const noexcept;

    /// Members in ascending index order.
    std::vector<std::size_t> members() const;

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t word = words_[w];
            while (word != 0) {
                fn(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
                word &= word - 1;
            }
        }
    }

    /// Lexicographic order of the ascending member sequences.
    static bool lex_less(const LabelSet& a, const LabelSet& b) noexcept;

    /// Canonical subset order: larger sets first, ties broken lexicographically.
    static bool canonical_less(const LabelSet& a, const LabelSet& b) noexcept;

    std::size_t hash() const noexcept;

private:
    static std::size_t word_count(std::size_t universe) noexcept { return (universe + 63) / 64; }
    static std::uint64_t bit(std::size_t i) noexcept { return std::uint64_t{1} << (i % 64); }

    std::size_t universe_ = 0;
    boost::container::small_vector<std::uint64_t, 2> words_;
};

struct LabelSetHash {
    std::size_t operator()(const LabelSet& s) const noexcept { return s.hash(); }
};

}  // namespace simvote
