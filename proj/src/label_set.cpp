#include "simvote/label_set.hpp"

#include <cassert>

namespace simvote {

LabelSet LabelSet::full(std::size_t universe) {
    LabelSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(i);
    return s;
}

LabelSet LabelSet::of(std::size_t universe, std::initializer_list<std::size_t> members) {
    LabelSet s(universe);
    for (std::size_t m : members) s.insert(m);
    return s;
}

std::size_t LabelSet::size() const noexcept {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool LabelSet::empty() const noexcept {
    for (std::uint64_t w : words_)
        if (w != 0) return false;
    return true;
}

bool LabelSet::intersects(const LabelSet& other) const noexcept {
    assert(universe_ == other.universe_);
    for (std::size_t w = 0; w < words_.size(); ++w)
        if ((words_[w] & other.words_[w]) != 0) return true;
    return false;
}

bool LabelSet::is_subset_of(const LabelSet& other) const noexcept {
    assert(universe_ == other.universe_);
    for (std::size_t w = 0; w < words_.size(); ++w)
        if ((words_[w] & ~other.words_[w]) != 0) return false;
    return true;
}

LabelSet& LabelSet::operator&=(const LabelSet& other) noexcept {
    assert(universe_ == other.universe_);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
}

LabelSet& LabelSet::operator|=(const LabelSet& other) noexcept {
    assert(universe_ == other.universe_);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
}

LabelSet& LabelSet::operator-=(const LabelSet& other) noexcept {
    assert(universe_ == other.universe_);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
    return *this;
}

std::size_t LabelSet::first() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return universe_;
}

std::vector<std::size_t> LabelSet::members() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
}

bool LabelSet::lex_less(const LabelSet& a, const LabelSet& b) noexcept {
    assert(a.universe_ == b.universe_);
    // Below the lowest differing index both sequences agree. If that index
    // belongs to a, then a < b exactly when b still has a member beyond it
    // (otherwise b is a proper prefix of a).
    for (std::size_t w = 0; w < a.words_.size(); ++w) {
        const std::uint64_t diff = a.words_[w] ^ b.words_[w];
        if (diff == 0) continue;
        const int pos = std::countr_zero(diff);
        const std::uint64_t d = std::uint64_t{1} << pos;
        const LabelSet& other = (a.words_[w] & d) != 0 ? b : a;
        const std::uint64_t above = pos == 63 ? 0 : ~((d << 1) - 1);
        bool other_continues = (other.words_[w] & above) != 0;
        for (std::size_t v = w + 1; !other_continues && v < other.words_.size(); ++v)
            other_continues = other.words_[v] != 0;
        const bool d_in_a = &other == &b;
        return d_in_a == other_continues;
    }
    return false;
}

bool LabelSet::canonical_less(const LabelSet& a, const LabelSet& b) noexcept {
    const std::size_t sa = a.size();
    const std::size_t sb = b.size();
    if (sa != sb) return sa > sb;
    return lex_less(a, b);
}

std::size_t LabelSet::hash() const noexcept {
    std::size_t h = std::hash<std::size_t>{}(universe_);
    for (std::uint64_t w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

}  // namespace simvote
