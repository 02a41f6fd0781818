#include "simvote/label_set.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

namespace simvote {
namespace {

LabelSet random_set(std::mt19937_64& rng, std::size_t universe) {
    LabelSet s(universe);
    for (std::size_t i = 0; i < universe; ++i)
        if (rng() % 3 == 0) s.insert(i);
    return s;
}

TEST(LabelSetTest, BasicOperations) {
    LabelSet a = LabelSet::of(70, {1, 5, 66});
    LabelSet b = LabelSet::of(70, {5, 66, 69});
    EXPECT_EQ(a.size(), 3U);
    EXPECT_TRUE(a.contains(66));
    EXPECT_FALSE(a.contains(69));
    EXPECT_EQ((a & b), LabelSet::of(70, {5, 66}));
    EXPECT_EQ((a | b), LabelSet::of(70, {1, 5, 66, 69}));
    EXPECT_EQ((a - b), LabelSet::of(70, {1}));
    EXPECT_TRUE(LabelSet::of(70, {5}).is_subset_of(a));
    EXPECT_FALSE(b.is_subset_of(a));
    EXPECT_EQ(b.first(), 5U);
    EXPECT_EQ(LabelSet(70).first(), 70U);
    EXPECT_TRUE(LabelSet(70).empty());
    EXPECT_EQ(LabelSet::full(70).size(), 70U);
}

TEST(LabelSetTest, OrderingMatchesMemberSequences) {
    std::mt19937_64 rng(7);
    for (std::size_t universe : {3U, 64U, 65U, 130U}) {
        for (int trial = 0; trial < 2000; ++trial) {
            const LabelSet a = random_set(rng, universe);
            const LabelSet b = trial % 5 == 0 ? a : random_set(rng, universe);
            const auto ma = a.members();
            const auto mb = b.members();
            EXPECT_EQ(LabelSet::lex_less(a, b), std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end()));
            const bool canonical = ma.size() != mb.size() ? ma.size() > mb.size() : ma < mb;
            EXPECT_EQ(LabelSet::canonical_less(a, b), canonical);
        }
    }
}

TEST(LabelSetTest, PrefixSortsFirst) {
    EXPECT_TRUE(LabelSet::lex_less(LabelSet::of(8, {1}), LabelSet::of(8, {1, 2})));
    EXPECT_FALSE(LabelSet::lex_less(LabelSet::of(8, {1, 2}), LabelSet::of(8, {1})));
    EXPECT_TRUE(LabelSet::lex_less(LabelSet::of(8, {1, 7}), LabelSet::of(8, {2})));
}

}  // namespace
}  // namespace simvote
