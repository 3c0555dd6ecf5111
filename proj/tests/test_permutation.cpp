#include "demazure/permutation.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace demazure;

namespace {

Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }

} // namespace

TEST(Permutation, RejectsNonBijections) {
    EXPECT_THROW(P({}), std::invalid_argument);
    EXPECT_THROW(P({1, 1}), std::invalid_argument);
    EXPECT_THROW(P({0, 1}), std::invalid_argument);
    EXPECT_THROW(P({1, 3}), std::invalid_argument);
    EXPECT_NO_THROW(P({2, 3, 1}));
}

TEST(Permutation, PositionsInvertEntries) {
    const auto w = P({3, 1, 2});
    EXPECT_EQ(w(1), 3);
    EXPECT_EQ(w.positions(), (std::vector<int>{2, 3, 1}));
    EXPECT_TRUE(Permutation::identity(4).is_identity());
    EXPECT_FALSE(w.is_identity());
}

TEST(Permutation, ComposeAppliesRightFactorFirst) {
    const auto w = P({2, 3, 1});
    const auto v = P({2, 1, 3});
    EXPECT_EQ(compose(w, v), P({3, 2, 1}));
    EXPECT_EQ(compose(v, w), P({1, 3, 2}));
    EXPECT_THROW(compose(w, P({1, 2})), std::invalid_argument);
}

TEST(Permutation, InverseAndIdentity) {
    for (const auto& w : all_permutations(4)) {
        EXPECT_TRUE(compose(w, inverse(w)).is_identity());
        EXPECT_EQ(compose(identity(4), w), w);
    }
}

TEST(Permutation, SimpleTranspositions) {
    EXPECT_EQ(simple(2, 4), P({1, 3, 2, 4}));
    EXPECT_THROW(simple(0, 4), std::invalid_argument);
    EXPECT_THROW(simple(4, 4), std::invalid_argument);
    // Left multiplication swaps values, right multiplication swaps positions.
    const auto w = P({3, 1, 2});
    EXPECT_EQ(compose(simple(1, 3), w), P({3, 2, 1}));
    EXPECT_EQ(compose(w, simple(1, 3)), P({1, 3, 2}));
}

TEST(Permutation, LengthCountsInversions) {
    EXPECT_EQ(length(identity(5)), 0);
    EXPECT_EQ(length(P({3, 2, 1})), 3);
    EXPECT_EQ(length(P({4, 2, 3, 1})), 5);
    EXPECT_EQ(length(P({9, 8, 7, 6, 5, 4, 3, 2, 1})), 36);
}

TEST(Permutation, ReducedWordMultipliesBack) {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& w : all_permutations(n)) {
            const auto word = reduced_word(w);
            EXPECT_EQ(static_cast<long long>(word.size()), length(w));
            EXPECT_EQ(word_product(word, n), w);
        }
    }
    EXPECT_TRUE(reduced_word(identity(3)).empty());
}

TEST(Permutation, WordProductRejectsBadLetters) {
    const std::vector<int> word{1, 3};
    EXPECT_THROW(word_product(word, 3), std::invalid_argument);
}

TEST(Permutation, StringGeneratorShiftsCyclically) {
    EXPECT_EQ(string_generator(2, 4, 8), P({1, 3, 4, 5, 6, 2, 7, 8}));
    EXPECT_EQ(string_generator(3, 6, 9), P({1, 2, 4, 5, 6, 7, 8, 9, 3}));
    EXPECT_TRUE(string_generator(1, 0, 3).is_identity());
    const std::vector<int> word{2, 3, 4, 5};
    EXPECT_EQ(string_generator(2, 4, 8), word_product(word, 8));
    EXPECT_THROW(string_generator(0, 1, 4), std::invalid_argument);
    EXPECT_THROW(string_generator(3, 2, 4), std::invalid_argument);
}

TEST(Permutation, ApplyToListKeepsOrder) {
    const auto s3 = simple(3, 6);
    EXPECT_EQ(apply_to_list(s3, HopList({2, 3, 4, 5})), HopList({2, 4, 3, 5}));
    EXPECT_THROW(apply_to_list(s3, HopList({7})), std::invalid_argument);
}

TEST(HopList, RejectsZeroAndDuplicates) {
    EXPECT_THROW(HopList({1, 1}), std::invalid_argument);
    EXPECT_THROW(HopList({0}), std::invalid_argument);
    EXPECT_TRUE(HopList(std::vector<int>{}).empty());
    EXPECT_THROW(HopList({5}).check_range(4), std::invalid_argument);
}

TEST(InversionSequence, CountsLargerValuesToTheLeft) {
    EXPECT_EQ(inversion_sequence(P({3, 1, 2})).js, (std::vector<int>{1, 1}));
    EXPECT_EQ(inversion_sequence(identity(4)).js, (std::vector<int>{0, 0, 0}));
    EXPECT_EQ(inversion_sequence(P({4, 3, 2, 1})).js, (std::vector<int>{3, 2, 1}));
    EXPECT_EQ(inversion_sequence(P({1})).js, std::vector<int>{});
}

// For 312 the value 2 sits at position 3 and the first slot not holding a
// smaller value is 1, so "position minus first free slot" would give 2.
// Only one free slot actually precedes 2.
TEST(InversionSequence, FreeSlotCountNotFirstFreeOffset) {
    const auto w = P({3, 1, 2});
    EXPECT_EQ(inversion_sequence_by_free_slots(w).js[1], 1);
    EXPECT_NE(w.positions()[1] - 1, inversion_sequence(w).js[1]);
}

TEST(InversionSequence, TwoComputationsAgree) {
    for (const auto& w : all_permutations(5)) {
        EXPECT_EQ(inversion_sequence(w), inversion_sequence_by_free_slots(w));
    }
}

TEST(InversionSequence, ReconstructValidates) {
    EXPECT_THROW(reconstruct(InversionSequence{3, {3, 0}}), std::invalid_argument);
    EXPECT_THROW(reconstruct(InversionSequence{3, {0}}), std::invalid_argument);
    EXPECT_EQ(reconstruct(InversionSequence{3, {1, 1}}), P({3, 1, 2}));
}

TEST(LeftSubword, MatchesWorkedExample) {
    const auto w = P({8, 9, 1, 7, 2, 6, 4, 3, 5});
    EXPECT_EQ(left_subword(w, 2), HopList({8, 9, 7}));
    EXPECT_EQ(left_subword(w, 4), HopList({8, 9, 7, 6}));
    EXPECT_EQ(left_subword(w, 8), HopList(std::vector<int>{}));
}

TEST(Bruhat, BasicRelations) {
    EXPECT_TRUE(bruhat_leq(identity(4), P({4, 2, 3, 1})));
    EXPECT_TRUE(bruhat_leq(P({3, 1, 4, 2}), P({4, 2, 3, 1})));
    EXPECT_FALSE(bruhat_leq(P({3, 4, 1, 2}), P({4, 2, 3, 1})));
    EXPECT_FALSE(bruhat_leq(P({2, 1, 3}), P({1, 3, 2})));
    EXPECT_THROW(bruhat_leq(P({1, 2}), P({1, 2, 3})), std::invalid_argument);
}

// Subword property: u <= w iff some subword of a reduced word of w multiplies to u.
TEST(Bruhat, MatchesSubwordEnumeration) {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& w : all_permutations(n)) {
            const auto word = reduced_word(w);
            std::set<Permutation> below;
            for (unsigned mask = 0; mask < (1u << word.size()); ++mask) {
                std::vector<int> sub;
                for (std::size_t k = 0; k < word.size(); ++k) {
                    if (mask & (1u << k)) sub.push_back(word[k]);
                }
                below.insert(word_product(sub, n));
            }
            for (const auto& u : all_permutations(n)) {
                EXPECT_EQ(bruhat_leq(u, w), below.count(u) == 1)
                    << "u=" << testing::PrintToString(u.entries()) << " w=" << testing::PrintToString(w.entries());
            }
        }
    }
}

TEST(AllPermutations, CountAndOrder) {
    const auto all = all_permutations(5);
    EXPECT_EQ(all.size(), 120u);
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    EXPECT_THROW(all_permutations(0), std::invalid_argument);
}
