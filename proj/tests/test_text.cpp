#include "demazure/hopping.hpp"
#include "demazure/signed_permutation.hpp"
#include "demazure/text.hpp"

#include <gtest/gtest.h>

using namespace demazure;

TEST(Parse, IntLists) {
    EXPECT_EQ(parse_int_list("[1, 2,3]"), (std::vector<int>{1, 2, 3}));
    EXPECT_EQ(parse_int_list("-5 3  1"), (std::vector<int>{-5, 3, 1}));
    EXPECT_EQ(parse_int_list("[]"), std::vector<int>{});
    EXPECT_THROW(parse_int_list("1,,2"), std::invalid_argument);
    EXPECT_THROW(parse_int_list("1,x"), std::invalid_argument);
    EXPECT_THROW(parse_int_list("[1,2"), std::invalid_argument);
}

TEST(Parse, Permutations) {
    EXPECT_EQ(parse_permutation("6541723"), Permutation({6, 5, 4, 1, 7, 2, 3}));
    EXPECT_EQ(parse_permutation("6 5 4 1 7 2 3"), Permutation({6, 5, 4, 1, 7, 2, 3}));
    EXPECT_EQ(parse_permutation("1,2,3,4,5,6,7,8,9,10"), Permutation::identity(10));
    EXPECT_THROW(parse_permutation("12345678910"), std::invalid_argument);
    EXPECT_THROW(parse_permutation("1123"), std::invalid_argument);
    EXPECT_THROW(parse_permutation(""), std::invalid_argument);
}

TEST(Parse, SignedPermutations) {
    EXPECT_EQ(parse_signed("[-5,3,1,-2,4]"), SignedPermutation({-5, 3, 1, -2, 4}));
    EXPECT_EQ(parse_signed("-2 1"), SignedPermutation({-2, 1}));
    EXPECT_THROW(parse_signed("[1,-1]"), std::invalid_argument);
}

TEST(Format, Words) {
    EXPECT_EQ(format_permutation(Permutation({3, 1, 2})), "312");
    EXPECT_EQ(format_permutation(Permutation::identity(10)), "1 2 3 4 5 6 7 8 9 10");
    EXPECT_EQ(format_signed(SignedPermutation({-2, -5, -1, -3, -4})), "[-2,-5,-1,-3,-4]");
    const std::vector<int> values{6, 5, 4};
    EXPECT_EQ(format_list(values), "[6,5,4]");
}

TEST(Trace, LinesParseBackToSteps) {
    const auto r = hop(parse_permutation("891726435"), 1, HopList({3, 6, 5, 7, 2}));
    const auto lines = render_trace(r.trace);
    const auto steps = r.trace.steps();
    ASSERT_EQ(lines.size(), steps.size());
    for (std::size_t k = 0; k < lines.size(); ++k) EXPECT_EQ(parse_trace_line(lines[k]), steps[k]);
}

TEST(Trace, SignedLines) {
    const auto r = hop_b(SignedPermutation({2, 3, 5, -1, 4}), 1, HopList({-2, -3, 4}));
    const auto lines = render_trace_b(r.trace);
    ASSERT_EQ(lines.size(), 3u);
    EXPECT_EQ(lines.back(), "[-1,2,5,3,4,-4,-3,-5,-2,1]");
    const auto steps = r.trace.steps();
    for (std::size_t k = 0; k < lines.size(); ++k) EXPECT_EQ(parse_trace_line_b(lines[k]), steps[k]);
}

TEST(Trace, LargeRankUsesSeparators) {
    std::vector<int> e{2, 1, 3, 4, 5, 6, 7, 8, 9, 10};
    const auto r = hop(Permutation(e), 1, HopList({10}));
    const auto lines = render_trace(r.trace);
    ASSERT_EQ(lines.size(), 2u);
    EXPECT_EQ(parse_trace_line(lines[0]), Permutation(e));
    EXPECT_EQ(lines[1], "2 10 3 4 5 6 7 8 9 1");
}
