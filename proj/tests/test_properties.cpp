// Exhaustive and seeded sweeps over small groups.

#include "demazure/bench.hpp"
#include "demazure/hopping.hpp"
#include "demazure/oracle.hpp"
#include "demazure/text.hpp"
#include "demazure/verify.hpp"

#include <gtest/gtest.h>

using namespace demazure;

namespace {

void expect_pass(const SuiteResult& r) {
    EXPECT_TRUE(r.passed()) << r.name << ": " << r.failures << "/" << r.checked << " failed, e.g. "
                            << r.counterexample;
}

void expect_fail(const SuiteResult& r) {
    EXPECT_GT(r.checked, 0);
    EXPECT_GT(r.failures, 0) << r.name;
}

} // namespace

TEST(Properties, OracleAgreementTypeA) {
    for (int n = 1; n <= 4; ++n) expect_pass(check_oracle_exhaustive_a(n));
    expect_pass(check_oracle_sampled_a(8, 500, 7));
}

TEST(Properties, UnfoldedProductAgreesWithOracle) {
    for (int n = 1; n <= 3; ++n) expect_pass(check_oracle_exhaustive_b(n, SignedProduct::Unfolded));
    expect_pass(check_oracle_sampled_b(5, 500, 7, SignedProduct::Unfolded));
}

TEST(Properties, MirroredHoppingDisagreesFromRankTwo) {
    expect_pass(check_oracle_exhaustive_b(1));
    const auto b3 = check_oracle_exhaustive_b(3);
    EXPECT_EQ(b3.checked, 2304);
    EXPECT_EQ(b3.failures, 116);
}

TEST(Properties, CommutationAboveTrackedValue) {
    expect_pass(check_commutation_a(4, 3, IndexRange::Above));
    expect_pass(check_string_commutation_a(4, 3, IndexRange::Above));
    expect_pass(check_commutation_b(3, 2, IndexRange::Above));
    expect_pass(check_string_commutation_b(3, 2, IndexRange::AtOrAbove, true));
}

TEST(Properties, CommutationAtTrackedValueFails) {
    expect_fail(check_commutation_a(3, 2, IndexRange::Equal));
    expect_fail(check_commutation_b(2, 2, IndexRange::Equal));
    expect_fail(check_string_commutation_b(2, 2, IndexRange::Above));
}

TEST(Properties, MonoidLaws) {
    expect_pass(check_associativity_a(5, 300, 3));
    expect_pass(check_associativity_b(3, 300, 3, SignedProduct::Unfolded));
    expect_pass(check_identity_laws_a(5));
    expect_pass(check_identity_laws_b(3));
    expect_pass(check_identity_laws_b(3, SignedProduct::Unfolded));
    expect_pass(check_simple_idempotent(6));
}

TEST(Properties, RoundTrips) {
    for (int n = 1; n <= 6; ++n) expect_pass(check_roundtrip_a(n));
    for (int n = 1; n <= 3; ++n) expect_pass(check_roundtrip_b_exhaustive(n));
    expect_pass(check_roundtrip_b_sampled(6, 500, 9));
}

TEST(Properties, IntervalProductOnS3) { expect_pass(check_interval_product_exhaustive(3)); }

TEST(Properties, StarTraceReplaysStepByStep) {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 50; ++k) {
        const auto w = random_permutation(7, rng);
        const auto v = random_permutation(7, rng);
        const auto r = demazure_star(w, v);
        Permutation current = compose(w, v);
        for (std::size_t t = 0; t < r.traces.size(); ++t) {
            EXPECT_EQ(r.traces[t].start(), current);
            EXPECT_EQ(HopList(std::vector<int>(r.traces[t].list().begin(), r.traces[t].list().end())),
                      left_subword(w, static_cast<int>(t) + 1));
            current = hop(current, static_cast<int>(t) + 1, left_subword(w, static_cast<int>(t) + 1)).word;
            EXPECT_EQ(r.traces[t].final_word(), current);
        }
        EXPECT_EQ(current, r.product);
    }
}

TEST(Properties, OrderedListsCount) {
    EXPECT_EQ(ordered_lists({1, 2, 3, 4}, 4).size(), 65u);
    EXPECT_EQ(ordered_lists({1, 2, 3}, 1).size(), 4u);
}

TEST(Properties, VerifyTableIsDeterministic) {
    std::vector<SuiteResult> a{check_oracle_sampled_a(6, 50, 5), check_roundtrip_b_sampled(4, 50, 5)};
    std::vector<SuiteResult> b{check_oracle_sampled_a(6, 50, 5), check_roundtrip_b_sampled(4, 50, 5)};
    EXPECT_EQ(format_suite_table(a), format_suite_table(b));
}
