#pragma once

// Property sweeps shared by the `verify` command and the acceptance suite.
// Each sweep counts checked cases and failures and keeps the first
// counterexample in readable form.

#include "demazure/permutation.hpp"
#include "demazure/signed_permutation.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace demazure {

struct SuiteResult {
    explicit SuiteResult(std::string suite_name = {}) : name(std::move(suite_name)) {}

    std::string name;
    long long checked = 0;
    long long failures = 0;
    std::string counterexample;

    bool passed() const { return checked > 0 && failures == 0; }
    void fail(std::string example) {
        if (failures++ == 0) counterexample = std::move(example);
    }
};

/// Which generator indices i a commutation sweep pairs with tracked value t.
enum class IndexRange {
    AtOrAbove, ///< i >= t
    Above,     ///< i > t
    Equal,     ///< i == t
};

/// Product used for signed permutations.
enum class SignedProduct {
    Hopping,  ///< demazure_star_b: n type-B hops with mirrored swaps
    Unfolded, ///< demazure_star_b_unfolded: type-A hops on the unfolding
};

/// All ordered duplicate-free lists over `alphabet` of length <= max_len.
std::vector<std::vector<int>> ordered_lists(const std::vector<int>& alphabet, int max_len);

SuiteResult check_oracle_exhaustive_a(int n);
SuiteResult check_oracle_sampled_a(int n, int samples, std::uint64_t seed);
SuiteResult check_oracle_exhaustive_b(int n, SignedProduct product = SignedProduct::Hopping);
SuiteResult check_oracle_sampled_b(int n, int samples, std::uint64_t seed,
                                   SignedProduct product = SignedProduct::Hopping);

/// [e, w ⋆ u] == {ab : a <= w, b <= u} for every pair in S_n.
SuiteResult check_interval_product_exhaustive(int n);

/// s_i h_{t,L}(w) == h_{t,s_i(L)}(s_i w) over all w in S_n, t in [n] and lists
/// up to max_len that do not contain t.
SuiteResult check_commutation_a(int n, int max_len, IndexRange range);
/// c(a,b) h_{t,L}(w) == h_{t,c(a,b)(L)}(c(a,b) w), a ranging per `range`.
SuiteResult check_string_commutation_a(int n, int max_len, IndexRange range);
/// Type-B versions over all of B_n, t in [n], lists over ±[n] without t.
SuiteResult check_commutation_b(int n, int max_len, IndexRange range);
/// With `generators_above_t`, only strings whose normalized indices all exceed t.
SuiteResult check_string_commutation_b(int n, int max_len, IndexRange range,
                                       bool generators_above_t = false);

SuiteResult check_associativity_a(int n, int samples, std::uint64_t seed);
SuiteResult check_associativity_b(int n, int samples, std::uint64_t seed,
                                  SignedProduct product = SignedProduct::Hopping);
/// e ⋆ w == w ⋆ e == w over S_n (exhaustive).
SuiteResult check_identity_laws_a(int n);
SuiteResult check_identity_laws_b(int n, SignedProduct product = SignedProduct::Hopping);
/// s ⋆ s == s for every simple generator of S_n and B_n, n up to max_rank.
SuiteResult check_simple_idempotent(int max_rank);

SuiteResult check_roundtrip_a(int n);
SuiteResult check_roundtrip_b_exhaustive(int n);
SuiteResult check_roundtrip_b_sampled(int n, int samples, std::uint64_t seed);

struct VerifyOptions {
    std::uint64_t seed = 1;
    int samples = 10000;
    int samples_b = 5000;
};

/// The full sweep run by `demazure verify`.
std::vector<SuiteResult> run_verify(const VerifyOptions& options);

std::string format_suite_table(const std::vector<SuiteResult>& results);

} // namespace demazure
