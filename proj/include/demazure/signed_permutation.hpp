#pragma once

#include "demazure/hopping.hpp"
#include "demazure/permutation.hpp"

#include <compare>
#include <span>
#include <vector>

namespace demazure {

/// Element of B_n: a permutation of [n] with a sign on each value. As a map on
/// ±[n] it satisfies w(-i) = -w(i).
class SignedPermutation {
public:
    /// Throws std::invalid_argument unless |entries| is a bijection on 1..n.
    explicit SignedPermutation(std::vector<int> entries);

    static SignedPermutation identity(int n);

    int rank() const { return static_cast<int>(entries_.size()); }
    /// Image of a signed position i in ±[n].
    int operator()(int i) const { return i > 0 ? entries_[i - 1] : -entries_[-i - 1]; }
    std::span<const int> entries() const { return entries_; }

    bool is_identity() const;

    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
    friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

private:
    std::vector<int> entries_;
};

/// Position of a signed value in the order 1 < 2 < ... < n < -n < ... < -1,
/// which is also its letter in the unfolded permutation of [2n].
int embed_value(int x, int n);
/// Inverse of embed_value: k in 1..2n to ±[n].
int signed_value(int k, int n);

/// Strict comparison in 1 < ... < n < -n < ... < -1.
bool b_less(int p, int q, int n);

/// Mirror a copy with flipped signs onto the right of w, as a permutation of [2n].
Permutation unfold(const SignedPermutation& w);
/// Same word written with signed values: w(1) ... w(n) -w(n) ... -w(1).
std::vector<int> unfold_signed(const SignedPermutation& w);
/// Inverse of unfold; rejects words whose entries at p and 2n+1-p are not negatives.
SignedPermutation fold(const Permutation& p);

SignedPermutation compose_b(const SignedPermutation& w, const SignedPermutation& v);
SignedPermutation inverse_b(const SignedPermutation& w);

/// s_i for i < n swaps i and i+1 (and -i, -(i+1)); s_n sends n to -n.
SignedPermutation simple_b(int i, int n);

/// Extended generator index k in 1..2n-1 to 1..n, with s_{n+j} = s_{n-j}.
int normalize_generator(int k, int n);

/// cB(a,b) = s_a s_{a+1} ... s_{a+b-1} with indices normalized.
SignedPermutation string_generator_b(int a, int b, int n);

/// Image w(L) of a signed list.
HopList apply_to_list_b(const SignedPermutation& w, const HopList& list);

struct SignedHopResult {
    SignedPermutation word;
    /// Trace over the unfolded word, values in embedded form.
    HopTrace trace;
};

/// Type-B hopping operator on the unfolding of w. Candidates must be greater
/// than t in the signed order; each swap of t and q is mirrored by -t and -q
/// unless t = -q.
SignedHopResult hop_b(const SignedPermutation& w, int t, const HopList& list);

/// Entries of unfold(w) left of value i with q > i or q <= -i.
HopList left_subword_b(const SignedPermutation& w, int i);

/// j_i = (position of i in unfold(w)) - (first position not holding ±1..±(i-1)).
std::vector<int> inversion_sequence_b(const SignedPermutation& w);

/// Inverse of inversion_sequence_b: value i (with -i mirrored) is placed j_i
/// slots after the first free slot of the unfolded word.
SignedPermutation reconstruct_b(std::span<const int> js, int n);

/// Exponents k_i with w = cB(n,k_n) ... cB(1,k_1) and
/// 0 <= k_i <= 2n+1-2i; k_i counts free slots left of i in the unfolding.
std::vector<int> string_exponents_b(const SignedPermutation& w);

/// cB(n,k_n) ... cB(1,k_1).
SignedPermutation compose_string_generators_b(std::span<const int> ks, int n);

/// Coxeter length in B_n (sum of the canonical string exponents).
long long length_b(const SignedPermutation& w);

/// (s_i ... s_j) ⋆ v for 1 <= i <= j <= 2n-1 via a single type-B hop.
SignedPermutation star_string_b(int i, int j, const SignedPermutation& v);

struct SignedDemazureResult {
    SignedPermutation product;
    /// One trace per t = 1..n.
    std::vector<HopTrace> traces;
};

/// w ⋆ v = h_{n, L_n} ... h_{1, L_1}(wv) in B_n.
SignedDemazureResult demazure_star_b(const SignedPermutation& w, const SignedPermutation& v);

SignedPermutation star_b(const SignedPermutation& w, const SignedPermutation& v);

/// fold(unfold(w) ⋆ unfold(v)) with the type-A hopping product in S_{2n}.
/// Agrees with the reduced-word oracle everywhere; demazure_star_b does not
/// (smallest counterexample: [-1,2] ⋆ [-1,-2] in B_2).
SignedPermutation demazure_star_b_unfolded(const SignedPermutation& w, const SignedPermutation& v);

/// All 2^n n! elements of B_n.
std::vector<SignedPermutation> all_signed_permutations(int n);

} // namespace demazure
