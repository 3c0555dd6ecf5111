#pragma once

// Reference implementations that do not use hopping operators. They fold the
// 0-Hecke rule s ⋆ v = v (if l(sv) < l(v)) or sv (otherwise) over a reduced
// word, and enumerate Bruhat intervals directly.

#include "demazure/permutation.hpp"
#include "demazure/signed_permutation.hpp"

#include <map>
#include <span>
#include <vector>

namespace demazure {

/// Largest rank accepted by lower_interval.
inline constexpr int kIntervalRankCap = 6;
/// Largest rank accepted by verify_interval_product.
inline constexpr int kIntervalProductRankCap = 5;
inline constexpr int kBfsRankCapA = 6;
inline constexpr int kBfsRankCapB = 4;

enum class DescentPolicy { Rightmost, Leftmost };

/// Reduced word of w obtained by repeatedly stripping the chosen right descent.
std::vector<int> reduced_word_by(const Permutation& w, DescentPolicy policy);

/// s_i ⋆ v in constant time from the positions of i and i+1.
Permutation star_simple_left(int i, const Permutation& v);

/// s_{i_1} ⋆ (s_{i_2} ⋆ ... (s_{i_k} ⋆ v)) for an arbitrary generator word.
Permutation star_word(std::span<const int> word, const Permutation& v);

/// w ⋆ v by folding star_simple_left over reduced_word(w).
Permutation demazure_oracle(const Permutation& w, const Permutation& v);

/// fold(unfold(w) ⋆ unfold(v)) with the type-A oracle in S_{2n}.
SignedPermutation demazure_oracle_b(const SignedPermutation& w, const SignedPermutation& v);

/// {u : u <= w}, sorted. Throws std::out_of_range above kIntervalRankCap.
std::vector<Permutation> lower_interval(const Permutation& w);

/// [e, w ⋆ u] == {ab : a <= w, b <= u}. Throws above kIntervalProductRankCap.
bool verify_interval_product(const Permutation& w, const Permutation& u);

/// Cayley-graph distances from the identity under simple generators.
std::map<Permutation, int> length_by_bfs(int n);
std::map<SignedPermutation, int> length_by_bfs_b(int n);

/// Covering pairs (lower, upper) of the Bruhat order restricted to `elements`,
/// by transitive reduction of bruhat_leq. Indices refer to `elements`.
std::vector<std::pair<int, int>> hasse_edges(std::span<const Permutation> elements);

} // namespace demazure
