#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace demazure {

/// Element of S_n in one-line notation: position p (1-based) holds w(p).
class Permutation {
public:
    /// Takes ownership of a one-line word; throws std::invalid_argument
    /// unless the entries are a bijection on 1..n with n >= 1.
    explicit Permutation(std::vector<int> entries);

    static Permutation identity(int n);

    int rank() const { return static_cast<int>(entries_.size()); }
    int operator()(int position) const { return entries_[position - 1]; }
    std::span<const int> entries() const { return entries_; }

    /// Positions of each value; result[v - 1] = w^{-1}(v).
    std::vector<int> positions() const;

    bool is_identity() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> entries_;
};

/// Ordered, duplicate-free list of values (the L of a hopping operator).
class HopList {
public:
    HopList() = default;
    /// Rejects repeated values and zero.
    explicit HopList(std::vector<int> values);

    std::span<const int> values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }

    /// Throws unless every value lies in 1..n.
    void check_range(int n) const;

    friend bool operator==(const HopList&, const HopList&) = default;

private:
    std::vector<int> values_;
};

/// Exponents (j_1, ..., j_{n-1}) of w = c(n-1,j_{n-1}) ... c(1,j_1).
struct InversionSequence {
    int n = 1;
    std::vector<int> js;

    /// 0 <= j_i <= n - i for every i.
    bool valid() const;

    friend bool operator==(const InversionSequence&, const InversionSequence&) = default;
};

Permutation identity(int n);

/// result(p) = w(v(p)).
Permutation compose(const Permutation& w, const Permutation& v);
Permutation inverse(const Permutation& w);

/// Simple transposition s_i, 1 <= i <= n-1.
Permutation simple(int i, int n);

/// Inversion count.
long long length(const Permutation& w);

/// Reduced word (i_1, ..., i_k) with s_{i_1} ... s_{i_k} = w, found by
/// stripping the rightmost descent until the identity is reached.
std::vector<int> reduced_word(const Permutation& w);

/// Product s_{i_1} s_{i_2} ... s_{i_k} in S_n.
Permutation word_product(std::span<const int> word, int n);

/// c(a,b) = s_a s_{a+1} ... s_{a+b-1}; cyclically shifts a..a+b.
Permutation string_generator(int a, int b, int n);

/// Element-wise image w(L), order preserved.
HopList apply_to_list(const Permutation& w, const HopList& list);

/// j_i = number of values greater than i that sit left of i.
InversionSequence inversion_sequence(const Permutation& w);

/// Same exponents computed as the number of positions left of i that are not
/// occupied by a value smaller than i.
InversionSequence inversion_sequence_by_free_slots(const Permutation& w);

/// c(n-1,j_{n-1}) ... c(2,j_2) c(1,j_1).
Permutation reconstruct(const InversionSequence& seq);

/// Values left of a in one-line order that exceed a, in order of appearance.
HopList left_subword(const Permutation& w, int a);

/// Bruhat order via the sorted-prefix (tableau) criterion.
bool bruhat_leq(const Permutation& u, const Permutation& w);

/// All n! permutations of [n] in lexicographic order.
std::vector<Permutation> all_permutations(int n);

} // namespace demazure
