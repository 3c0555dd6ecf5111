#pragma once

#include "demazure/permutation.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace demazure {

/// One exchange performed by a hopping operator. Values are in the word's own
/// alphabet (for signed permutations: the unfolded integer form, where -i is
/// written 2n+1-i). A mirrored swap also exchanges the negations of both values.
struct HopSwap {
    int tracked = 0;
    int target = 0;
    bool mirrored = false;

    friend bool operator==(const HopSwap&, const HopSwap&) = default;
};

/// Record of a single hop: the starting word and each executed swap.
/// steps() materializes the snapshot sequence (start, then one word per swap).
class HopTrace {
public:
    HopTrace(Permutation start, int tracked, std::vector<int> list)
        : start_(std::move(start)), tracked_(tracked), list_(std::move(list)) {}

    const Permutation& start() const { return start_; }
    int tracked() const { return tracked_; }
    std::span<const int> list() const { return list_; }
    std::span<const HopSwap> swaps() const { return swaps_; }

    /// Number of snapshots (swaps + 1).
    std::size_t size() const { return swaps_.size() + 1; }

    std::vector<Permutation> steps() const;
    Permutation final_word() const;

    void record(HopSwap swap) { swaps_.push_back(swap); }

private:
    Permutation start_;
    int tracked_;
    std::vector<int> list_;
    std::vector<HopSwap> swaps_;
};

struct HopResult {
    Permutation word;
    HopTrace trace;
};

/// Hopping operator h_{t,L}: while some element of L that is greater than t
/// sits right of t, swap t with the candidate latest in L.
HopResult hop(const Permutation& w, int t, const HopList& list);

/// (s_a ... s_{a+b-1}) ⋆ v, computed as h_{a,[a+1..a+b]}(c(a,b) v).
Permutation star_string(int a, int b, const Permutation& v);

struct DemazureResult {
    Permutation product;
    /// One trace per t = 1..n-1, in application order.
    std::vector<HopTrace> traces;
};

/// w ⋆ v = h_{n-1, L_{n-1}} ... h_{2, L_2} h_{1, L_1}(wv).
DemazureResult demazure_star(const Permutation& w, const Permutation& v);

/// Product only; same algorithm as demazure_star.
Permutation star(const Permutation& w, const Permutation& v);

} // namespace demazure
