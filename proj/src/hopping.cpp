#include "demazure/hopping.hpp"

#include <stdexcept>
#include <string>

namespace demazure {

namespace {

void apply_swap(std::vector<int>& word, std::vector<int>& pos, int a, int b) {
    const int pa = pos[a - 1];
    const int pb = pos[b - 1];
    word[pa - 1] = b;
    word[pb - 1] = a;
    pos[a - 1] = pb;
    pos[b - 1] = pa;
}

void apply_hop_swap(std::vector<int>& word, std::vector<int>& pos, const HopSwap& s) {
    apply_swap(word, pos, s.tracked, s.target);
    if (s.mirrored) {
        const int m = static_cast<int>(word.size()) + 1;
        apply_swap(word, pos, m - s.tracked, m - s.target);
    }
}

// In-place type-A hop. Only t and the chosen target move, and the target
// lands left of t, so the whole chain of targets is the sequence of
// right-to-left records (by index in L) among eligible entries right of t.
// `trace` may be null; `chain` is scratch space.
void hop_in_place(std::vector<int>& word, std::vector<int>& pos, int t, std::span<const int> list,
                  std::vector<int>& rank_in_list, std::vector<int>& chain, HopTrace* trace) {
    const int n = static_cast<int>(word.size());
    for (std::size_t k = 0; k < list.size(); ++k) rank_in_list[list[k]] = static_cast<int>(k);

    chain.clear();
    int best = -1;
    for (int p = n; p > pos[t - 1]; --p) {
        const int q = word[p - 1];
        const int r = rank_in_list[q];
        if (q > t && r > best) {
            best = r;
            chain.push_back(q);
        }
    }
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        apply_swap(word, pos, t, *it);
        if (trace) trace->record({t, *it, false});
    }

    for (int q : list) rank_in_list[q] = -1;
}

} // namespace

std::vector<Permutation> HopTrace::steps() const {
    std::vector<Permutation> out;
    out.reserve(size());
    out.push_back(start_);
    std::vector<int> word(start_.entries().begin(), start_.entries().end());
    std::vector<int> pos = start_.positions();
    for (const auto& s : swaps_) {
        apply_hop_swap(word, pos, s);
        out.emplace_back(word);
    }
    return out;
}

Permutation HopTrace::final_word() const {
    std::vector<int> word(start_.entries().begin(), start_.entries().end());
    std::vector<int> pos = start_.positions();
    for (const auto& s : swaps_) apply_hop_swap(word, pos, s);
    return Permutation(std::move(word));
}

HopResult hop(const Permutation& w, int t, const HopList& list) {
    const int n = w.rank();
    if (t < 1 || t > n) {
        throw std::invalid_argument("hop: tracked value " + std::to_string(t) + " outside 1.." +
                                    std::to_string(n));
    }
    list.check_range(n);
    std::vector<int> word(w.entries().begin(), w.entries().end());
    std::vector<int> pos = w.positions();
    std::vector<int> rank_in_list(n + 1, -1);
    std::vector<int> chain;
    HopTrace trace(w, t, std::vector<int>(list.values().begin(), list.values().end()));
    hop_in_place(word, pos, t, list.values(), rank_in_list, chain, &trace);
    return {Permutation(std::move(word)), std::move(trace)};
}

Permutation star_string(int a, int b, const Permutation& v) {
    const int n = v.rank();
    std::vector<int> targets;
    for (int k = a + 1; k <= a + b; ++k) targets.push_back(k);
    return hop(compose(string_generator(a, b, n), v), a, HopList(std::move(targets))).word;
}

namespace {

// Runs the n-1 hops of w ⋆ v on wv, recording traces when `traces` is non-null.
Permutation run_star(const Permutation& w, const Permutation& v, std::vector<HopTrace>* traces) {
    const Permutation wv = compose(w, v);
    const int n = w.rank();

    std::vector<int> word(wv.entries().begin(), wv.entries().end());
    std::vector<int> pos = wv.positions();
    std::vector<int> rank_in_list(n + 1, -1);
    std::vector<int> chain;
    if (traces) traces->reserve(n > 1 ? n - 1 : 0);

    const auto w_pos = w.positions();
    std::vector<int> list;
    for (int t = 1; t < n; ++t) {
        // left subword of w at t
        list.clear();
        for (int p = 1; p < w_pos[t - 1]; ++p) {
            if (w(p) > t) list.push_back(w(p));
        }
        HopTrace* trace = traces ? &traces->emplace_back(Permutation(word), t, list) : nullptr;
        hop_in_place(word, pos, t, list, rank_in_list, chain, trace);
    }
    return Permutation(std::move(word));
}

} // namespace

DemazureResult demazure_star(const Permutation& w, const Permutation& v) {
    std::vector<HopTrace> traces;
    auto product = run_star(w, v, &traces);
    return {std::move(product), std::move(traces)};
}

Permutation star(const Permutation& w, const Permutation& v) { return run_star(w, v, nullptr); }

} // namespace demazure
