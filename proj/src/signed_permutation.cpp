#include "demazure/signed_permutation.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace demazure {

SignedPermutation::SignedPermutation(std::vector<int> entries) : entries_(std::move(entries)) {
    const int n = rank();
    if (n < 1) {
        throw std::invalid_argument("signed permutation rank must be at least 1");
    }
    std::vector<char> seen(n + 1, 0);
    for (int v : entries_) {
        const int a = std::abs(v);
        if (a < 1 || a > n || seen[a]) {
            throw std::invalid_argument("absolute values are not a bijection on 1.." +
                                        std::to_string(n));
        }
        seen[a] = 1;
    }
}

SignedPermutation SignedPermutation::identity(int n) {
    if (n < 1) {
        throw std::invalid_argument("identity: rank must be at least 1");
    }
    std::vector<int> e(n);
    std::iota(e.begin(), e.end(), 1);
    return SignedPermutation(std::move(e));
}

bool SignedPermutation::is_identity() const {
    for (std::size_t p = 0; p < entries_.size(); ++p) {
        if (entries_[p] != static_cast<int>(p) + 1) return false;
    }
    return true;
}

namespace {

void check_signed(int x, int n, const char* what) {
    if (x == 0 || x < -n || x > n) {
        throw std::invalid_argument(std::string(what) + ": value " + std::to_string(x) +
                                    " outside ±[" + std::to_string(n) + "]");
    }
}

void check_signed_list(const HopList& list, int n) {
    for (int v : list.values()) check_signed(v, n, "hop list");
}

void require_same_rank(const SignedPermutation& a, const SignedPermutation& b, const char* op) {
    if (a.rank() != b.rank()) {
        throw std::invalid_argument(std::string(op) + ": rank mismatch (" + std::to_string(a.rank()) +
                                    " vs " + std::to_string(b.rank()) + ")");
    }
}

void swap_values(std::vector<int>& word, std::vector<int>& pos, int a, int b) {
    const int pa = pos[a - 1];
    const int pb = pos[b - 1];
    word[pa - 1] = b;
    word[pb - 1] = a;
    pos[a - 1] = pb;
    pos[b - 1] = pa;
}

std::vector<int> embed_list(std::span<const int> list, int n) {
    std::vector<int> out;
    out.reserve(list.size());
    for (int v : list) out.push_back(embed_value(v, n));
    return out;
}

// Type-B hop on an unfolded word held in embedded form. t and list are embedded.
void hop_b_in_place(std::vector<int>& word, std::vector<int>& pos, int t, std::span<const int> list,
                    std::vector<int>& rank_in_list, HopTrace& trace) {
    const int size = static_cast<int>(word.size());
    const int mirror = size + 1;
    for (std::size_t k = 0; k < list.size(); ++k) rank_in_list[list[k]] = static_cast<int>(k);

    // t moves strictly right on every swap, so at most size - 1 iterations.
    while (true) {
        int best = -1;
        int target = 0;
        for (int p = pos[t - 1] + 1; p <= size; ++p) {
            const int q = word[p - 1];
            if (q > t && rank_in_list[q] > best) {
                best = rank_in_list[q];
                target = q;
            }
        }
        if (target == 0) break;
        swap_values(word, pos, t, target);
        const bool mirrored = target != mirror - t;
        if (mirrored) swap_values(word, pos, mirror - t, mirror - target);
        trace.record({t, target, mirrored});
    }

    for (int q : list) rank_in_list[q] = -1;
}

} // namespace

int embed_value(int x, int n) {
    check_signed(x, n, "embed_value");
    return x > 0 ? x : 2 * n + 1 + x;
}

int signed_value(int k, int n) {
    if (k < 1 || k > 2 * n) {
        throw std::invalid_argument("signed_value: letter " + std::to_string(k) + " outside 1.." +
                                    std::to_string(2 * n));
    }
    return k <= n ? k : k - (2 * n + 1);
}

bool b_less(int p, int q, int n) { return embed_value(p, n) < embed_value(q, n); }

std::vector<int> unfold_signed(const SignedPermutation& w) {
    const int n = w.rank();
    std::vector<int> out(2 * n);
    for (int p = 1; p <= n; ++p) {
        out[p - 1] = w(p);
        out[2 * n - p] = -w(p);
    }
    return out;
}

Permutation unfold(const SignedPermutation& w) {
    const int n = w.rank();
    auto word = unfold_signed(w);
    for (int& x : word) x = embed_value(x, n);
    return Permutation(std::move(word));
}

SignedPermutation fold(const Permutation& p) {
    const int size = p.rank();
    if (size % 2 != 0) {
        throw std::invalid_argument("fold: unfolded word must have even length");
    }
    const int n = size / 2;
    std::vector<int> entries(n);
    for (int k = 1; k <= n; ++k) {
        if (p(k) + p(size + 1 - k) != size + 1) {
            throw std::invalid_argument("fold: mirror property violated at position " +
                                        std::to_string(k));
        }
        entries[k - 1] = signed_value(p(k), n);
    }
    return SignedPermutation(std::move(entries));
}

SignedPermutation compose_b(const SignedPermutation& w, const SignedPermutation& v) {
    require_same_rank(w, v, "compose_b");
    std::vector<int> out(w.rank());
    for (int i = 1; i <= w.rank(); ++i) out[i - 1] = w(v(i));
    return SignedPermutation(std::move(out));
}

SignedPermutation inverse_b(const SignedPermutation& w) {
    std::vector<int> out(w.rank());
    for (int i = 1; i <= w.rank(); ++i) {
        const int image = w(i);
        out[std::abs(image) - 1] = image > 0 ? i : -i;
    }
    return SignedPermutation(std::move(out));
}

SignedPermutation simple_b(int i, int n) {
    if (i < 1 || i > n) {
        throw std::invalid_argument("simple_b: generator index " + std::to_string(i) + " outside 1.." +
                                    std::to_string(n));
    }
    std::vector<int> e(n);
    std::iota(e.begin(), e.end(), 1);
    if (i < n) {
        std::swap(e[i - 1], e[i]);
    } else {
        e[n - 1] = -n;
    }
    return SignedPermutation(std::move(e));
}

int normalize_generator(int k, int n) {
    if (k < 1 || k > 2 * n - 1) {
        throw std::invalid_argument("normalize_generator: index " + std::to_string(k) +
                                    " outside 1.." + std::to_string(2 * n - 1));
    }
    return k <= n ? k : 2 * n - k;
}

SignedPermutation string_generator_b(int a, int b, int n) {
    if (a < 1 || a > n || b < 0 || b > 2 * n - a) {
        throw std::invalid_argument("string_generator_b: cB(" + std::to_string(a) + "," +
                                    std::to_string(b) + ") out of range for rank " +
                                    std::to_string(n));
    }
    // Right-multiply simple generators in order; on signed words s_i (i < n)
    // swaps positions i, i+1 and s_n negates position n.
    std::vector<int> e(n);
    std::iota(e.begin(), e.end(), 1);
    for (int k = a; k < a + b; ++k) {
        const int g = normalize_generator(k, n);
        if (g < n) {
            std::swap(e[g - 1], e[g]);
        } else {
            e[n - 1] = -e[n - 1];
        }
    }
    return SignedPermutation(std::move(e));
}

HopList apply_to_list_b(const SignedPermutation& w, const HopList& list) {
    check_signed_list(list, w.rank());
    std::vector<int> image;
    image.reserve(list.size());
    for (int v : list.values()) image.push_back(w(v));
    return HopList(std::move(image));
}

SignedHopResult hop_b(const SignedPermutation& w, int t, const HopList& list) {
    const int n = w.rank();
    check_signed(t, n, "hop_b tracked value");
    check_signed_list(list, n);

    const Permutation start = unfold(w);
    std::vector<int> word(start.entries().begin(), start.entries().end());
    std::vector<int> pos = start.positions();
    std::vector<int> rank_in_list(2 * n + 1, -1);
    const auto embedded = embed_list(list.values(), n);
    HopTrace trace(start, embed_value(t, n), embedded);
    hop_b_in_place(word, pos, trace.tracked(), embedded, rank_in_list, trace);
    return {fold(Permutation(std::move(word))), std::move(trace)};
}

HopList left_subword_b(const SignedPermutation& w, int i) {
    const int n = w.rank();
    if (i < 1 || i > n) {
        throw std::invalid_argument("left_subword_b: value " + std::to_string(i) + " outside 1.." +
                                    std::to_string(n));
    }
    std::vector<int> out;
    for (int q : unfold_signed(w)) {
        if (q == i) break;
        if (q > i || q <= -i) out.push_back(q);
    }
    return HopList(std::move(out));
}

std::vector<int> inversion_sequence_b(const SignedPermutation& w) {
    const int n = w.rank();
    const auto pos = unfold(w).positions();
    std::vector<char> occupied(2 * n + 2, 0);
    std::vector<int> js(n);
    int first_free = 1;
    for (int i = 1; i <= n; ++i) {
        while (occupied[first_free]) ++first_free;
        const int p = pos[embed_value(i, n) - 1];
        js[i - 1] = p - first_free;
        occupied[p] = 1;
        occupied[2 * n + 1 - p] = 1;
    }
    return js;
}

SignedPermutation reconstruct_b(std::span<const int> js, int n) {
    if (n < 1 || static_cast<int>(js.size()) != n) {
        throw std::invalid_argument("reconstruct_b: expected " + std::to_string(n) + " exponents");
    }
    std::vector<int> slot(2 * n + 2, 0);
    int first_free = 1;
    for (int i = 1; i <= n; ++i) {
        while (slot[first_free] != 0) ++first_free;
        const int target = first_free + js[i - 1];
        if (js[i - 1] < 0 || target > 2 * n || slot[target] != 0) {
            throw std::invalid_argument("reconstruct_b: j_" + std::to_string(i) + " = " +
                                        std::to_string(js[i - 1]) + " does not reach a free slot");
        }
        slot[target] = i;
        slot[2 * n + 1 - target] = -i;
    }
    return SignedPermutation(std::vector<int>(slot.begin() + 1, slot.begin() + 1 + n));
}

std::vector<int> string_exponents_b(const SignedPermutation& w) {
    const int n = w.rank();
    const auto pos = unfold(w).positions();
    std::vector<char> occupied(2 * n + 1, 0);
    std::vector<int> ks(n);
    for (int i = 1; i <= n; ++i) {
        const int p = pos[embed_value(i, n) - 1];
        int free_before = 0;
        for (int q = 1; q < p; ++q) free_before += !occupied[q];
        ks[i - 1] = free_before;
        occupied[p] = 1;
        occupied[2 * n + 1 - p] = 1;
    }
    return ks;
}

SignedPermutation compose_string_generators_b(std::span<const int> ks, int n) {
    if (static_cast<int>(ks.size()) != n) {
        throw std::invalid_argument("compose_string_generators_b: expected " + std::to_string(n) +
                                    " exponents");
    }
    SignedPermutation result = SignedPermutation::identity(n);
    for (int i = 1; i <= n; ++i) {
        result = compose_b(string_generator_b(i, ks[i - 1], n), result);
    }
    return result;
}

long long length_b(const SignedPermutation& w) {
    long long total = 0;
    for (int k : string_exponents_b(w)) total += k;
    return total;
}

SignedPermutation star_string_b(int i, int j, const SignedPermutation& v) {
    const int n = v.rank();
    if (i < 1 || j < i || j > 2 * n - 1) {
        throw std::invalid_argument("star_string_b: need 1 <= i <= j <= 2n-1");
    }
    SignedPermutation g = SignedPermutation::identity(n);
    for (int k = j; k >= i; --k) g = compose_b(simple_b(normalize_generator(k, n), n), g);
    std::vector<int> targets;
    for (int k = i + 1; k <= j + 1; ++k) targets.push_back(signed_value(k, n));
    return hop_b(compose_b(g, v), signed_value(i, n), HopList(std::move(targets))).word;
}

SignedDemazureResult demazure_star_b(const SignedPermutation& w, const SignedPermutation& v) {
    require_same_rank(w, v, "demazure_star_b");
    const int n = w.rank();
    const Permutation start = unfold(compose_b(w, v));
    std::vector<int> word(start.entries().begin(), start.entries().end());
    std::vector<int> pos = start.positions();
    std::vector<int> rank_in_list(2 * n + 1, -1);
    std::vector<HopTrace> traces;
    traces.reserve(n);

    for (int t = 1; t <= n; ++t) {
        const auto list = embed_list(left_subword_b(w, t).values(), n);
        HopTrace& trace = traces.emplace_back(Permutation(word), t, list);
        hop_b_in_place(word, pos, t, list, rank_in_list, trace);
    }
    return {fold(Permutation(std::move(word))), std::move(traces)};
}

SignedPermutation star_b(const SignedPermutation& w, const SignedPermutation& v) {
    return demazure_star_b(w, v).product;
}

SignedPermutation demazure_star_b_unfolded(const SignedPermutation& w, const SignedPermutation& v) {
    require_same_rank(w, v, "demazure_star_b_unfolded");
    return fold(star(unfold(w), unfold(v)));
}

std::vector<SignedPermutation> all_signed_permutations(int n) {
    std::vector<SignedPermutation> out;
    for (const auto& p : all_permutations(n)) {
        for (int mask = 0; mask < (1 << n); ++mask) {
            std::vector<int> e(p.entries().begin(), p.entries().end());
            for (int k = 0; k < n; ++k) {
                if (mask & (1 << k)) e[k] = -e[k];
            }
            out.emplace_back(std::move(e));
        }
    }
    return out;
}

} // namespace demazure
