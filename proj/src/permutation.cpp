#include "demazure/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace demazure {

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
    const int n = rank();
    if (n < 1) {
        throw std::invalid_argument("permutation rank must be at least 1");
    }
    std::vector<char> seen(n + 1, 0);
    for (int v : entries_) {
        if (v < 1 || v > n || seen[v]) {
            throw std::invalid_argument("entries are not a bijection on 1.." + std::to_string(n));
        }
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    if (n < 1) {
        throw std::invalid_argument("identity: rank must be at least 1");
    }
    std::vector<int> e(n);
    std::iota(e.begin(), e.end(), 1);
    return Permutation(std::move(e));
}

std::vector<int> Permutation::positions() const {
    std::vector<int> pos(entries_.size());
    for (std::size_t p = 0; p < entries_.size(); ++p) {
        pos[entries_[p] - 1] = static_cast<int>(p) + 1;
    }
    return pos;
}

bool Permutation::is_identity() const {
    for (std::size_t p = 0; p < entries_.size(); ++p) {
        if (entries_[p] != static_cast<int>(p) + 1) return false;
    }
    return true;
}

HopList::HopList(std::vector<int> values) : values_(std::move(values)) {
    std::unordered_set<int> seen;
    for (int v : values_) {
        if (v == 0) {
            throw std::invalid_argument("hop list may not contain 0");
        }
        if (!seen.insert(v).second) {
            throw std::invalid_argument("hop list repeats value " + std::to_string(v));
        }
    }
}

void HopList::check_range(int n) const {
    for (int v : values_) {
        if (v < 1 || v > n) {
            throw std::invalid_argument("hop list value " + std::to_string(v) + " outside 1.." +
                                        std::to_string(n));
        }
    }
}

bool InversionSequence::valid() const {
    if (n < 1 || static_cast<int>(js.size()) != n - 1) return false;
    for (int i = 1; i < n; ++i) {
        if (js[i - 1] < 0 || js[i - 1] > n - i) return false;
    }
    return true;
}

Permutation identity(int n) { return Permutation::identity(n); }

namespace {

void require_same_rank(const Permutation& a, const Permutation& b, const char* op) {
    if (a.rank() != b.rank()) {
        throw std::invalid_argument(std::string(op) + ": rank mismatch (" + std::to_string(a.rank()) +
                                    " vs " + std::to_string(b.rank()) + ")");
    }
}

} // namespace

Permutation compose(const Permutation& w, const Permutation& v) {
    require_same_rank(w, v, "compose");
    std::vector<int> out(w.rank());
    for (int p = 1; p <= w.rank(); ++p) {
        out[p - 1] = w(v(p));
    }
    return Permutation(std::move(out));
}

Permutation inverse(const Permutation& w) { return Permutation(w.positions()); }

Permutation simple(int i, int n) {
    if (i < 1 || i > n - 1) {
        throw std::invalid_argument("simple: generator index " + std::to_string(i) + " outside 1.." +
                                    std::to_string(n - 1));
    }
    std::vector<int> e(n);
    std::iota(e.begin(), e.end(), 1);
    std::swap(e[i - 1], e[i]);
    return Permutation(std::move(e));
}

long long length(const Permutation& w) {
    // Fenwick tree over values seen so far.
    const int n = w.rank();
    std::vector<int> tree(n + 1, 0);
    long long inversions = 0;
    for (int p = 1; p <= n; ++p) {
        int smaller = 0;
        for (int x = w(p); x > 0; x -= x & -x) smaller += tree[x];
        inversions += (p - 1) - smaller;
        for (int x = w(p); x <= n; x += x & -x) ++tree[x];
    }
    return inversions;
}

std::vector<int> reduced_word(const Permutation& w) {
    // Rightmost-descent stripping: the suffix right of k is always sorted, so
    // the rightmost descent is at k and bubbling it right stays rightmost.
    std::vector<int> u(w.entries().begin(), w.entries().end());
    std::vector<int> stripped;
    const int n = w.rank();
    for (int k = n - 1; k >= 1; --k) {
        for (int q = k; q < n && u[q - 1] > u[q]; ++q) {
            std::swap(u[q - 1], u[q]);
            stripped.push_back(q);
        }
    }
    // w s_{p_1} ... s_{p_k} = e, hence w = s_{p_k} ... s_{p_1}.
    std::reverse(stripped.begin(), stripped.end());
    return stripped;
}

Permutation word_product(std::span<const int> word, int n) {
    // Right-multiplying by s_i swaps positions i and i+1.
    std::vector<int> e(n);
    std::iota(e.begin(), e.end(), 1);
    for (int i : word) {
        if (i < 1 || i > n - 1) {
            throw std::invalid_argument("word_product: generator index " + std::to_string(i) +
                                        " out of range");
        }
        std::swap(e[i - 1], e[i]);
    }
    return Permutation(std::move(e));
}

Permutation string_generator(int a, int b, int n) {
    if (a < 1 || a > n - 1 || b < 0 || b > n - a) {
        throw std::invalid_argument("string_generator: c(" + std::to_string(a) + "," +
                                    std::to_string(b) + ") out of range for rank " +
                                    std::to_string(n));
    }
    std::vector<int> e(n);
    std::iota(e.begin(), e.end(), 1);
    // Value a lands at position a+b; a+1..a+b shift one step left.
    for (int p = a; p < a + b; ++p) e[p - 1] = p + 1;
    if (b > 0) e[a + b - 1] = a;
    return Permutation(std::move(e));
}

HopList apply_to_list(const Permutation& w, const HopList& list) {
    list.check_range(w.rank());
    std::vector<int> image;
    image.reserve(list.size());
    for (int v : list.values()) image.push_back(w(v));
    return HopList(std::move(image));
}

InversionSequence inversion_sequence(const Permutation& w) {
    const int n = w.rank();
    InversionSequence seq{n, std::vector<int>(n - 1, 0)};
    std::vector<char> seen(n + 1, 0);
    for (int p = 1; p <= n; ++p) {
        const int v = w(p);
        if (v < n) {
            int larger = 0;
            for (int x = v + 1; x <= n; ++x) larger += seen[x];
            seq.js[v - 1] = larger;
        }
        seen[v] = 1;
    }
    return seq;
}

InversionSequence inversion_sequence_by_free_slots(const Permutation& w) {
    const int n = w.rank();
    const auto pos = w.positions();
    InversionSequence seq{n, std::vector<int>(n - 1, 0)};
    std::vector<char> occupied(n + 1, 0);
    for (int i = 1; i < n; ++i) {
        int free_before = 0;
        for (int q = 1; q < pos[i - 1]; ++q) free_before += !occupied[q];
        seq.js[i - 1] = free_before;
        occupied[pos[i - 1]] = 1;
    }
    return seq;
}

Permutation reconstruct(const InversionSequence& seq) {
    if (!seq.valid()) {
        throw std::invalid_argument("reconstruct: inversion sequence violates 0 <= j_i <= n-i");
    }
    const int n = seq.n;
    Permutation result = Permutation::identity(n);
    for (int i = 1; i < n; ++i) {
        result = compose(string_generator(i, seq.js[i - 1], n), result);
    }
    return result;
}

HopList left_subword(const Permutation& w, int a) {
    if (a < 1 || a > w.rank()) {
        throw std::invalid_argument("left_subword: value " + std::to_string(a) + " out of range");
    }
    std::vector<int> out;
    for (int p = 1; p <= w.rank() && w(p) != a; ++p) {
        if (w(p) > a) out.push_back(w(p));
    }
    return HopList(std::move(out));
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
    require_same_rank(u, w, "bruhat_leq");
    // u <= w iff #{p <= k : u(p) >= j} <= #{p <= k : w(p) >= j} for all k, j.
    const int n = u.rank();
    std::vector<int> count_u(n + 2, 0), count_w(n + 2, 0);
    for (int k = 1; k <= n; ++k) {
        for (int j = 1; j <= u(k); ++j) ++count_u[j];
        for (int j = 1; j <= w(k); ++j) ++count_w[j];
        for (int j = 1; j <= n; ++j) {
            if (count_u[j] > count_w[j]) return false;
        }
    }
    return true;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> e(n);
    std::iota(e.begin(), e.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(e);
    } while (std::next_permutation(e.begin(), e.end()));
    return out;
}

} // namespace demazure
