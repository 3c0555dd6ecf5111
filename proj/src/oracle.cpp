#include "demazure/oracle.hpp"

#include "demazure/hopping.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace demazure {

namespace {

void require_rank_at_most(int n, int cap, const char* op) {
    if (n > cap) {
        throw std::out_of_range(std::string(op) + ": rank " + std::to_string(n) + " exceeds cap " +
                                std::to_string(cap));
    }
}

} // namespace

std::vector<int> reduced_word_by(const Permutation& w, DescentPolicy policy) {
    if (policy == DescentPolicy::Rightmost) return reduced_word(w);

    // Leftmost-descent stripping: the prefix left of k stays sorted.
    std::vector<int> u(w.entries().begin(), w.entries().end());
    std::vector<int> stripped;
    const int n = w.rank();
    for (int k = 2; k <= n; ++k) {
        for (int q = k - 1; q >= 1 && u[q - 1] > u[q]; --q) {
            std::swap(u[q - 1], u[q]);
            stripped.push_back(q);
        }
    }
    std::reverse(stripped.begin(), stripped.end());
    return stripped;
}

Permutation star_simple_left(int i, const Permutation& v) {
    const int n = v.rank();
    if (i < 1 || i > n - 1) {
        throw std::invalid_argument("star_simple_left: generator index " + std::to_string(i) +
                                    " outside 1.." + std::to_string(n - 1));
    }
    const auto pos = v.positions();
    if (pos[i] < pos[i - 1]) return v; // l(s_i v) < l(v)
    std::vector<int> word(v.entries().begin(), v.entries().end());
    std::swap(word[pos[i - 1] - 1], word[pos[i] - 1]);
    return Permutation(std::move(word));
}

Permutation star_word(std::span<const int> word, const Permutation& v) {
    const int n = v.rank();
    std::vector<int> u(v.entries().begin(), v.entries().end());
    std::vector<int> pos = v.positions();
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const int i = *it;
        if (i < 1 || i > n - 1) {
            throw std::invalid_argument("star_word: generator index " + std::to_string(i) +
                                        " out of range");
        }
        const int pi = pos[i - 1];
        const int pj = pos[i];
        if (pi < pj) {
            u[pi - 1] = i + 1;
            u[pj - 1] = i;
            pos[i - 1] = pj;
            pos[i] = pi;
        }
    }
    return Permutation(std::move(u));
}

Permutation demazure_oracle(const Permutation& w, const Permutation& v) {
    if (w.rank() != v.rank()) {
        throw std::invalid_argument("demazure_oracle: rank mismatch");
    }
    return star_word(reduced_word(w), v);
}

SignedPermutation demazure_oracle_b(const SignedPermutation& w, const SignedPermutation& v) {
    if (w.rank() != v.rank()) {
        throw std::invalid_argument("demazure_oracle_b: rank mismatch");
    }
    const Permutation product = demazure_oracle(unfold(w), unfold(v));
    try {
        return fold(product);
    } catch (const std::invalid_argument& e) {
        throw std::logic_error(std::string("demazure_oracle_b: unfolded product not mirrored: ") +
                               e.what());
    }
}

std::vector<Permutation> lower_interval(const Permutation& w) {
    require_rank_at_most(w.rank(), kIntervalRankCap, "lower_interval");
    std::vector<Permutation> out;
    for (auto& u : all_permutations(w.rank())) {
        if (bruhat_leq(u, w)) out.push_back(std::move(u));
    }
    return out;
}

bool verify_interval_product(const Permutation& w, const Permutation& u) {
    require_rank_at_most(w.rank(), kIntervalProductRankCap, "verify_interval_product");
    const auto interval = lower_interval(star(w, u));
    const auto below_w = lower_interval(w);
    const auto below_u = lower_interval(u);
    std::vector<Permutation> products;
    products.reserve(below_w.size() * below_u.size());
    for (const auto& a : below_w) {
        for (const auto& b : below_u) products.push_back(compose(a, b));
    }
    std::sort(products.begin(), products.end());
    products.erase(std::unique(products.begin(), products.end()), products.end());
    return products == interval;
}

std::map<Permutation, int> length_by_bfs(int n) {
    require_rank_at_most(n, kBfsRankCapA, "length_by_bfs");
    std::map<Permutation, int> dist;
    std::deque<Permutation> queue;
    dist.emplace(Permutation::identity(n), 0);
    queue.push_back(Permutation::identity(n));
    while (!queue.empty()) {
        const Permutation x = std::move(queue.front());
        queue.pop_front();
        const int d = dist.at(x);
        for (int i = 1; i < n; ++i) {
            Permutation y = compose(x, simple(i, n));
            if (dist.emplace(y, d + 1).second) queue.push_back(std::move(y));
        }
    }
    return dist;
}

std::map<SignedPermutation, int> length_by_bfs_b(int n) {
    require_rank_at_most(n, kBfsRankCapB, "length_by_bfs_b");
    std::map<SignedPermutation, int> dist;
    std::deque<SignedPermutation> queue;
    dist.emplace(SignedPermutation::identity(n), 0);
    queue.push_back(SignedPermutation::identity(n));
    while (!queue.empty()) {
        const SignedPermutation x = std::move(queue.front());
        queue.pop_front();
        const int d = dist.at(x);
        for (int i = 1; i <= n; ++i) {
            SignedPermutation y = compose_b(x, simple_b(i, n));
            if (dist.emplace(y, d + 1).second) queue.push_back(std::move(y));
        }
    }
    return dist;
}

std::vector<std::pair<int, int>> hasse_edges(std::span<const Permutation> elements) {
    const int m = static_cast<int>(elements.size());
    std::vector<std::vector<char>> below(m, std::vector<char>(m, 0));
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            below[a][b] = a != b && bruhat_leq(elements[a], elements[b]);
        }
    }
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            if (!below[a][b]) continue;
            bool covered = true;
            for (int c = 0; c < m && covered; ++c) {
                if (below[a][c] && below[c][b]) covered = false;
            }
            if (covered) edges.emplace_back(a, b);
        }
    }
    return edges;
}

} // namespace demazure
