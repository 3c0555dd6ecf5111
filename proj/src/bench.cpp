#include "demazure/bench.hpp"

#include "demazure/hopping.hpp"
#include "demazure/oracle.hpp"
#include "demazure/text.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <optional>
#include <ostream>

namespace demazure {

Permutation random_permutation(int n, std::mt19937_64& rng) {
    auto e = identity(n);
    std::vector<int> entries(e.entries().begin(), e.entries().end());
    std::shuffle(entries.begin(), entries.end(), rng);
    return Permutation(std::move(entries));
}

Permutation random_permutation(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_permutation(n, rng);
}

SignedPermutation random_signed_permutation(int n, std::mt19937_64& rng) {
    const auto p = random_permutation(n, rng);
    std::vector<int> entries(p.entries().begin(), p.entries().end());
    std::bernoulli_distribution coin(0.5);
    for (int& x : entries) {
        if (coin(rng)) x = -x;
    }
    return SignedPermutation(std::move(entries));
}

std::vector<std::pair<Permutation, Permutation>> bench_pairs(int n, int trials, std::mt19937_64& rng) {
    std::vector<std::pair<Permutation, Permutation>> pairs;
    for (int k = 0; k < kBenchWarmup + trials; ++k) {
        auto w = random_permutation(n, rng);
        auto v = random_permutation(n, rng);
        pairs.emplace_back(std::move(w), std::move(v));
    }
    return pairs;
}

namespace {

using Clock = std::chrono::steady_clock;

BenchRow summarize(GroupType type, int n, const std::string& algo, std::vector<std::int64_t> ns) {
    BenchRow row;
    row.type = type;
    row.n = n;
    row.trials = static_cast<int>(ns.size());
    row.algo = algo;
    std::sort(ns.begin(), ns.end());
    row.mean_ns = std::accumulate(ns.begin(), ns.end(), 0.0) / static_cast<double>(ns.size());
    // Nearest-rank percentiles.
    auto rank = [&](double q) {
        auto k = static_cast<std::size_t>(std::ceil(q * static_cast<double>(ns.size())));
        return ns[std::clamp<std::size_t>(k, 1, ns.size()) - 1];
    };
    row.p50_ns = rank(0.50);
    row.p95_ns = rank(0.95);
    return row;
}

template <class F>
std::int64_t time_ns(F&& f) {
    const auto start = Clock::now();
    f();
    const auto stop = Clock::now();
    const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
    return std::max<std::int64_t>(ns, 1);
}

template <class Elem, class Fast, class Slow, class Format>
void bench_rank(GroupType type, int n, int trials, const std::vector<std::pair<Elem, Elem>>& pairs,
                Fast fast, Slow slow, Format format, BenchReport& report) {
    std::vector<std::int64_t> fast_ns, slow_ns;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        const auto& [w, v] = pairs[k];
        std::optional<Elem> a, b;
        const auto tf = time_ns([&] { a.emplace(fast(w, v)); });
        const auto ts = time_ns([&] { b.emplace(slow(w, v)); });
        if (!(*a == *b)) {
            throw BenchMismatch("hopping and oracle disagree at n=" + std::to_string(n) + ": " +
                                format(w) + " * " + format(v) + " -> " + format(*a) + " vs " +
                                format(*b));
        }
        if (static_cast<int>(k) >= kBenchWarmup) {
            fast_ns.push_back(tf);
            slow_ns.push_back(ts);
        }
    }
    if (trials > 0) {
        report.rows.push_back(summarize(type, n, "hopping", std::move(fast_ns)));
        report.rows.push_back(summarize(type, n, "oracle", std::move(slow_ns)));
    }
}

} // namespace

BenchReport run_bench(GroupType type, const std::vector<int>& ns, int trials, std::uint64_t seed) {
    if (trials < 1) {
        throw std::invalid_argument("run_bench: trials must be positive");
    }
    for (int n : ns) {
        if (n < 2) throw std::invalid_argument("run_bench: ranks must be at least 2");
    }
    BenchReport report;
    report.seed = seed;
    std::mt19937_64 rng(seed);
    for (int n : ns) {
        if (type == GroupType::A) {
            const auto pairs = bench_pairs(n, trials, rng);
            bench_rank(
                type, n, trials, pairs, [](const Permutation& w, const Permutation& v) { return star(w, v); },
                [](const Permutation& w, const Permutation& v) { return demazure_oracle(w, v); },
                [](const Permutation& w) { return format_permutation(w); }, report);
        } else {
            std::vector<std::pair<SignedPermutation, SignedPermutation>> pairs;
            for (int k = 0; k < kBenchWarmup + trials; ++k) {
                auto w = random_signed_permutation(n, rng);
                auto v = random_signed_permutation(n, rng);
                pairs.emplace_back(std::move(w), std::move(v));
            }
            bench_rank(
                type, n, trials, pairs,
                [](const SignedPermutation& w, const SignedPermutation& v) { return star_b(w, v); },
                [](const SignedPermutation& w, const SignedPermutation& v) {
                    return demazure_oracle_b(w, v);
                },
                [](const SignedPermutation& w) { return format_signed(w); }, report);
        }
    }
    return report;
}

void write_csv(const BenchReport& report, std::ostream& out) {
    out << kBenchCsvHeader << '\n';
    for (const auto& row : report.rows) {
        out << (row.type == GroupType::A ? 'A' : 'B') << ',' << row.n << ',' << row.trials << ','
            << row.algo << ',' << static_cast<std::int64_t>(std::llround(row.mean_ns)) << ','
            << row.p50_ns << ',' << row.p95_ns << ',' << report.seed << '\n';
    }
}

} // namespace demazure
