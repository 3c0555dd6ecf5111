#pragma once

#include "demazure/permutation.hpp"
#include "demazure/signed_permutation.hpp"

#include <cstdint>
#include <iosfwd>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace demazure {

/// Uniform permutation of [n] via Fisher-Yates; deterministic per seed.
Permutation random_permutation(int n, std::uint64_t seed);
Permutation random_permutation(int n, std::mt19937_64& rng);
SignedPermutation random_signed_permutation(int n, std::mt19937_64& rng);

enum class GroupType { A, B };

struct BenchRow {
    GroupType type = GroupType::A;
    int n = 0;
    int trials = 0;
    std::string algo; // "hopping" or "oracle"
    double mean_ns = 0;
    std::int64_t p50_ns = 0;
    std::int64_t p95_ns = 0;
};

struct BenchReport {
    std::uint64_t seed = 0;
    std::vector<BenchRow> rows;
};

/// Thrown when the two algorithms disagree on a benchmarked pair.
class BenchMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kBenchWarmup = 3;

/// The input pairs run_bench uses for rank n: warmup pairs first, then trials.
std::vector<std::pair<Permutation, Permutation>> bench_pairs(int n, int trials, std::mt19937_64& rng);

/// Times demazure_star against demazure_oracle (or their type-B versions) on
/// identical random pairs. Every result pair must agree.
BenchReport run_bench(GroupType type, const std::vector<int>& ns, int trials, std::uint64_t seed);

/// Columns: type,n,trials,algo,mean_ns,p50_ns,p95_ns,seed
void write_csv(const BenchReport& report, std::ostream& out);

inline constexpr const char* kBenchCsvHeader = "type,n,trials,algo,mean_ns,p50_ns,p95_ns,seed";

} // namespace demazure
