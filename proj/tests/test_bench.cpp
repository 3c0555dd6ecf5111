#include "demazure/bench.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <sstream>

using namespace demazure;

TEST(RandomPermutation, DeterministicPerSeed) {
    EXPECT_EQ(random_permutation(30, 42), random_permutation(30, 42));
    EXPECT_NE(random_permutation(30, 42), random_permutation(30, 43));
    EXPECT_EQ(random_permutation(1, 5), Permutation::identity(1));
}

TEST(RandomPermutation, UniformOnS3) {
    std::mt19937_64 rng(2024);
    std::map<Permutation, int> counts;
    for (int k = 0; k < 60000; ++k) ++counts[random_permutation(3, rng)];
    ASSERT_EQ(counts.size(), 6u);
    for (const auto& [w, c] : counts) {
        EXPECT_GE(c, 9500);
        EXPECT_LE(c, 10500);
    }
}

TEST(Bench, InputsDependOnlyOnSeed) {
    std::mt19937_64 a(9), b(9);
    EXPECT_EQ(bench_pairs(20, 4, a), bench_pairs(20, 4, b));
}

TEST(Bench, RowsAndCsvSchema) {
    const auto report = run_bench(GroupType::A, {50, 60}, 5, 3);
    ASSERT_EQ(report.rows.size(), 4u);
    EXPECT_EQ(report.rows[0].algo, "hopping");
    EXPECT_EQ(report.rows[1].algo, "oracle");
    for (const auto& row : report.rows) {
        EXPECT_EQ(row.trials, 5);
        EXPECT_GT(row.mean_ns, 0);
        EXPECT_GT(row.p50_ns, 0);
        EXPECT_GE(row.p95_ns, row.p50_ns);
    }
    std::ostringstream csv;
    write_csv(report, csv);
    std::istringstream lines(csv.str());
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line, "type,n,trials,algo,mean_ns,p50_ns,p95_ns,seed");
    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        EXPECT_EQ(std::count(line.begin(), line.end(), ','), 7);
        EXPECT_EQ(line.substr(0, 2), "A,");
        EXPECT_EQ(line.substr(line.size() - 2), ",3");
    }
    EXPECT_EQ(rows, 4);
}

TEST(Bench, RejectsBadArguments) {
    EXPECT_THROW(run_bench(GroupType::A, {1}, 5, 1), std::invalid_argument);
    EXPECT_THROW(run_bench(GroupType::A, {10}, 0, 1), std::invalid_argument);
}

TEST(Bench, SignedMirroredHoppingMismatchIsReported) {
    EXPECT_THROW(run_bench(GroupType::B, {6}, 100, 1), BenchMismatch);
}
