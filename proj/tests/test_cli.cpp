#include "demazure/cli.hpp"
#include "demazure/hopping.hpp"
#include "demazure/text.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace demazure;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli_run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

} // namespace

TEST(Cli, StarTypeA) {
    const auto r = cli_run({"star", "--type", "a", "6541723", "5436217"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "7654213\n");
    EXPECT_EQ(cli_run({"star", "6541723", "5436217", "--algo", "oracle"}).out, "7654213\n");
}

TEST(Cli, StarTypeB) {
    const auto r = cli_run({"star", "--type", "b", "[-5,3,1,-2,4]", "[-4,2,-1,-3,5]"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "[-2,-5,-1,-3,-4]\n");
    for (const char* algo : {"unfolded", "oracle"}) {
        EXPECT_EQ(cli_run({"star", "--type", "b", "--algo", algo, "[-5,3,1,-2,4]", "[-4,2,-1,-3,5]"}).out,
                  "[-2,-5,-1,-3,-4]\n");
    }
}

TEST(Cli, HopTrace) {
    const auto r = cli_run({"hop", "--type", "a", "--t", "1", "--list", "3,6,5,7,2", "891726435", "--trace"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(lines_of(r.out), (std::vector<std::string>{"89[1]7[2]6435", "8927[1]643[5]", "892756431"}));
}

TEST(Cli, HopSigned) {
    const auto r = cli_run({"hop", "--type", "b", "--t", "1", "--list", "[-2,-3,4]", "[2,3,5,-1,4]"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "[-1,2,5,3,4]\n");
}

TEST(Cli, StarTraceReplaysHopTraces) {
    const auto w = parse_permutation("6541723");
    const auto v = parse_permutation("5436217");
    const auto r = cli_run({"star", "--trace", "6541723", "5436217"});
    ASSERT_EQ(r.code, 0);
    const auto expected = demazure_star(w, v);
    std::vector<std::vector<Permutation>> blocks;
    std::vector<Permutation> product;
    bool in_product = false;
    for (const auto& line : lines_of(r.out)) {
        if (line == "# product") {
            in_product = true;
        } else if (line.rfind("# h_", 0) == 0) {
            blocks.emplace_back();
        } else if (in_product) {
            product.push_back(parse_permutation(line));
        } else {
            ASSERT_FALSE(blocks.empty());
            blocks.back().push_back(parse_trace_line(line));
        }
    }
    ASSERT_EQ(blocks.size(), expected.traces.size());
    for (std::size_t k = 0; k < blocks.size(); ++k) EXPECT_EQ(blocks[k], expected.traces[k].steps());
    ASSERT_EQ(product.size(), 1u);
    EXPECT_EQ(product[0], expected.product);
}

TEST(Cli, Decompose) {
    const auto a = cli_run({"decompose", "312"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(lines_of(a.out)[0], "sequence [1,1]");
    EXPECT_EQ(lines_of(a.out)[2], "length 2");
    const auto b = cli_run({"decompose", "--type", "b", "[-5,3,1,-2,4]"});
    EXPECT_EQ(lines_of(b.out)[0], "sequence [2,6,1,4,9]");
    EXPECT_EQ(cli_run({"decompose", "--type", "b", "--from-sequence", "2,6,1,4,9"}).out, "[-5,3,1,-2,4]\n");
    EXPECT_EQ(cli_run({"decompose", "--from-sequence", "1,1"}).out, "312\n");
}

TEST(Cli, UnfoldFold) {
    EXPECT_EQ(cli_run({"unfold", "--type", "b", "[4,-2,3,-1]"}).out, "4 7 3 8 1 6 2 5\n");
    EXPECT_EQ(cli_run({"unfold", "--signed", "[4,-2,3,-1]"}).out, "[4,-2,3,-1,1,-3,2,-4]\n");
    EXPECT_EQ(cli_run({"fold", "4 7 3 8 1 6 2 5"}).out, "[4,-2,3,-1]\n");
    EXPECT_EQ(cli_run({"fold", "1243"}).code, 1);
}

TEST(Cli, IntervalDot) {
    const auto path = std::filesystem::temp_directory_path() / "demazure_interval_test.dot";
    const auto r = cli_run({"interval", "4231", "--dot", path.string()});
    ASSERT_EQ(r.code, 0);
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    const auto dot = buf.str();
    std::filesystem::remove(path);
    EXPECT_EQ(dot.rfind("digraph", 0), 0u);
    EXPECT_EQ(dot.back(), '\n');
    int nodes = 0, edges = 0;
    for (const auto& line : lines_of(dot)) {
        if (line.find("[label=") != std::string::npos) ++nodes;
        if (line.find("->") != std::string::npos) ++edges;
    }
    EXPECT_EQ(nodes, 20);
    // Every element except the top has at least one cover, and covers raise length by one.
    EXPECT_GE(edges, 19);
    EXPECT_EQ(lines_of(cli_run({"interval", "321"}).out).size(), 6u);
}

TEST(Cli, MalformedInputExitsOne) {
    EXPECT_EQ(cli_run({"star", "123", "1234"}).code, 1);
    EXPECT_EQ(cli_run({"star", "1123", "1234"}).code, 1);
    EXPECT_EQ(cli_run({"star", "--type", "a", "[-1,2]", "[1,2]"}).code, 1);
    EXPECT_EQ(cli_run({"star", "12"}).code, 1);
    EXPECT_EQ(cli_run({"frobnicate"}).code, 1);
    EXPECT_EQ(cli_run({}).code, 1);
    EXPECT_EQ(cli_run({"star", "--type", "c", "12", "12"}).code, 1);
    EXPECT_EQ(cli_run({"interval", "1234567"}).code, 1);
    EXPECT_EQ(cli_run({"hop", "--t", "1", "--list", "1,1", "12"}).code, 1);
    EXPECT_FALSE(cli_run({"star", "12"}).err.empty());
}

TEST(Cli, HelpExitsZero) {
    const auto r = cli_run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("star"), std::string::npos);
}

TEST(Cli, BenchCsv) {
    const auto r = cli_run({"bench", "--ns", "20,30", "--trials", "3", "--seed", "5"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto lines = lines_of(r.out);
    ASSERT_EQ(lines.size(), 5u);
    EXPECT_EQ(lines[0], "type,n,trials,algo,mean_ns,p50_ns,p95_ns,seed");
    EXPECT_NE(r.err.find("ratio"), std::string::npos);
}

TEST(Cli, BenchMismatchExitsTwo) {
    EXPECT_EQ(cli_run({"bench", "--type", "b", "--ns", "6", "--trials", "100"}).code, 2);
}
