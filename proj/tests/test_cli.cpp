#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace loopwords;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

TEST(Cli, WordExamples) {
    auto r = run({"word", "--type", "A", "--rank", "4", "--order", "1,2,3,4", "--weights", "1,1,1,1", "--root", "theta",
                  "--d", "1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "[4^(1) 3^(0) 2^(0) 1^(0)]\n");

    r = run({"word", "--type", "A", "--rank", "5", "--order", "51324", "--weights", "4,3,1,8,5", "--d", "20"});
    EXPECT_EQ(r.out, "[1^(4) 2^(3) 3^(1) 4^(8) 5^(4)]\n");

    r = run({"word", "--type", "B2", "--order", "2,1", "--weights", "7,8", "--d", "19", "--engine", "naive"});
    EXPECT_EQ(r.out, "[2^(7) 1^(6) 2^(6)]\n");

    r = run({"word", "--type", "A", "--rank", "2", "--root", "11", "--d", "2", "--engine", "oracle"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "[1^(1) 2^(1)]\n");
}

TEST(Cli, JsonSchemaRoundTrip) {
    auto r = run({"word", "--type", "G2", "--order", "2,1", "--weights", "2,3", "--d", "13", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    auto j = json::parse(r.out);
    EXPECT_EQ(j["type"], "G2");
    EXPECT_EQ(j["rank"], 2);
    EXPECT_EQ(j["order"], (std::vector<int>{2, 1}));
    EXPECT_EQ(j["weights"], (std::vector<int>{2, 3}));
    EXPECT_EQ(j["alpha"], (std::vector<int>{2, 3}));
    EXPECT_EQ(j["d"], 13);
    LoopWord w;
    for (const auto& l : j["word"]) w.push_back({l[0].get<int>(), l[1].get<Exponent>()});
    EXPECT_EQ(render(w), "[2^(3) 2^(3) 1^(2) 2^(3) 1^(2)]");

    r = run({"word", "--type", "A2", "--slopes-pos", "1,3/2", "--slopes-neg", "2,1/2", "--d", "-1", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    j = json::parse(r.out);
    EXPECT_EQ(j["slopes"]["plus"], (std::vector<std::string>{"1", "3/2"}));
    EXPECT_EQ(j["slopes"]["minus"], (std::vector<std::string>{"2", "1/2"}));
    EXPECT_FALSE(j.contains("weights"));
}

TEST(Cli, TableOutputs) {
    auto r = run({"table", "--type", "E7", "--order", "1234567", "--weights", "4,5,3,7,3,2,5", "--d-range", "25..26",
                  "--format", "tsv"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream in(r.out);
    std::string header, row25, row26;
    std::getline(in, header);
    std::getline(in, row25);
    std::getline(in, row26);
    EXPECT_EQ(header, "# type\torder\tweights\talpha\td\tword");
    EXPECT_EQ(row25, "E7\t1234567\t4,5,3,7,3,2,5\t1,2,3,4,3,2,2\t25\t[4^(3) 5^(1) 6^(0) 3^(1) 7^(2) 4^(2) 2^(2) 1^(1) "
                     "3^(1) 2^(2) 4^(3) 5^(1) 6^(0) 3^(1) 7^(2) 4^(2) 5^(1)]");
    EXPECT_EQ(row26.substr(row26.rfind('\t') + 1), "[4^(3) 5^(1) 3^(1) 7^(2) 4^(2) 2^(2) 1^(1) 3^(1) 2^(2) 4^(3) 5^(1) "
                                                   "6^(0) 3^(1) 7^(2) 4^(3) 5^(1) 6^(0)]");

    r = run({"table", "--type", "A2", "--root", "all", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(json::parse(r.out).size(), 1u + 1u + 2u);
}

TEST(Cli, Deterministic) {
    const std::vector<std::string> args{"table", "--type", "B3", "--order", "3,1,2", "--weights", "2,5,1", "--root",
                                        "all", "--d-range", "-4..9"};
    EXPECT_EQ(run(args).out, run(args).out);
    const std::vector<std::string> v{"verify", "--suite", "convexity", "--type", "A2", "--count", "50", "--seed", "7"};
    auto a = run(v), b = run(v);
    EXPECT_EQ(a.code, 0) << a.out;
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, OutFile) {
    const std::string path = ::testing::TempDir() + "loopwords_cli_out.txt";
    auto r = run({"word", "--type", "A2", "--d", "1", "--out", path});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "[2^(1) 1^(0)]");
    std::remove(path.c_str());
}

TEST(Cli, WeylAndTypeA) {
    EXPECT_EQ(run({"weyl", "--emit", "p-constants", "--type", "A2", "--weights", "2,3", "--i", "1", "--d", "4"}).out,
              "p = 4,6\n");
    EXPECT_EQ(run({"weyl", "--emit", "terminal-set", "--type", "A1", "--mu", "2"}).out, "{(α1,0),(α1,1)}\n");
    EXPECT_EQ(run({"weyl", "--emit", "reduced-word", "--type", "A1", "--mu", "2"}).out.substr(0, 4), "s = ");
    auto t = run({"typea", "--n", "3", "--weights", "1,3,15", "--emit", "table"});
    EXPECT_EQ(t.code, 0);
    EXPECT_EQ(t.out.substr(0, t.out.find('\n')), "3 3 3 3 3 2 3 3 3 3 3 2 3 3 3 3 3 2 1");
    EXPECT_EQ(run({"typea", "--n", "4", "--weights", "1,2,6,12", "--emit", "word", "--d", "3"}).out,
              "[3^(1) 2^(0) 1^(0) 4^(2)]\n");
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({"verify", "--suite", "bogus", "--type", "A2"}).code, 2);
    EXPECT_EQ(run({"word", "--type", "Q", "--d", "0"}).code, 2);
    EXPECT_EQ(run({"word", "--type", "A2"}).code, 2);
    EXPECT_EQ(run({"word", "--type", "A2", "--weights", "1,0", "--d", "0"}).code, 2);
    EXPECT_EQ(run({"word", "--type", "A2", "--root", "21", "--d", "0"}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
    EXPECT_EQ(run({"typea", "--n", "2", "--weights", "2,3", "--emit", "table"}).code, 2);
    EXPECT_EQ(run({"weyl", "--emit", "terminal-set", "--type", "A2", "--mu", "1,0"}).code, 2);
    // Degree beyond the explicit oracle window.
    EXPECT_EQ(run({"word", "--type", "A2", "--d", "5", "--engine", "oracle", "--s", "1"}).code, 1);
    auto ok = run({"verify", "--suite", "tightness", "--type", "C3", "--weights", "1,2,3"});
    EXPECT_EQ(ok.code, 0);
    EXPECT_NE(ok.out.find("PASS"), std::string::npos);
}

} // namespace
