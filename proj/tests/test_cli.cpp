#include "cli.hpp"

#include <nlohmann/json.hpp>

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using mstd::cli::run;

namespace {
    struct Outcome
    {
        int code;
        std::string out;
        std::string err;
    };

    auto invoke(std::vector<std::string> args) -> Outcome
    {
        std::ostringstream out, err;
        auto code = run(args, out, err);
        return { code, out.str(), err.str() };
    }
}

TEST(Cli, VerifyConwayJson)
{
    auto r = invoke({ "verify", "{0,2,3,4,7,11,12,14}", "--format", "json" });
    EXPECT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["label"], "MSTD");
    EXPECT_EQ(j["sum_cardinality"], 26);
    EXPECT_EQ(j["diff_cardinality"], 25);
    EXPECT_EQ(j["additions"], 36);
    EXPECT_EQ(j["subtractions"], 56);
    EXPECT_EQ(j["n"], 8);
    EXPECT_EQ(j["bit_cost_paper"], 64);
    EXPECT_EQ(j["elements"], nlohmann::json::parse("[0,2,3,4,7,11,12,14]"));
    for (auto key : { "elements", "n", "sum_cardinality", "diff_cardinality", "label", "additions", "subtractions",
                      "comparisons", "bit_cost_paper", "bit_cost_practical" })
        EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_EQ(j.size(), 10u);
}

TEST(Cli, VerifyExitCodes)
{
    auto dd = invoke({ "verify", "{0,1,3}" });
    EXPECT_EQ(dd.code, 1);
    EXPECT_NE(dd.out.find("label: difference-dominated"), std::string::npos);

    auto balanced = invoke({ "verify", "{0,1,2}" });
    EXPECT_EQ(balanced.code, 1);
    EXPECT_NE(balanced.out.find("label: balanced"), std::string::npos);

    auto empty = invoke({ "verify", "{}" });
    EXPECT_EQ(empty.code, 1);
    EXPECT_NE(empty.out.find("label: balanced"), std::string::npos);

    auto bad = invoke({ "verify", "{1,,2}" });
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("error:"), std::string::npos);
    EXPECT_TRUE(bad.out.empty());

    auto overflow = invoke({ "verify", "{1, 9223372036854775807}" });
    EXPECT_EQ(overflow.code, 2);
    EXPECT_NE(overflow.err.find("overflow"), std::string::npos);
}

TEST(Cli, VerifyWarnsOnDuplicates)
{
    auto r = invoke({ "verify", "{3, 1, 3, 0}" });
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("dropped 1 duplicate"), std::string::npos);
    EXPECT_NE(r.out.find("elements: {0, 1, 3}"), std::string::npos);
}

TEST(Cli, VerifyReadsFile)
{
    auto path = std::filesystem::temp_directory_path() / "mstd_cli_test_set.txt";
    {
        std::ofstream f{ path };
        f << "{0, 2, 3, 4,\n 7, 11, 12, 14}\n";
    }
    auto r = invoke({ "verify", path.string() });
    std::filesystem::remove(path);
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("label: MSTD"), std::string::npos);

    EXPECT_EQ(invoke({ "verify", "/nonexistent/set.txt" }).code, 2);
}

TEST(Cli, VerifyCsv)
{
    auto r = invoke({ "--format", "csv", "verify", "{0,1,3}" });
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')),
            "elements,n,sum_cardinality,diff_cardinality,label,additions,subtractions,comparisons,bit_cost_paper,"
            "bit_cost_practical");
    EXPECT_NE(r.out.find("\"{0, 1, 3}\",3,6,7,difference-dominated,6,6,"), std::string::npos);
}

TEST(Cli, Largest)
{
    auto r = invoke({ "largest", "15" });
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("max_cardinality: 9\n"), std::string::npos);
    EXPECT_NE(r.out.find("node_budget: "), std::string::npos);

    auto j = nlohmann::json::parse(invoke({ "largest", "14", "--format", "json" }).out);
    EXPECT_TRUE(j["max_cardinality"].is_null());
    EXPECT_TRUE(j["witness"].is_null());
    EXPECT_TRUE(j.contains("node_budget"));
    EXPECT_EQ(j["reflection_pruning"], true);

    auto unpruned = nlohmann::json::parse(invoke({ "largest", "16", "--no-pruning", "--format", "json" }).out);
    EXPECT_EQ(unpruned["max_cardinality"], 9);
    EXPECT_EQ(unpruned["reflection_pruning"], false);
}

TEST(Cli, LargestBudgetExhaustion)
{
    auto r = invoke({ "largest", "30", "--node-budget", "1000" });
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("budget"), std::string::npos);
    EXPECT_TRUE(r.out.empty());
}

TEST(Cli, Enumerate)
{
    auto j = nlohmann::json::parse(invoke({ "enumerate", "10", "--format", "json" }).out);
    EXPECT_EQ(j["mstd_count"], 0);
    EXPECT_EQ(j["exact_cap"], 30);
    EXPECT_EQ(j["total_subsets"], 1024);

    auto j16 = nlohmann::json::parse(invoke({ "enumerate", "16", "--format", "json" }).out);
    EXPECT_EQ(j16["mstd_count"], 10);
    EXPECT_EQ(j16["mstd_count_by_cardinality"]["9"], 6);
    EXPECT_EQ(j16["probability_exact"], "5/32768");

    auto csv = invoke({ "enumerate", "16", "--format", "csv" });
    EXPECT_NE(csv.out.find("cardinality,mstd_count\n8,4\n9,6\n"), std::string::npos);

    auto too_big = invoke({ "enumerate", "31" });
    EXPECT_EQ(too_big.code, 2);
    EXPECT_NE(too_big.err.find("30"), std::string::npos);

    EXPECT_EQ(invoke({ "enumerate", "20", "--exact-cap", "18" }).code, 2);
}

TEST(Cli, ProbIsReproducibleAcrossWorkers)
{
    auto a = invoke({ "prob", "18", "--trials", "200000", "--seed", "7", "--format", "json", "--workers", "1" });
    auto b = invoke({ "prob", "18", "--trials", "200000", "--seed", "7", "--format", "json", "--workers", "3" });
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    auto j = nlohmann::json::parse(a.out);
    EXPECT_EQ(j["trials"], 200000);
    EXPECT_EQ(j["seed"], 7);
    EXPECT_EQ(j["generator"], "mt19937_64/splitmix64-blocks");
}

TEST(Cli, SeriesCsv)
{
    auto r = invoke({ "series", "13", "16", "--format", "csv", "--exact-cap", "15", "--trials", "20000", "--seed", "1" });
    EXPECT_EQ(r.code, 0);
    std::istringstream lines{ r.out };
    std::string line;
    std::vector<std::string> data;
    bool header_seen = false;
    while (std::getline(lines, line)) {
        if (line.starts_with("#"))
            continue;
        if (! header_seen) {
            EXPECT_EQ(line, "N,method,estimate,std_error");
            header_seen = true;
            continue;
        }
        data.push_back(line);
    }
    ASSERT_EQ(data.size(), 4u);
    EXPECT_EQ(data[0], "13,exact,0,0");
    EXPECT_TRUE(data[2].starts_with("15,exact,"));
    EXPECT_TRUE(data[3].starts_with("16,monte-carlo,"));
    EXPECT_NE(r.out.find("# trials=20000"), std::string::npos);
    EXPECT_NE(r.out.find("# seed=1"), std::string::npos);
    EXPECT_NE(r.out.find("# exact_cap=15"), std::string::npos);
}

TEST(Cli, SeriesJson)
{
    auto j = nlohmann::json::parse(invoke({ "series", "1", "3", "--format", "json" }).out);
    EXPECT_EQ(j["rows"].size(), 3u);
    EXPECT_EQ(j["generator"], "mt19937_64/splitmix64-blocks");
    EXPECT_EQ(j["trials"], 1000000);
}

TEST(Cli, CorpusJson)
{
    auto r = invoke({ "corpus", "--format", "json" });
    EXPECT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    ASSERT_TRUE(j.is_array());
    ASSERT_EQ(j.size(), 14u);
    for (const auto & f : j)
        EXPECT_EQ(f["label"], "MSTD") << f["id"];
    EXPECT_EQ(j[2]["id"], "large-60");
    EXPECT_EQ(j[2]["duplicates_in_print"], nlohmann::json::parse("[71]"));
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({ "frobnicate" }).code, 2);
    EXPECT_EQ(invoke({ "verify" }).code, 2);
    EXPECT_EQ(invoke({ "--format", "xml", "corpus" }).code, 2);
    EXPECT_EQ(invoke({ "prob", "10", "--trials", "0" }).code, 2);
    EXPECT_EQ(invoke({ "--help" }).code, 0);
}

TEST(Cli, IdenticalInvocationsIdenticalBytes)
{
    for (auto args : std::vector<std::vector<std::string>>{
             { "enumerate", "17", "--format", "json" },
             { "largest", "19", "--format", "csv" },
             { "corpus" } }) {
        auto a = args, b = args;
        a.insert(a.end(), { "--workers", "1" });
        b.insert(b.end(), { "--workers", "4" });
        EXPECT_EQ(invoke(a).out, invoke(b).out);
    }
}
