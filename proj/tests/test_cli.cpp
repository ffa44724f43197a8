// Copyright 2026 The polarsu2 Authors
// SPDX-License-Identifier: Apache-2.0

#include "polarsu2/cli.hpp"
#include "polarsu2/verify.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace polarsu2;
using namespace polarsu2::cli;

namespace {

struct Result {
    int status;
    std::string out, err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "polarsu2");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int status = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "polarsu2_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST(ParseR, DecimalsBecomeExactFractions) {
    const auto r = parse_r("0.37");
    EXPECT_DOUBLE_EQ(r.value, 0.37);
    EXPECT_TRUE(r.exact);
    EXPECT_EQ(r.num, 37);
    EXPECT_EQ(r.den, 100);
    const auto q = parse_r("-6/4");
    EXPECT_EQ(q.num, -3);
    EXPECT_EQ(q.den, 2);
    EXPECT_FALSE(parse_r("1e-3").exact);
    EXPECT_THROW((void)parse_r("1/0"), UsageError);
    EXPECT_THROW((void)parse_r("abc"), UsageError);
    EXPECT_THROW((void)parse_r(""), UsageError);
    EXPECT_EQ(parse_r_list("0, 0.37,1/3").size(), 3u);
}

TEST(ParseR, AlphaTextIsExact) {
    // alpha = -j r + s
    EXPECT_EQ(alpha_text(3_h2, parse_r("1/3"), 0), "-1/2");
    EXPECT_EQ(alpha_text(1_h2, parse_r("0"), 1), "1");
    EXPECT_EQ(alpha_text(2_h2, parse_r("0.37"), 2), "163/100");
}

TEST(ParseArgs, FlagsAndValidation) {
    const char* argv[] = {"polarsu2", "verify", "--j-max", "5/2", "--r", "0,0.37", "--tol", "1e-9"};
    std::ostringstream out;
    const auto cfg = parse_args(8, argv, out);
    ASSERT_TRUE(cfg);
    EXPECT_EQ(cfg->command, Command::Verify);
    EXPECT_EQ(cfg->j_max, 5_h2);
    EXPECT_EQ(cfg->r_values.size(), 2u);
    EXPECT_DOUBLE_EQ(*cfg->tol, 1e-9);

    EXPECT_EQ(invoke({"verify", "--tol", "0"}).status, 2);
    EXPECT_EQ(invoke({"verify", "--tol", "-1"}).status, 2);
    EXPECT_EQ(invoke({"frobnicate"}).status, 2);
    EXPECT_EQ(invoke({"tabulate-cg", "--j1", "1/3", "--j2", "1/2"}).status, 2);
    EXPECT_EQ(invoke({"tabulate-cg", "--j1", "1/2"}).status, 2);
    EXPECT_EQ(invoke({"export-ops", "--j", "129/2"}).status, 2);
    EXPECT_EQ(invoke({"export-ops", "--k", "1"}).status, 2);
    EXPECT_EQ(invoke({"tabulate-standard", "--symbol", "12j"}).status, 2);
    EXPECT_EQ(invoke({"--help"}).status, 0);
}

TEST(ParseArgs, ConfigFileWithFlagPrecedence) {
    const auto path = scratch("job.conf");
    {
        std::ofstream f(path);
        f << "# job\nj-max = 1\nsamples = 7\nseed = 99\n";
    }
    const std::string p = path.string();
    const char* argv[] = {"polarsu2", "verify", "--config", p.c_str(), "--samples", "11"};
    std::ostringstream out;
    const auto cfg = parse_args(6, argv, out);
    ASSERT_TRUE(cfg);
    EXPECT_EQ(cfg->j_max, 2_h2);
    EXPECT_EQ(cfg->samples, 11);
    EXPECT_EQ(cfg->seed, 99u);
}

TEST(TabulateCg, SpinHalfTable) {
    const auto res = invoke({"tabulate-cg", "--j1", "1/2", "--j2", "1/2", "--r", "0", "--format", "json"});
    ASSERT_EQ(res.status, 0) << res.err;
    const auto doc = nlohmann::json::parse(res.out);
    const auto& rows = doc["table"]["rows"];
    ASSERT_EQ(rows.size(), 16u);
    bool found = false;
    for (const auto& row : rows) {
        EXPECT_TRUE(row["value"].is_array());
        EXPECT_EQ(row["value"].size(), 2u);
        if (row["j"] == "0" && row["s1"] == 0 && row["s2"] == 1) {
            EXPECT_NEAR(row["value"][0].get<double>(), 0.0, 1e-15);
            EXPECT_NEAR(row["value"][1].get<double>(), std::sqrt(0.5), 1e-15);
            found = true;
        }
    }
    EXPECT_TRUE(found);
    // sorted by (r, j, s1, s2, s)
    EXPECT_EQ(rows[0]["j"], "0");
    EXPECT_EQ(rows[15]["j"], "1");
    EXPECT_EQ(rows[15]["s"], 2);
}

TEST(TabulateCg, CsvHasMagnitudeAndPhase) {
    const auto res = invoke({"tabulate-cg", "--j1", "1/2", "--j2", "1", "--r", "1/3", "--format", "csv"});
    ASSERT_EQ(res.status, 0);
    const auto header = res.out.substr(0, res.out.find('\n'));
    EXPECT_NE(header.find("value_abs"), std::string::npos);
    EXPECT_NE(header.find("value_phase"), std::string::npos);
    EXPECT_NE(res.out.find("-1/6"), std::string::npos);  // alpha of j = 1/2, s = 0 at r = 1/3
}

TEST(TabulateOthers, FbarAndStandard) {
    auto res = invoke({"tabulate-fbar", "--j1", "1", "--j2", "1", "--j3", "1", "--r", "0.37"});
    ASSERT_EQ(res.status, 0);
    EXPECT_EQ(nlohmann::json::parse(res.out)["table"]["rows"].size(), 27u);

    res = invoke({"tabulate-standard", "--symbol", "cg", "--j1", "1", "--j2", "1/2"});
    ASSERT_EQ(res.status, 0);
    const auto doc = nlohmann::json::parse(res.out);
    bool found = false;
    for (const auto& row : doc["table"]["rows"])
        if (row["j"] == "1/2" && row["m1"] == "0" && row["m2"] == "1/2") {
            EXPECT_EQ(row["exact"], "-sqrt(1/3)");
            found = true;
        }
    EXPECT_TRUE(found);

    res = invoke({"tabulate-standard", "--symbol", "6j", "--j-max", "1/2"});
    ASSERT_EQ(res.status, 0);
    EXPECT_FALSE(nlohmann::json::parse(res.out)["table"]["rows"].empty());
}

TEST(ExportOps, SpinOneMatrices) {
    const auto res = invoke({"export-ops", "--j", "1", "--r", "0"});
    ASSERT_EQ(res.status, 0) << res.err;
    const auto doc = nlohmann::json::parse(res.out);
    const auto& space = doc["spin_spaces"][0];
    for (const char* name : {"H", "U_r", "U_r_dag", "J_plus", "J_minus", "J3", "J2"}) EXPECT_TRUE(space["operators"].contains(name));
    EXPECT_EQ(space["basis"][0]["m"], "-1");
    // U_r |1,1> = |1,-1>: row m = -1, column m = 1
    const auto& u = space["operators"]["U_r"]["entries"];
    EXPECT_DOUBLE_EQ(u[0][2][0].get<double>(), 1.0);
    EXPECT_DOUBLE_EQ(u[0][2][1].get<double>(), 0.0);
}

TEST(ExportOps, FockLevel) {
    const auto res = invoke({"export-ops", "--k", "3", "--r", "1", "--format", "csv"});
    ASSERT_EQ(res.status, 0);
    EXPECT_NE(res.out.find("a_plus"), std::string::npos);
    EXPECT_NE(res.out.find("U_r"), std::string::npos);
}

TEST(Output, AtomicWriteLeavesNoTemporaries) {
    const auto path = scratch("cg.json");
    std::filesystem::remove(path);
    const auto res = invoke({"tabulate-cg", "--j1", "1", "--j2", "1", "-o", path.string()});
    ASSERT_EQ(res.status, 0);
    EXPECT_TRUE(res.out.empty());
    EXPECT_TRUE(std::filesystem::exists(path));
    for (const auto& e : std::filesystem::directory_iterator(path.parent_path()))
        EXPECT_EQ(e.path().string().find(".tmp."), std::string::npos);
    const auto bad = invoke({"tabulate-cg", "--j1", "1", "--j2", "1", "-o", "/nonexistent-dir/x.json"});
    EXPECT_EQ(bad.status, 1);
}

TEST(Verify, SmallRunIsDeterministicAndPasses) {
    const auto a = invoke({"verify", "--j-max", "1", "--spin-max", "3", "--random-j-max", "2", "--samples", "10",
                           "--r", "0,0.37", "--k", "2,3,4", "--tol", "1e-9", "--threads", "2"});
    ASSERT_EQ(a.status, 0) << a.err;
    const auto b = invoke({"verify", "--j-max", "1", "--spin-max", "3", "--random-j-max", "2", "--samples", "10",
                           "--r", "0,0.37", "--k", "2,3,4", "--tol", "1e-9", "--threads", "1"});
    auto strip = [](nlohmann::json j) {
        for (auto& c : j["checks"]) c.erase("seconds");
        return j;
    };
    const auto ja = nlohmann::json::parse(a.out), jb = nlohmann::json::parse(b.out);
    EXPECT_EQ(strip(ja), strip(jb));
    EXPECT_EQ(ja["seed"], 20260101);
    EXPECT_TRUE(ja["all_pass"].get<bool>());
    for (const auto& c : ja["checks"])
        for (const char* key : {"name", "parameters", "residual", "tolerance", "pass"}) EXPECT_TRUE(c.contains(key));
}

TEST(Verify, FailingToleranceGivesExitOne) {
    const auto res = invoke({"verify", "--j-max", "1/2", "--spin-max", "2", "--samples", "2", "--r", "0.37", "--k", "3",
                             "--tol", "1e-30"});
    EXPECT_EQ(res.status, 1);
    EXPECT_NE(res.err.find("FAIL"), std::string::npos);
}

TEST(Threads, EnvironmentCap) {
    ::setenv("WIGNER_NONSTD_THREADS", "2", 1);
    EXPECT_EQ(effective_threads(8), 2);
    EXPECT_EQ(effective_threads(1), 1);
    ::setenv("WIGNER_NONSTD_THREADS", "junk", 1);
    EXPECT_EQ(effective_threads(3), 3);
    ::unsetenv("WIGNER_NONSTD_THREADS");
    EXPECT_GE(effective_threads(0), 1);
}
