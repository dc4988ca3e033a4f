#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "comaware/growth.hpp"
#include "comaware/io.hpp"
#include "comaware/presets.hpp"

namespace fs = std::filesystem;
using namespace comaware;

namespace {

struct Run {
    int code;
    std::string out;
};

Run cli(const std::string& args) {
    const std::string cmd = std::string(COMAWARE_CLI) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        return {-1, ""};
    }
    Run r{0, ""};
    std::array<char, 4096> buf;
    while (const auto n = std::fread(buf.data(), 1, buf.size(), pipe)) {
        r.out.append(buf.data(), n);
    }
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("comaware_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

} // namespace

TEST(Cli, StatsOnKarate) {
    const auto r = cli("stats " COMAWARE_DATA_DIR "/karate.edgelist --xmin 2");
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("nodes                   34"), std::string::npos);
    EXPECT_NE(r.out.find("diameter                5"), std::string::npos);
    EXPECT_NE(r.out.find("clustering coefficient  0.2557"), std::string::npos);
}

TEST(Cli, StatsRejectsBadInput) {
    const auto dir = scratch("bad");
    std::ofstream(dir / "loop.edgelist") << "0 1\n1 1\n";
    std::ofstream(dir / "junk.edgelist") << "0 1\nfoo\n";
    auto r = cli("stats " + (dir / "loop.edgelist").string());
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("line 2"), std::string::npos);
    r = cli("stats " + (dir / "junk.edgelist").string());
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(cli("stats").code, 2);
    EXPECT_EQ(cli("frobnicate").code, 2);
    fs::remove_all(dir);
}

TEST(Cli, GenerateWritesRunsAndReport) {
    const auto dir = scratch("gen");
    const auto r = cli("generate --config " COMAWARE_SOURCE_DIR "/configs/karate.json --runs 2 --seed 7 --xmin 2 --out " +
                       dir.string());
    ASSERT_EQ(r.code, 0) << r.out;
    ASSERT_TRUE(fs::exists(dir / "run_001.edgelist"));
    ASSERT_TRUE(fs::exists(dir / "run_002.edgelist"));
    EXPECT_TRUE(fs::exists(dir / "report.csv"));

    const auto params = load_config(COMAWARE_SOURCE_DIR "/configs/karate.json");
    for (int i = 0; i < 2; ++i) {
        const auto g = load_edge_list(dir / (i == 0 ? "run_001.edgelist" : "run_002.edgelist"));
        EXPECT_EQ(g.node_count(), 34u);
        EXPECT_EQ(g.edge_count(), 78u);
        EXPECT_EQ(g.edges(), run_growth(params, 7 + i).graph.edges());
    }
    fs::remove_all(dir);
}

TEST(Cli, GenerateRejectsInvalidConfig) {
    const auto dir = scratch("cfg");
    std::ofstream(dir / "bad.json")
        << R"({"n": 1, "m": 0, "community_probs": [0.5], "comp": 2, "rp_n": 1, "pp_n": 0,
              "rp_e": 1, "pp_e": 0, "c3p_e": 0, "c4p_e": 0})";
    const auto r = cli("generate --config " + (dir / "bad.json").string() + " --out " + dir.string());
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("comp:"), std::string::npos);
    EXPECT_NE(r.out.find("n:"), std::string::npos);
    fs::remove_all(dir);
}

TEST(Cli, GenerateReportsNonConvergence) {
    // two singleton-prone communities with only triangle closure inside them
    const auto dir = scratch("stuck");
    std::ofstream(dir / "stuck.json")
        << R"({"n": 2, "m": 1, "community_probs": [0.5, 0.5], "comp": 1, "rp_n": 1, "pp_n": 0,
              "rp_e": 0, "pp_e": 0, "c3p_e": 1, "c4p_e": 0})";
    const auto r = cli("generate --config " + (dir / "stuck.json").string() + " --runs 20 --seed 0 --xmin 1 --out " +
                       dir.string());
    EXPECT_EQ(r.code, 3) << r.out;
    fs::remove_all(dir);
}

TEST(Cli, Replicate) {
    const auto dir = scratch("rep");
    auto r = cli("replicate karate --runs 3 --report " + (dir / "k.csv").string());
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("Mean"), std::string::npos);
    EXPECT_NE(r.out.find("Observed"), std::string::npos);
    std::ifstream csv(dir / "k.csv");
    std::string line;
    int rows = 0;
    while (std::getline(csv, line)) {
        ++rows;
    }
    EXPECT_EQ(rows, 1 + 3 + 2 + 2);

    EXPECT_EQ(cli("replicate --preset exp1 --runs 1 --estimator discrete").code, 0);
    EXPECT_EQ(cli("replicate nowhere").code, 2);
    EXPECT_EQ(cli("replicate karate --estimator bogus").code, 2);
    fs::remove_all(dir);
}
