#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include "nts/bench/table_io.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kCli = NTS_CLI_PATH;
const fs::path kSamples = NTS_SAMPLE_DIR;

int run(const std::string& args) {
    const std::string command = "\"" + kCli + "\" " + args + " >/dev/null 2>&1";
    const int status = std::system(command.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path scratch(const std::string& name) {
    auto dir = fs::temp_directory_path() / ("nts_cli_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string q(const fs::path& p) { return "\"" + p.string() + "\""; }

}  // namespace

TEST(Cli, UsageErrorsExitWithOne) {
    EXPECT_EQ(run(""), 1);
    EXPECT_EQ(run("frobnicate"), 1);
    EXPECT_EQ(run("run --problem tsp --instances x --out y"), 1);
    EXPECT_EQ(run("run --problem smtwtp --instances x --out y --step zz"), 1);
    EXPECT_EQ(run("run --problem smtwtp --instances x --out y --trials 0"), 1);
    EXPECT_EQ(run("analyze --rows x"), 1);
    EXPECT_EQ(run("--help"), 0);
}

TEST(Cli, DataErrorsExitWithTwo) {
    const auto dir = scratch("data");
    EXPECT_EQ(run("run --problem smtwtp --instances " + q(dir / "missing.txt") + " --out " + q(dir / "o")), 2);
    nts::bench::write_text_file(dir / "bad.txt", "3\n1 2\n");
    EXPECT_EQ(run("run --problem smtwtp --instances " + q(dir / "bad.txt") + " --out " + q(dir / "o")), 2);
    fs::remove_all(dir);
}

TEST(Cli, RunThenAnalyzeSmtwtp) {
    const auto dir = scratch("smtwtp");
    const auto out = dir / "run";
    ASSERT_EQ(run("run --problem smtwtp --instances " + q(kSamples / "smtwtp_n8.txt") +
                  " --algo nts --step fd --accept aa --backtrack br --trials 3 --max-evals 100000 --seed 7 --out " +
                  q(out)),
              0);
    EXPECT_TRUE(fs::exists(out / "rows.csv"));
    EXPECT_TRUE(fs::exists(out / "traces.csv"));
    EXPECT_TRUE(fs::exists(out / "meta.json"));
    const auto rows = nts::bench::load_run(out);
    ASSERT_EQ(rows.size(), 3U);
    EXPECT_EQ(rows[0].algorithm, "NTS-(FD,AA,BR)");
    EXPECT_EQ(rows[2].seed, 9U);

    double best = rows[0].best_fitness;
    for (const auto& r : rows) best = std::min(best, r.best_fitness);
    nts::bench::write_text_file(dir / "optima.txt", "smtwtp_n8 " + std::to_string(best) + "\n");
    for (const std::string report : {"summary", "rtd", "borda", "h2h"}) {
        const auto target = dir / (report + ".out");
        EXPECT_EQ(run("analyze --rows " + q(out) + " --optima " + q(dir / "optima.txt") + " --report " + report +
                      " --delta 1 --a \"NTS-(FD,AA,BR)\" --b \"NTS-(FD,AA,BR)\" --out " + q(target)),
                  0)
            << report;
        EXPECT_FALSE(nts::bench::read_text_file(target).empty()) << report;
    }
    EXPECT_EQ(run("analyze --rows " + q(out) + " --optima " + q(dir / "optima.txt") + " --report h2h"), 1);
    nts::bench::write_text_file(dir / "wrong.txt", "other 1\n");
    EXPECT_EQ(run("analyze --rows " + q(out) + " --optima " + q(dir / "wrong.txt") + " --report summary"), 2);
    nts::bench::write_text_file(dir / "low.txt", "smtwtp_n8 " + std::to_string(best + 1) + "\n");
    EXPECT_EQ(run("analyze --rows " + q(out) + " --optima " + q(dir / "low.txt") + " --report summary"), 2);
    fs::remove_all(dir);
}

TEST(Cli, RunLrpWithEveryAlgorithm) {
    const auto dir = scratch("lrp");
    for (const std::string algo : {"nts", "vnd", "vnd-restart", "vns"}) {
        EXPECT_EQ(run("run --problem lrp --instances " + q(kSamples / "lrp_small.lrp") + " --algo " + algo +
                      " --step fi --backtrack bu --trials 2 --max-evals 5000 --seed 1 --out " + q(dir / algo)),
                  0)
            << algo;
        EXPECT_EQ(nts::bench::load_run(dir / algo).size(), 2U) << algo;
    }
    EXPECT_EQ(run("run --problem lrp --instances " + q(kSamples / "lrp_small.lrp") +
                  " --algo vnd --ordering 1,2 --out " + q(dir / "bad")),
              1);
    fs::remove_all(dir);
}
