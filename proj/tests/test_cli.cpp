#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "json.hpp"

#include "delta_nls/cli.hpp"

using namespace delta_nls;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const auto p = fs::temp_directory_path() / ("delta_nls_cli_test_" + name);
    fs::remove_all(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

int shell(const std::string& args, const fs::path& stderr_file = {}) {
    std::string cmd = std::string(DELTA_NLS_BIN) + " " + args + " > /dev/null";
    cmd += stderr_file.empty() ? " 2>/dev/null" : " 2> " + stderr_file.string();
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

RunConfig quick(Command cmd, const fs::path& out) {
    RunConfig c;
    c.command = cmd;
    c.params = {0.0, 2.0, 1.0, 1.0};
    c.solver.grid.n = 512;
    c.out_dir = out.string();
    return c;
}

} // namespace

TEST(Cli, SelftestPasses) {
    const auto dir = scratch("selftest");
    EXPECT_EQ(shell("selftest --out " + dir.string()), 0);
    const auto j = nlohmann::json::parse(slurp(dir / "selftest.json"));
    EXPECT_TRUE(j["pass"].get<bool>());
}

TEST(Cli, SweepCsvHasFiveMonotoneRows) {
    const auto dir = scratch("sweep");
    EXPECT_EQ(shell("sweep --set grid.n=512 --set sweep.betas=0,0.5,1,2,4 --set params.alpha=0.5 --set params.omega=1 "
                    "--set params.omega_tilde=1 --out " + dir.string()),
              0);
    std::istringstream is(slurp(dir / "sweep.csv"));
    std::string line;
    std::getline(is, line);
    EXPECT_EQ(line, "beta,c_beta,c0_beta,q,norm_u,norm_v,class,beta_c");
    double prev = 1e300;
    int rows = 0;
    while (std::getline(is, line)) {
        ++rows;
        const auto c_beta = std::stod(line.substr(line.find(',') + 1));
        EXPECT_LE(c_beta, prev * (1 + 1e-6));
        prev = c_beta;
    }
    EXPECT_EQ(rows, 5);
}

TEST(Cli, OutputsAreDeterministic) {
    const auto a = scratch("det_a"), b = scratch("det_b");
    auto ca = quick(Command::solve, a), cb = quick(Command::solve, b);
    ca.formats.svg = cb.formats.svg = true;
    std::ostringstream out, err;
    ASSERT_EQ(run(ca, out, err), 0) << err.str();
    ASSERT_EQ(run(cb, out, err), 0) << err.str();
    for (const char* f : {"ground_state.json", "ground_state_profile.csv", "ground_state.svg"})
        EXPECT_EQ(slurp(a / f), slurp(b / f)) << f;
}

TEST(Cli, GroundStateJsonSchema) {
    const auto dir = scratch("schema");
    std::ostringstream out, err;
    ASSERT_EQ(run(quick(Command::solve, dir), out, err), 0) << err.str();
    const auto j = nlohmann::json::parse(slurp(dir / "ground_state.json"));
    for (const char* k : {"alpha", "omega", "omega_tilde", "beta", "lambda", "q", "level", "grid", "phi", "v",
                          "residuals", "classification"})
        EXPECT_TRUE(j.contains(k)) << k;
    EXPECT_EQ(j["grid"]["n"].get<std::size_t>(), 512u);
    EXPECT_EQ(j["phi"].size(), 512u);
    EXPECT_EQ(j["classification"]["label"], "scalar-u singular");
    // doubles read back exactly
    EXPECT_EQ(j["omega"].get<double>(), 2.0);
    const auto line = slurp(dir / "ground_state_profile.csv");
    EXPECT_NE(line.find("r,phi,u,v\n"), std::string::npos);
}

TEST(Cli, InvalidConfigExitsWithErrorJson) {
    const auto dir = scratch("bad");
    fs::create_directories(dir);
    std::ofstream(dir / "bad.cfg") << "params.alpha = 0\nparams.omega = 1.0\n";
    EXPECT_EQ(shell("solve --config " + (dir / "bad.cfg").string(), dir / "err.json"), 1);
    const auto j = nlohmann::json::parse(slurp(dir / "err.json"));
    EXPECT_EQ(j["error"]["key"], "params.omega");
    EXPECT_EQ(j["error"]["kind"], "config");
}

TEST(Cli, UnreadableConfigIsIoFailure) {
    EXPECT_EQ(shell("solve --config /nonexistent/delta.cfg"), 3);
}

TEST(Cli, UnwritableOutputIsIoFailure) {
    const auto dir = scratch("io");
    fs::create_directories(dir);
    std::ofstream(dir / "file") << "x";
    std::ostringstream out, err;
    EXPECT_EQ(run(quick(Command::selftest, dir / "file" / "sub"), out, err), 3);
    EXPECT_EQ(nlohmann::json::parse(err.str())["error"]["kind"], "io");
}

TEST(Cli, NonConvergenceDumpsBestIterate) {
    const auto dir = scratch("nonconv");
    auto c = quick(Command::solve, dir);
    c.params.beta = 16.0;
    c.solver.max_iters = 1;
    c.solver.restarts = 0;
    std::ostringstream out, err;
    EXPECT_EQ(run(c, out, err), 2);
    EXPECT_EQ(nlohmann::json::parse(err.str())["error"]["kind"], "convergence");
    EXPECT_TRUE(fs::exists(dir / "best_iterate.json"));
}

TEST(Cli, RegimesTableHasOneRowPerRatio) {
    const auto dir = scratch("regimes");
    auto c = quick(Command::regimes, dir);
    c.params = {0.5, 1.0, 1.0, 0.0};
    c.formats.svg = true;
    std::ostringstream out, err;
    ASSERT_EQ(run(c, out, err), 0) << err.str();
    std::istringstream is(slurp(dir / "regimes.csv"));
    std::string line;
    int rows = 0;
    std::getline(is, line);
    while (std::getline(is, line)) {
        ++rows;
        EXPECT_EQ(line.substr(line.size() - 3), "yes") << line;
    }
    EXPECT_EQ(rows, 3);
    EXPECT_TRUE(fs::exists(dir / "regimes.svg"));
}

TEST(Cli, PrintConfigRoundTrips) {
    const auto dir = scratch("print");
    fs::create_directories(dir);
    const std::string cmd = std::string(DELTA_NLS_BIN) + " sweep --set params.beta=0.25 --print-config > " +
                            (dir / "cfg").string();
    ASSERT_EQ(std::system(cmd.c_str()), 0);
    const auto text = slurp(dir / "cfg");
    const auto c = parse_config(text);
    EXPECT_EQ(c.command, Command::sweep);
    EXPECT_EQ(c.params.beta, 0.25);
    EXPECT_EQ(emit_config(c), text);
}

TEST(Cli, EveryCommandRuns) {
    for (Command cmd : {Command::scalar, Command::thresholds, Command::limit, Command::asymptotics}) {
        const auto dir = scratch(std::string("cmd_") + to_string(cmd));
        auto c = quick(cmd, dir);
        c.params = {0.5, 1.0, 0.25, 1.0};
        c.formats = {true, true, true};
        std::ostringstream out, err;
        EXPECT_EQ(run(c, out, err), 0) << to_string(cmd) << ": " << err.str();
        const auto summary = nlohmann::json::parse(out.str());
        EXPECT_EQ(summary["command"], to_string(cmd));
        EXPECT_FALSE(summary["files"].empty());
    }
}
