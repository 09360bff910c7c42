#include <gtest/gtest.h>

#include "delta_nls/config.hpp"

using namespace delta_nls;

namespace {

std::string key_of(const std::string& text, const std::vector<std::string>& overrides = {}) {
    try {
        parse_config(text, overrides);
    } catch (const ConfigError& e) {
        return e.key();
    }
    return "<accepted>";
}

} // namespace

TEST(Config, MinimalConfigFillsDefaults) {
    const auto c = parse_config("command = solve\nparams.alpha = 0\nparams.omega = 2\nparams.omega_tilde = 1\n"
                                "params.beta = 1\n");
    EXPECT_EQ(c.command, Command::solve);
    EXPECT_EQ(c.params.beta, 1.0);
    EXPECT_EQ(c.solver.grid.n, 4096u);
    EXPECT_EQ(c.solver.grid.r_max, 0.0);
    EXPECT_EQ(c.solver.grad_tol, 1e-7);
    EXPECT_EQ(c.classify.component, 1e-3);
    EXPECT_EQ(c.threshold.margin, 1e-5);
    EXPECT_EQ(c.sweep_betas, (std::vector<double>{0, 0.5, 1, 2, 4}));
}

TEST(Config, OmegaBelowThresholdIsRejected) {
    // omega_alpha(0) = 1.26...
    EXPECT_EQ(key_of("params.alpha = 0\nparams.omega = 1.0\n"), "params.omega");
    EXPECT_EQ(key_of("params.alpha = 0\nparams.omega = 1.0\nparams.interaction = none\n"), "<accepted>");
}

TEST(Config, ErrorsNameTheKey) {
    EXPECT_EQ(key_of("params.gamma = 1\n"), "params.gamma");
    EXPECT_EQ(key_of("grid.n = 12.5\n"), "grid.n");
    EXPECT_EQ(key_of("grid.n = 8\n"), "grid.n");
    EXPECT_EQ(key_of("params.beta = abc\n"), "params.beta");
    EXPECT_EQ(key_of("params.beta = -1\n"), "params.beta");
    EXPECT_EQ(key_of("params.beta = 1\nparams.beta = 2\n"), "params.beta");
    EXPECT_EQ(key_of("command = fly\n"), "command");
    EXPECT_EQ(key_of("sweep.betas = 1, 0.5\n"), "sweep.betas");
    EXPECT_EQ(key_of("output.formats = pdf\n"), "output.formats");
    EXPECT_EQ(key_of("solver.seeds = random\n"), "solver.seeds");
    EXPECT_EQ(key_of("", {"grid.grading=0.5"}), "grid.grading");
    EXPECT_EQ(key_of("", {"no_equals_sign"}), "no_equals_sign");
}

TEST(Config, CommentsAndBlankLines) {
    const auto c = parse_config("# comment\n\n   params.beta = 3   \n");
    EXPECT_EQ(c.params.beta, 3.0);
}

TEST(Config, OverridesApplyAfterTheFile) {
    const auto c = parse_config("params.beta = 1\n", {"params.beta=2.5", "command=sweep"});
    EXPECT_EQ(c.params.beta, 2.5);
    EXPECT_EQ(c.command, Command::sweep);
}

TEST(Config, EmitThenParseIsIdentity) {
    RunConfig c;
    c.command = Command::regimes;
    c.params = {0.1, 0.3 + 1.7, 1.0 / 3.0, 0.7, Interaction::point};
    c.solver.grid = {777, 12.345678901234567, 1.5};
    c.solver.grad_tol = 3e-9;
    c.solver.seeds = SeedPolicy::scalar_v;
    c.sweep_betas = {0.0, 0.1, 0.2, 1e-3 + 1.0};
    c.regimes.ratios = {0.25, 4.0};
    c.asymptotic_betas = {10.0, 1000.0};
    c.threads = 3;
    c.beta_hi = 17.25;
    c.out_dir = "some/dir";
    c.formats = {false, true, true};
    const auto text = emit_config(c);
    EXPECT_EQ(parse_config(text), c);
    EXPECT_EQ(emit_config(parse_config(text)), text);
    EXPECT_EQ(parse_config(emit_config(RunConfig{})), RunConfig{});
}
