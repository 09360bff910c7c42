#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "delta_nls/shooting.hpp"
#include "delta_nls/solver.hpp"

using namespace delta_nls;

namespace {

// Townes profile: mass 11.700896... ; level = mass / 2.
constexpr double townes_height = 2.2062008646508344;
constexpr double townes_level = 5.8504482559;
// Richardson-extrapolated levels from n = 1024, 2048, 4096 solves.
constexpr double d_alpha0_omega2 = 0.13353934;
constexpr double c_inf_alpha0_omega2_omega_tilde1 = 2.2993588;

} // namespace

TEST(Shooting, HeightAndPohozaevIdentities) {
    const auto res = shooting_ground_state();
    EXPECT_NEAR(res.height, townes_height, 1e-9);
    EXPECT_NEAR(res.grad_sq / res.mass, 1.0, 1e-6);
    EXPECT_NEAR(res.quartic / (2.0 * res.mass), 1.0, 1e-6);
    EXPECT_NEAR(res.level / townes_level, 1.0, 1e-8);
}

TEST(Shooting, BadBracketIsReported) {
    ShootingOptions opt;
    opt.bracket_lo = 2.3;
    opt.bracket_hi = 2.5;
    EXPECT_THROW(shooting_ground_state(opt), OracleError);
}

TEST(Solver, RegularScalarMatchesShooting) {
    const auto gs = minimize_scalar_regular(1.0);
    ASSERT_TRUE(gs.converged);
    EXPECT_NEAR(gs.level / townes_level, 1.0, 1e-6);
    EXPECT_EQ(gs.classification.vectorness, Vectorness::scalar_v);
    EXPECT_EQ(gs.classification.regularity, Regularity::regular);
    EXPECT_NEAR(value_at_origin(gs.state.v) / townes_height, 1.0, 1e-4);
    EXPECT_TRUE(tail_resolved(gs.state.v));
}

TEST(Solver, RegularScalarPohozaev) {
    const auto gs = minimize_scalar_regular(1.0);
    const auto& v = gs.state.v;
    const auto w = v.grid()->weights();
    double mass = 0.0, quartic = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        mass += w[i] * v[i] * v[i];
        quartic += w[i] * std::pow(v[i], 4);
    }
    EXPECT_NEAR(dirichlet_energy(v) / mass, 1.0, 1e-4);
    EXPECT_NEAR(mass / (0.5 * quartic), 1.0, 1e-4);
}

TEST(Solver, RegularScalarScalesLinearly) {
    const double d1 = minimize_scalar_regular(1.0).level;
    for (double w : {0.5, 2.0, 4.0}) EXPECT_NEAR(minimize_scalar_regular(w).level / (w * d1), 1.0, 1e-6);
}

TEST(Solver, PointScalarLevelAndBoundaryCondition) {
    const auto gs = minimize_scalar_point(2.0, 0.0);
    ASSERT_TRUE(gs.converged);
    EXPECT_NEAR(gs.level / d_alpha0_omega2, 1.0, 1e-6);
    EXPECT_GT(gs.state.u.q, 0.0);
    EXPECT_EQ(gs.classification.regularity, Regularity::singular);
    EXPECT_LT(gs.residuals.boundary_residual, 1e-4 * gs.state.u.phi.max_abs());
    EXPECT_LT(gs.residuals.nehari_residual, 1e-12);
}

TEST(Solver, PointScalarBelowRegularScalar) {
    // the point interaction lowers the level at fixed omega
    EXPECT_LT(minimize_scalar_point(2.0, 0.0).level, minimize_scalar_regular(2.0).level);
}

TEST(Solver, ScalingSymmetry) {
    // (alpha, omega) -> (alpha - log(mu) / (4 pi), mu omega) multiplies the level by mu
    const double mu = 3.0;
    const double d = minimize_scalar_point(2.0, 0.0).level;
    const double dm = minimize_scalar_point(mu * 2.0, -std::log(mu) / (4.0 * std::numbers::pi)).level;
    EXPECT_NEAR(dm / (mu * d), 1.0, 1e-6);
}

TEST(Solver, CoupledAtSmallBetaIsScalarPoint) {
    const auto gs = minimize_coupled(Params{0.0, 2.0, 1.0, 1.0});
    EXPECT_NEAR(gs.level / d_alpha0_omega2, 1.0, 1e-6);
    EXPECT_EQ(gs.classification.vectorness, Vectorness::scalar_u);
}

TEST(Solver, CoupledAtLargeBetaIsVectorSingular) {
    const auto gs = minimize_coupled(Params{0.0, 2.0, 1.0, 32.0});
    EXPECT_EQ(gs.classification.label(), "vector singular");
    EXPECT_LT(gs.level, d_alpha0_omega2);
}

TEST(Solver, LimitLevel) {
    const auto gs = minimize_limit(Params{0.0, 2.0, 1.0, 0.0});
    ASSERT_TRUE(gs.converged);
    EXPECT_NEAR(gs.level / c_inf_alpha0_omega2_omega_tilde1, 1.0, 1e-6);
    EXPECT_EQ(gs.classification.label(), "vector singular");
}

TEST(Solver, HistoryIsNonIncreasing) {
    const auto gs = minimize_coupled(Params{0.0, 2.0, 1.0, 16.0});
    for (std::size_t k = 1; k < gs.history.size(); ++k) EXPECT_LE(gs.history[k], gs.history[k - 1] * (1 + 1e-14));
}

TEST(Solver, NonConvergenceCarriesBestIterate) {
    SolveOptions opt;
    opt.max_iters = 1;
    opt.restarts = 0;
    opt.grid.n = 256;
    try {
        minimize_coupled(Params{0.0, 2.0, 1.0, 16.0}, opt);
        FAIL();
    } catch (const ConvergenceError& e) {
        EXPECT_FALSE(e.best().converged);
        EXPECT_GT(e.best().level, 0.0);
    }
}

TEST(Solver, OptionsAreValidated) {
    SolveOptions opt;
    opt.shrink = 1.5;
    EXPECT_THROW(opt.validate(), ConfigError);
    opt = {};
    opt.grad_tol = 0.0;
    EXPECT_THROW(opt.validate(), ConfigError);
}

TEST(Gradient, MatchesCentralDifferences) {
    const Params p{0.0, 2.0, 1.0, 1.0};
    const auto grid = Grid::make(20.0, 400, 2.0);
    std::mt19937_64 rng(7);
    std::normal_distribution<double> normal;
    const auto w = grid->weights();
    for (int k = 0; k < 5; ++k) {
        auto s = zero_state(grid, p), d = zero_state(grid, p);
        s.u.q = 0.5 + std::abs(normal(rng));
        d.u.q = normal(rng);
        for (std::size_t i = 0; i < grid->size(); ++i) {
            const double r = grid->nodes()[i];
            s.u.phi[i] = std::exp(-r * r / 2.0) * (1.0 + 0.1 * normal(rng));
            s.v[i] = std::exp(-r * r / 2.0) * (1.0 + 0.1 * normal(rng));
            d.u.phi[i] = std::exp(-r * r / 3.0) * normal(rng);
            d.v[i] = std::exp(-r) * normal(rng);
        }
        const auto g = quotient_gradient(s, p.beta);
        double analytic = g.dq * d.u.q;
        for (std::size_t i = 0; i < grid->size(); ++i) analytic += w[i] * (g.dphi[i] * d.u.phi[i] + g.dv[i] * d.v[i]);
        const double h = 1e-5;
        auto shifted = [&](double t) {
            auto x = s;
            x.u.q += t * d.u.q;
            for (std::size_t i = 0; i < grid->size(); ++i) {
                x.u.phi[i] += t * d.u.phi[i];
                x.v[i] += t * d.v[i];
            }
            return nehari_quotient(x, p.beta);
        };
        const double fd = (shifted(h) - shifted(-h)) / (2.0 * h);
        EXPECT_NEAR(fd / analytic, 1.0, 1e-6);
    }
}

TEST(Gradient, VanishesAtTheMinimizer) {
    const auto gs = minimize_scalar_regular(1.0);
    EXPECT_LT(gs.residuals.grad_norm, 1e-7);
}
