#pragma once

// Fast analytic identity checks: special functions, quadrature and the
// algebra of the Nehari functionals. No minimization is performed.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "delta_nls/model.hpp"
#include "delta_nls/radial_grid.hpp"
#include "delta_nls/specfun.hpp"

namespace delta_nls {

struct IdentityCheck {
    std::string name;
    double error = 0.0;
    double tolerance = 0.0;
    bool pass() const { return error <= tolerance; }
};

inline std::vector<IdentityCheck> identity_checks() {
    std::vector<IdentityCheck> out;

    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const double a = -3.0 + 6.0 * k / 99.0;
        worst = std::max(worst, std::abs(a + theta(omega_alpha(a))));
    }
    out.push_back({"alpha + theta(omega_alpha) = 0 on [-3, 3]", worst, 1e-14});

    struct Known {
        double z, k0;
    };
    worst = 0.0;
    for (auto [z, k0] : {Known{1e-8, 18.536612259610778388}, Known{0.5, 0.92441907122766586178},
                         Known{2.0, 0.11389387274953343565}, Known{5.0, 0.0036910983340425942747},
                         Known{30.0, 2.1324774964630563712e-14}, Known{300.0, 3.7236948548891432633e-132}})
        worst = std::max(worst, std::abs(bessel_k0(z) - k0) / k0);
    out.push_back({"K0 against tabulated values", worst, 1e-12});

    worst = 0.0;
    for (double lambda : {0.5, 1.0, 2.0, 5.0, 10.0}) {
        const auto grid = Grid::make(40.0 / std::sqrt(lambda), 4096, 2.0);
        auto g = green_samples(*grid, lambda);
        for (double& x : g) x *= x;
        worst = std::max(worst, std::abs(integrate(*grid, g) * 4.0 * std::numbers::pi * lambda - 1.0));
    }
    out.push_back({"quadrature of ||G_lambda||^2 = 1/(4 pi lambda)", worst, 1e-6});

    {
        const auto grid = Grid::make(20.0, 2048, 2.0);
        std::vector<double> ones(grid->size(), 1.0);
        out.push_back({"weights sum to pi r_max^2",
                       std::abs(integrate(*grid, ones) / (std::numbers::pi * 400.0) - 1.0), 1e-13});
    }

    {
        const Params p{0.0, 2.0, 1.0, 1.5, Interaction::point};
        const auto grid = Grid::make(30.0, 2048, 2.0);
        auto s = zero_state(grid, p);
        const auto r = grid->nodes();
        for (std::size_t i = 0; i + 1 < r.size(); ++i) {
            s.u.phi[i] = std::exp(-r[i] * r[i]) * (1.0 + r[i]);
            s.v[i] = std::exp(-0.5 * r[i] * r[i]);
        }
        s.u.q = 0.7;
        const auto proj = nehari_project(s, Objective::coupled(p.beta));
        const auto rep = energy(proj);
        out.push_back({"Nehari projection zeroes G", std::abs(rep.G) / rep.A, 1e-13});
        out.push_back({"I = J on the Nehari manifold", std::abs(rep.I - rep.J) / rep.J, 1e-13});
        out.push_back({"quotient equals I on the Nehari manifold",
                       std::abs(nehari_quotient(s, p.beta) - rep.I) / rep.I, 1e-13});
        const double lambda = 0.5 * (omega_alpha(p.alpha) + p.omega);
        const double q0 = nehari_quotient(s, p.beta);
        out.push_back({"quotient invariant under change of lambda",
                       std::abs(nehari_quotient(convert_lambda(s, lambda), p.beta) - q0) / q0, 1e-6});
        const double mu = 3.0;
        out.push_back({"I(t s) = t^2 A/2 - t^4 (B + 2 beta C)/4",
                       std::abs(energy(scaled(s, mu)).I -
                                (0.5 * mu * mu * energy(s).A - 0.25 * std::pow(mu, 4) * (energy(s).B + 2 * p.beta * energy(s).C))) /
                           std::abs(energy(scaled(s, mu)).I),
                       1e-12});
    }
    return out;
}

} // namespace delta_nls
