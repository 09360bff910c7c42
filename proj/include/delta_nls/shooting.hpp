#pragma once

// Independent reference for the interaction-free scalar level d0(1): the
// positive radial solution of v'' + v'/r - v + v^3 = 0 with v'(0) = 0 and
// v(inf) = 0, found by bisection on the initial height v(0).

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "delta_nls/errors.hpp"

namespace delta_nls {

struct ShootingOptions {
    double step = 1e-4;
    double r_end = 30.0;
    double bracket_lo = 2.0;
    double bracket_hi = 2.5;
    int max_bisections = 200;
};

struct ShootingResult {
    double height = 0.0;      // v(0)
    double grad_sq = 0.0;     // ||grad v||^2
    double mass = 0.0;        // ||v||_2^2
    double quartic = 0.0;     // ||v||_4^4
    double level = 0.0;       // (||grad v||^2 + ||v||^2) / 4
    double resolved_radius = 0.0;
};

namespace detail {

enum class ShotOutcome { overshoot, undershoot, survived };

struct Shot {
    ShotOutcome outcome = ShotOutcome::survived;
    std::vector<double> r, v, dv;
};

inline Shot shoot(double height, const ShootingOptions& opt, bool keep_profile) {
    const double h = opt.step;
    auto rhs = [](double r, double v, double dv) { return std::array<double, 2>{dv, -dv / r + v - v * v * v}; };
    const double c = (height - height * height * height) / 4.0;
    double r = h;
    double v = height + c * h * h;
    double dv = 2.0 * c * h;
    Shot shot;
    if (keep_profile) {
        shot.r.push_back(0.0);
        shot.v.push_back(height);
        shot.dv.push_back(0.0);
        shot.r.push_back(r);
        shot.v.push_back(v);
        shot.dv.push_back(dv);
    }
    while (r < opt.r_end) {
        const auto k1 = rhs(r, v, dv);
        const auto k2 = rhs(r + 0.5 * h, v + 0.5 * h * k1[0], dv + 0.5 * h * k1[1]);
        const auto k3 = rhs(r + 0.5 * h, v + 0.5 * h * k2[0], dv + 0.5 * h * k2[1]);
        const auto k4 = rhs(r + h, v + h * k3[0], dv + h * k3[1]);
        v += h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]);
        dv += h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]);
        r += h;
        if (v < 0.0) {
            shot.outcome = ShotOutcome::overshoot;
            return shot;
        }
        if (dv > 0.0) {
            shot.outcome = ShotOutcome::undershoot;
            return shot;
        }
        if (keep_profile) {
            shot.r.push_back(r);
            shot.v.push_back(v);
            shot.dv.push_back(dv);
        }
    }
    return shot;
}

} // namespace detail

/// Ground-state height and energies of -Lap v + v = v^3 on R^2 by shooting.
inline ShootingResult shooting_ground_state(const ShootingOptions& opt = {}) {
    using detail::ShotOutcome;
    double lo = opt.bracket_lo, hi = opt.bracket_hi;
    if (detail::shoot(lo, opt, false).outcome != ShotOutcome::undershoot ||
        detail::shoot(hi, opt, false).outcome != ShotOutcome::overshoot)
        throw OracleError("shooting bracket does not separate undershoot from overshoot");
    for (int k = 0; k < opt.max_bisections; ++k) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const auto out = detail::shoot(mid, opt, false).outcome;
        if (out == ShotOutcome::overshoot) hi = mid;
        else if (out == ShotOutcome::undershoot) lo = mid;
        else break;
    }
    // the undershooting profile is monotone up to the turning point, where it
    // is of the order of the unresolved exponentially growing mode
    const auto shot = detail::shoot(lo, opt, true);
    const std::size_t n = shot.r.size();
    if (n < 3) throw OracleError("shooting produced no profile");

    ShootingResult res;
    res.height = lo;
    res.resolved_radius = shot.r.back();
    const double two_pi = 2.0 * std::numbers::pi;
    for (std::size_t i = 1; i < n; ++i) {
        const double h = shot.r[i] - shot.r[i - 1];
        auto acc = [&](double f0, double f1) { return 0.5 * h * (f0 * shot.r[i - 1] + f1 * shot.r[i]); };
        res.grad_sq += two_pi * acc(shot.dv[i - 1] * shot.dv[i - 1], shot.dv[i] * shot.dv[i]);
        res.mass += two_pi * acc(shot.v[i - 1] * shot.v[i - 1], shot.v[i] * shot.v[i]);
        res.quartic += two_pi * acc(std::pow(shot.v[i - 1], 4), std::pow(shot.v[i], 4));
    }
    res.level = 0.25 * (res.grad_sq + res.mass);
    return res;
}

/// Reference value of d0(1).
inline double shooting_oracle(const ShootingOptions& opt = {}) { return shooting_ground_state(opt).level; }

} // namespace delta_nls
