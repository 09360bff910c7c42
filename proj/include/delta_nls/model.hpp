#pragma once

// Variational objects of the coupled cubic system with a point interaction
// acting on the first component.
//
// A state is a pair (u, v). The first component is decomposed as
// u = phi + q G_lambda with phi regular, q >= 0 the charge and G_lambda the
// Green's kernel of -Laplacian + lambda. Every functional here is expressed
// through three scalars:
//   A = <(-Lap_alpha + omega) u, u> + ||grad v||^2 + omega_tilde ||v||^2
//   B = ||u||_4^4 + ||v||_4^4
//   C = int u^2 v^2
// The energy along the ray t (u, v) is A t^2/2 - (kB + 2 beta C) t^4/4, so the
// Nehari projection and the mountain-pass value are closed form.

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "delta_nls/errors.hpp"
#include "delta_nls/radial_grid.hpp"
#include "delta_nls/specfun.hpp"

namespace delta_nls {

enum class Interaction { point, none };

inline const char* to_string(Interaction i) { return i == Interaction::point ? "point" : "none"; }

struct Params {
    double alpha = 0.0;
    double omega = 2.0;
    double omega_tilde = 1.0;
    double beta = 0.0;
    Interaction interaction = Interaction::point;

    /// Throws ConfigError naming the offending field.
    void validate() const {
        if (!std::isfinite(alpha)) throw ConfigError("params.alpha", "must be finite");
        if (!std::isfinite(omega)) throw ConfigError("params.omega", "must be finite");
        if (interaction == Interaction::point) {
            const double wa = omega_alpha(alpha);
            if (!(omega > wa))
                throw ConfigError("params.omega", "must exceed omega_alpha(alpha) = " + std::to_string(wa));
        } else if (!(omega > 0.0)) {
            throw ConfigError("params.omega", "must be positive");
        }
        if (!(omega_tilde > 0.0) || !std::isfinite(omega_tilde))
            throw ConfigError("params.omega_tilde", "must be positive");
        if (!(beta >= 0.0) || !std::isfinite(beta)) throw ConfigError("params.beta", "must be >= 0");
    }

    Params with_beta(double b) const {
        Params p = *this;
        p.beta = b;
        return p;
    }
    Params with_interaction(Interaction i) const {
        Params p = *this;
        p.interaction = i;
        return p;
    }
};

/// u = phi + q G_lambda.
struct Decomposition {
    Field phi;
    double q = 0.0;
    double lambda = 0.0;
};

struct CoupledState {
    Decomposition u;
    Field v;
    Params params;

    const GridPtr& grid() const { return v.grid(); }
};

/// Which quartic functional the Nehari ray is taken in:
///   energy = A/2 - self_weight B/4 - coupling C/2.
/// coupled(beta) is I_beta, limit() is the beta -> infinity functional
/// with no self-interaction, rescaled(beta) is the sqrt(beta)-rescaled I_beta.
struct Objective {
    double self_weight = 1.0;
    double coupling = 0.0;

    static Objective coupled(double beta) { return {1.0, beta}; }
    static Objective limit() { return {0.0, 1.0}; }
    static Objective rescaled(double beta) { return {1.0 / beta, 1.0}; }

    double denominator(double B, double C) const { return self_weight * B + 2.0 * coupling * C; }
};

struct EnergyReport {
    double A = 0.0;
    double B = 0.0;
    double C = 0.0;
    double I = 0.0;
    double G = 0.0;
    double J = 0.0;
    double t0 = std::numeric_limits<double>::infinity();
};

/// G_lambda sampled on the grid nodes.
inline std::vector<double> green_samples(const Grid& grid, double lambda) {
    std::vector<double> g(grid.size());
    const auto r = grid.nodes();
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = green_value(lambda, r[i]);
    return g;
}

/// Range check omega_alpha < lambda <= omega for the decomposition parameter.
inline void check_lambda(const Params& p, double lambda) {
    const double wa = omega_alpha(p.alpha);
    if (!(lambda > wa) || !(lambda <= p.omega))
        throw DomainError("lambda = " + std::to_string(lambda) + " outside (omega_alpha, omega] = (" +
                          std::to_string(wa) + ", " + std::to_string(p.omega) + "]");
}

inline void check_state(const CoupledState& s) {
    if (!s.v.grid() || !s.u.phi.grid()) throw UsageError("state without grid");
    require_same_grid(s.u.phi, s.v);
    if (s.params.interaction == Interaction::none) {
        if (s.u.q != 0.0) throw UsageError("interaction-free state must have zero charge");
    } else {
        check_lambda(s.params, s.u.lambda);
    }
}

/// Pointwise first component u(r_i) = phi(r_i) + q G_lambda(r_i).
inline std::vector<double> reconstruct_u(const Decomposition& d) {
    std::vector<double> u(d.phi.samples().begin(), d.phi.samples().end());
    if (d.q != 0.0) {
        const auto g = green_samples(*d.phi.grid(), d.lambda);
        for (std::size_t i = 0; i < u.size(); ++i) u[i] += d.q * g[i];
    }
    return u;
}

/// <(-Lap_alpha + omega) u, u>, or ||grad u||^2 + omega ||u||^2 without the
/// interaction. The singular mass ||G_lambda||^2 enters analytically.
inline double quadratic_form_u(const Decomposition& d, const Params& p) {
    const Grid& grid = *d.phi.grid();
    const auto phi = d.phi.samples();
    double phi_sq = 0.0;
    {
        const auto w = grid.weights();
        for (std::size_t i = 0; i < phi.size(); ++i) phi_sq += w[i] * phi[i] * phi[i];
    }
    const double grad = dirichlet_energy(grid, phi);
    if (p.interaction == Interaction::none) return grad + p.omega * phi_sq;

    check_lambda(p, d.lambda);
    const double lambda = d.lambda;
    double value = grad + lambda * phi_sq + (p.alpha + theta(lambda)) * d.q * d.q;
    if (p.omega != lambda) {
        double cross = 0.0;
        if (d.q != 0.0) {
            const auto g = green_samples(grid, lambda);
            const auto w = grid.weights();
            for (std::size_t i = 0; i < phi.size(); ++i) cross += w[i] * phi[i] * g[i];
        }
        const double u_sq = phi_sq + 2.0 * d.q * cross + d.q * d.q * green_l2_squared(lambda);
        value += (p.omega - lambda) * u_sq;
    }
    return value;
}

/// ||grad v||^2 + omega_tilde ||v||^2.
inline double quadratic_form_v(const Field& v, double omega_tilde) {
    const Grid& grid = *v.grid();
    const auto s = v.samples();
    const auto w = grid.weights();
    double sq = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) sq += w[i] * s[i] * s[i];
    return dirichlet_energy(grid, s) + omega_tilde * sq;
}

/// The quantity A.
inline double quadratic_form(const CoupledState& s) {
    check_state(s);
    return quadratic_form_u(s.u, s.params) + quadratic_form_v(s.v, s.params.omega_tilde);
}

struct QuarticTerms {
    double B = 0.0;
    double C = 0.0;
};

/// B = ||u||_4^4 + ||v||_4^4 and C = int u^2 v^2 with u reconstructed pointwise.
inline QuarticTerms quartic_terms(const CoupledState& s) {
    check_state(s);
    const Grid& grid = *s.grid();
    const auto u = reconstruct_u(s.u);
    const auto v = s.v.samples();
    const auto w = grid.weights();
    QuarticTerms t;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double u2 = u[i] * u[i];
        const double v2 = v[i] * v[i];
        t.B += w[i] * (u2 * u2 + v2 * v2);
        t.C += w[i] * u2 * v2;
    }
    return t;
}

inline EnergyReport make_report(double A, double B, double C, const Objective& obj) {
    EnergyReport r;
    r.A = A;
    r.B = B;
    r.C = C;
    const double D = obj.denominator(B, C);
    r.I = 0.5 * A - 0.25 * D;
    r.G = A - D;
    r.J = 0.25 * A;
    r.t0 = D > 0.0 ? std::sqrt(A / D) : std::numeric_limits<double>::infinity();
    return r;
}

inline EnergyReport energy(const CoupledState& s, const Objective& obj) {
    const double A = quadratic_form(s);
    const auto [B, C] = quartic_terms(s);
    return make_report(A, B, C, obj);
}

/// I_beta, G_beta, J and the Nehari scale at the state's own beta.
inline EnergyReport energy(const CoupledState& s) { return energy(s, Objective::coupled(s.params.beta)); }

/// max_t of the energy along the ray, A^2 / (4 (kB + 2 beta C)).
inline double nehari_quotient(double A, double B, double C, const Objective& obj) {
    const double D = obj.denominator(B, C);
    if (!(D > 0.0)) throw DegenerateRayError("Nehari ray is degenerate: B + 2 beta C = 0");
    return A * A / (4.0 * D);
}

inline double nehari_quotient(const CoupledState& s, const Objective& obj) {
    const double A = quadratic_form(s);
    const auto [B, C] = quartic_terms(s);
    return nehari_quotient(A, B, C, obj);
}

inline double nehari_quotient(const CoupledState& s, double beta) {
    return nehari_quotient(s, Objective::coupled(beta));
}

/// t * (u, v).
inline CoupledState scaled(CoupledState s, double t) {
    s.u.phi *= t;
    s.u.q *= t;
    s.v *= t;
    return s;
}

/// Rescales the state onto the Nehari manifold of the objective.
inline CoupledState nehari_project(const CoupledState& s, const Objective& obj) {
    const auto rep = energy(s, obj);
    if (!std::isfinite(rep.t0)) throw DegenerateRayError("cannot project: B + 2 beta C = 0");
    return scaled(s, rep.t0);
}

/// Re-expresses u with decomposition parameter lambda_new; the charge and the
/// pointwise values of u are unchanged.
inline Decomposition convert_lambda(const Decomposition& d, double lambda_new, const Params& p) {
    if (p.interaction == Interaction::none) throw UsageError("convert_lambda: state has no point interaction");
    check_lambda(p, lambda_new);
    Decomposition out = d;
    out.lambda = lambda_new;
    if (lambda_new == d.lambda || d.q == 0.0) return out;
    const auto r = d.phi.grid()->nodes();
    for (std::size_t i = 0; i < r.size(); ++i)
        out.phi[i] += d.q * (green_value(d.lambda, r[i]) - green_value(lambda_new, r[i]));
    return out;
}

inline CoupledState convert_lambda(const CoupledState& s, double lambda_new) {
    CoupledState out = s;
    out.u = convert_lambda(s.u, lambda_new, s.params);
    return out;
}

/// S_omega(u) with the interaction (or S0_omega without it).
inline double scalar_functional_u(const Decomposition& u, const Params& p) {
    const double a = quadratic_form_u(u, p);
    const auto uu = reconstruct_u(u);
    const auto w = u.phi.grid()->weights();
    double b = 0.0;
    for (std::size_t i = 0; i < uu.size(); ++i) b += w[i] * uu[i] * uu[i] * uu[i] * uu[i];
    return 0.5 * a - 0.25 * b;
}

/// S0_{omega_tilde}(v).
inline double scalar_functional_v(const Field& v, double omega_tilde) {
    const double a = quadratic_form_v(v, omega_tilde);
    const auto s = v.samples();
    const auto w = v.grid()->weights();
    double b = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) b += w[i] * s[i] * s[i] * s[i] * s[i];
    return 0.5 * a - 0.25 * b;
}

/// Zero state (u, v) = (0, 0) with lambda = omega.
inline CoupledState zero_state(GridPtr grid, const Params& p) {
    CoupledState s;
    s.u.phi = Field(grid);
    s.u.q = 0.0;
    s.u.lambda = p.omega;
    s.v = Field(grid);
    s.params = p;
    return s;
}

} // namespace delta_nls
