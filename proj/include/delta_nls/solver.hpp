#pragma once

// Ground states as minimizers of the scale-invariant Nehari quotient
//   Q(x) = A(x)^2 / (4 (k B(x) + 2 beta C(x))),
// over the unprojected triple x = (phi, q, v) sampled on a radial grid.
//
// Descent runs in the metric of the quadratic form A itself (a Sobolev
// gradient): the search direction K^{-1} dQ is obtained from two tridiagonal
// solves and one scalar division, which makes the iteration count
// independent of the grid spacing. Iterates are clipped at zero after each
// step and rescaled onto the Nehari manifold, which leaves Q unchanged.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "delta_nls/classification.hpp"
#include "delta_nls/errors.hpp"
#include "delta_nls/model.hpp"
#include "delta_nls/radial_grid.hpp"
#include "delta_nls/specfun.hpp"

namespace delta_nls {

enum class SeedPolicy { all, gaussian, scalar_u, scalar_v };

inline const char* to_string(SeedPolicy s) {
    switch (s) {
    case SeedPolicy::all: return "all";
    case SeedPolicy::gaussian: return "gaussian";
    case SeedPolicy::scalar_u: return "scalar_u";
    case SeedPolicy::scalar_v: return "scalar_v";
    }
    return "?";
}

struct SolveOptions {
    std::size_t max_iters = 20000;
    double grad_tol = 1e-7;
    double initial_step = 1.0;
    double shrink = 0.5;
    double armijo = 1e-4;
    std::size_t restarts = 2;
    SeedPolicy seeds = SeedPolicy::all;
    // r_max <= 0 selects 40 / sqrt(min(omega_tilde, omega))
    GridSpec grid{4096, 0.0, 2.0};

    void validate() const {
        if (max_iters == 0) throw ConfigError("solver.max_iters", "must be positive");
        if (!(grad_tol > 0.0)) throw ConfigError("solver.grad_tol", "must be positive");
        if (!(initial_step > 0.0)) throw ConfigError("solver.initial_step", "must be positive");
        if (!(shrink > 0.0 && shrink < 1.0)) throw ConfigError("solver.shrink", "must lie in (0, 1)");
        if (!(armijo > 0.0 && armijo <= 0.5)) throw ConfigError("solver.armijo", "must lie in (0, 0.5]");
        if (grid.n < 16) throw ConfigError("grid.n", "must be at least 16");
        if (!(grid.grading >= 1.0)) throw ConfigError("grid.grading", "must be >= 1");
    }
};

/// Truncation radius resolving decay rates sqrt(omega) and sqrt(omega_tilde).
inline double default_r_max(double omega, double omega_tilde) { return 40.0 / std::sqrt(std::min(omega, omega_tilde)); }

inline GridSpec resolve_grid(const SolveOptions& opt, double omega, double omega_tilde) {
    GridSpec g = opt.grid;
    if (!(g.r_max > 0.0)) g.r_max = default_r_max(omega, omega_tilde);
    return g;
}

struct Residuals {
    double grad_norm = 0.0;          // ||projected Sobolev gradient||_A / ||x||_A
    double boundary_residual = 0.0;  // |phi(0) - (alpha + theta_omega) q|
    double nehari_residual = 0.0;    // |G| / A
};

struct GroundState {
    CoupledState state;
    Objective objective;
    double level = 0.0;
    EnergyReport report;
    Residuals residuals;
    Classification classification;
    std::size_t iterations = 0;
    bool converged = false;
    bool clipping_active = false;
    std::string seed;
    std::vector<double> history; // quotient after every accepted step
};

/// Raised when no seed reaches the gradient tolerance; carries the best iterate.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, GroundState best) : Error(what), best_(std::move(best)) {}
    const GroundState& best() const noexcept { return best_; }
    const char* kind() const noexcept override { return "convergence"; }

private:
    GroundState best_;
};

/// Which slots of (phi, q, v) are free.
struct Components {
    bool u = true;
    bool q = true;
    bool v = true;
};

/// The discrete quotient on a fixed grid with canonical lambda = omega, its
/// exact gradient, and the A-metric preconditioner.
class NehariProblem {
public:
    struct Values {
        double A = 0.0;
        double B = 0.0;
        double C = 0.0;
        double D = 0.0;
        double Q = std::numeric_limits<double>::infinity();
    };

    NehariProblem(GridPtr grid, const Params& params, const Objective& obj, Components active)
        : grid_(std::move(grid)), params_(params), obj_(obj), active_(active), n_(grid_->size()) {
        params_.validate();
        if (params_.interaction == Interaction::none) active_.q = false;
        if (!active_.u) active_.q = false;
        kq_ = params_.interaction == Interaction::point ? params_.alpha + theta(params_.omega) : 1.0;
        if (params_.interaction == Interaction::point) green_ = green_samples(*grid_, params_.omega);
        else green_.assign(n_, 0.0);
        factor(params_.omega, lu_u_);
        factor(params_.omega_tilde, lu_v_);
    }

    std::size_t field_size() const noexcept { return n_; }
    std::size_t size() const noexcept { return 2 * n_ + 1; }
    std::size_t q_index() const noexcept { return n_; }
    const GridPtr& grid() const noexcept { return grid_; }
    const Params& params() const noexcept { return params_; }
    const Objective& objective() const noexcept { return obj_; }
    const Components& active() const noexcept { return active_; }
    std::span<const double> green() const noexcept { return green_; }
    double charge_stiffness() const noexcept { return kq_; }

    /// x^T K x, the quadratic form A in flat coordinates.
    double a_norm_sq(std::span<const double> x) const {
        const auto w = grid_->weights();
        const auto phi = x.subspan(0, n_);
        const auto v = x.subspan(n_ + 1, n_);
        double mu = 0.0, mv = 0.0;
        for (std::size_t i = 0; i < n_; ++i) {
            mu += w[i] * phi[i] * phi[i];
            mv += w[i] * v[i] * v[i];
        }
        return dirichlet_energy(*grid_, phi) + params_.omega * mu + kq_ * x[n_] * x[n_] +
               dirichlet_energy(*grid_, v) + params_.omega_tilde * mv;
    }

    Values evaluate(std::span<const double> x) const {
        Values val;
        val.A = a_norm_sq(x);
        const auto w = grid_->weights();
        const double q = x[n_];
        for (std::size_t i = 0; i < n_; ++i) {
            const double u = x[i] + q * green_[i];
            const double v = x[n_ + 1 + i];
            const double u2 = u * u, v2 = v * v;
            val.B += w[i] * (u2 * u2 + v2 * v2);
            val.C += w[i] * u2 * v2;
        }
        val.D = obj_.denominator(val.B, val.C);
        val.Q = val.D > 0.0 ? val.A * val.A / (4.0 * val.D) : std::numeric_limits<double>::infinity();
        return val;
    }

    /// Partial derivatives dQ/dx_k of the discrete quotient (all slots, no pins).
    void partials(std::span<const double> x, const Values& val, std::span<double> out) const {
        if (!(val.D > 0.0)) throw DegenerateRayError("quotient gradient: B + 2 beta C = 0");
        // dQ = (A / 2D) dA - (A^2 / 4D^2) dD with dA = 2 K x and dD = 4 f
        const double ca = val.A / val.D;
        const double cd = val.A * val.A / (val.D * val.D);
        const auto w = grid_->weights();
        const auto c = grid_->stiffness();
        const double q = x[n_];
        const double k = obj_.self_weight, b = obj_.coupling;
        double dq = 0.0;
        for (std::size_t i = 0; i < n_; ++i) {
            const double u = x[i] + q * green_[i];
            const double v = x[n_ + 1 + i];
            const double fu = w[i] * (k * u * u * u + b * u * v * v);
            const double fv = w[i] * (k * v * v * v + b * u * u * v);
            dq += fu * green_[i];
            out[i] = ca * (stiffness_apply(x.subspan(0, n_), c, i) + params_.omega * w[i] * x[i]) - cd * fu;
            out[n_ + 1 + i] = ca * (stiffness_apply(x.subspan(n_ + 1, n_), c, i) + params_.omega_tilde * w[i] * x[n_ + 1 + i]) - cd * fv;
        }
        out[n_] = params_.interaction == Interaction::point ? ca * kq_ * q - cd * dq : 0.0;
    }

    /// Zeroes the slots that are held fixed: inactive components and the
    /// Dirichlet node at r_max.
    void apply_pins(std::span<double> g) const {
        if (!active_.u) std::fill(g.begin(), g.begin() + n_, 0.0);
        if (!active_.q) g[n_] = 0.0;
        if (!active_.v) std::fill(g.begin() + n_ + 1, g.end(), 0.0);
        g[n_ - 1] = 0.0;
        g[2 * n_] = 0.0;
    }

    /// In-place K^{-1} on a pinned gradient.
    void precondition(std::span<double> g) const {
        solve(lu_u_, g.subspan(0, n_));
        g[n_] /= kq_;
        solve(lu_v_, g.subspan(n_ + 1, n_));
    }

private:
    struct Tridiagonal {
        std::vector<double> lower; // sub-diagonal multipliers
        std::vector<double> diag;  // pivots
        std::vector<double> upper;
    };

    static double stiffness_apply(std::span<const double> f, std::span<const double> c, std::size_t i) {
        const std::size_t n = f.size();
        double s = 0.0;
        if (i >= 1) s += c[i] * (f[i] - f[i - 1]);
        if (i + 1 < n) s += c[i + 1] * (f[i] - f[i + 1]);
        return s;
    }

    // LU of T + mass W on nodes 0..n-2; the last node is pinned to zero.
    void factor(double mass, Tridiagonal& t) const {
        const std::size_t m = n_ - 1;
        const auto w = grid_->weights();
        const auto c = grid_->stiffness();
        t.lower.assign(m, 0.0);
        t.diag.assign(m, 0.0);
        t.upper.assign(m, 0.0);
        for (std::size_t i = 0; i < m; ++i) {
            double d = mass * w[i];
            if (i >= 1) d += c[i];
            d += c[i + 1];
            t.diag[i] = d;
            if (i + 1 < m) t.upper[i] = -c[i + 1];
        }
        for (std::size_t i = 1; i < m; ++i) {
            t.lower[i] = t.upper[i - 1] / t.diag[i - 1];
            t.diag[i] -= t.lower[i] * t.upper[i - 1];
        }
    }

    void solve(const Tridiagonal& t, std::span<double> b) const {
        const std::size_t m = n_ - 1;
        for (std::size_t i = 1; i < m; ++i) b[i] -= t.lower[i] * b[i - 1];
        b[m - 1] /= t.diag[m - 1];
        for (std::size_t i = m - 1; i-- > 0;) b[i] = (b[i] - t.upper[i] * b[i + 1]) / t.diag[i];
        b[m] = 0.0;
    }

    GridPtr grid_;
    Params params_;
    Objective obj_;
    Components active_;
    std::size_t n_;
    double kq_ = 1.0;
    std::vector<double> green_;
    Tridiagonal lu_u_;
    Tridiagonal lu_v_;
};

/// Flat (phi, q, v) coordinates of a state with lambda = omega.
inline std::vector<double> flatten(const CoupledState& s) {
    const std::size_t n = s.grid()->size();
    std::vector<double> x(2 * n + 1);
    std::copy(s.u.phi.samples().begin(), s.u.phi.samples().end(), x.begin());
    x[n] = s.u.q;
    std::copy(s.v.samples().begin(), s.v.samples().end(), x.begin() + n + 1);
    return x;
}

inline CoupledState unflatten(std::span<const double> x, const GridPtr& grid, const Params& p) {
    const std::size_t n = grid->size();
    CoupledState s;
    s.params = p;
    s.u.phi = Field(grid, std::vector<double>(x.begin(), x.begin() + n));
    s.u.q = x[n];
    s.u.lambda = p.omega;
    s.v = Field(grid, std::vector<double>(x.begin() + n + 1, x.end()));
    return s;
}

struct QuotientGradient {
    Field dphi; // gradient in the quadrature inner product sum_i w_i f_i g_i
    double dq = 0.0;
    Field dv;
};

/// Gradient of the Nehari quotient with respect to (phi samples, q, v samples).
/// The state is re-expressed with lambda = omega first.
inline QuotientGradient quotient_gradient(const CoupledState& state, const Objective& obj) {
    check_state(state);
    CoupledState s = state;
    if (s.params.interaction == Interaction::point && s.u.lambda != s.params.omega)
        s = convert_lambda(s, s.params.omega);
    NehariProblem prob(s.grid(), s.params, obj, {});
    const auto x = flatten(s);
    const auto val = prob.evaluate(x);
    std::vector<double> g(x.size());
    prob.partials(x, val, g);
    const std::size_t n = prob.field_size();
    const auto w = s.grid()->weights();
    QuotientGradient out{Field(s.grid()), g[n], Field(s.grid())};
    for (std::size_t i = 0; i < n; ++i) {
        out.dphi[i] = g[i] / w[i];
        out.dv[i] = g[n + 1 + i] / w[i];
    }
    return out;
}

inline QuotientGradient quotient_gradient(const CoupledState& state, double beta) {
    return quotient_gradient(state, Objective::coupled(beta));
}

namespace detail {

inline void clip(std::span<double> x) {
    for (double& e : x) e = std::max(e, 0.0);
}

struct DescentResult {
    std::vector<double> x;
    NehariProblem::Values values;
    double grad_norm = std::numeric_limits<double>::infinity();
    std::size_t iterations = 0;
    bool converged = false;
    bool clipping_active = false;
    std::vector<double> history;
};

// Projected descent in the A-metric. Directions are preconditioned
// Polak-Ribiere+ conjugate gradients, reset to steepest descent whenever they
// fail to descend. Steps satisfy the Armijo condition; a parabola through
// Q(0), Q'(0) and the first trial refines the step.
inline DescentResult descend(const NehariProblem& prob, std::vector<double> x, const SolveOptions& opt,
                             std::size_t max_iters) {
    const std::size_t m = x.size();
    DescentResult res;
    std::vector<double> grad(m), g(m), dir(m, 0.0), trial(m), best_trial(m), proj(m);
    std::vector<double> grad_prev(m, 0.0), g_prev(m, 0.0);
    bool have_prev = false;

    auto rescale = [&](std::vector<double>& y, NehariProblem::Values& val) {
        const double t = std::sqrt(val.A / val.D);
        for (double& e : y) e *= t;
        for (double& e : dir) e *= t;
        val.A *= t * t;
        val.B *= t * t * t * t;
        val.C *= t * t * t * t;
        val.D *= t * t * t * t;
        return t;
    };
    auto dot = [&](const std::vector<double>& a, const std::vector<double>& b) {
        double s = 0.0;
        for (std::size_t k = 0; k < m; ++k) s += a[k] * b[k];
        return s;
    };

    prob.apply_pins(x);
    clip(x);
    auto val = prob.evaluate(x);
    if (!(val.D > 0.0) || !(val.A > 0.0)) throw DegenerateRayError("seed lies on a degenerate Nehari ray");
    rescale(x, val);
    double step = opt.initial_step;

    for (std::size_t it = 0;; ++it) {
        prob.partials(x, val, grad);
        prob.apply_pins(grad);
        std::copy(grad.begin(), grad.end(), g.begin());
        prob.precondition(g);

        for (std::size_t k = 0; k < m; ++k) proj[k] = x[k] - std::max(x[k] - g[k], 0.0);
        res.grad_norm = std::sqrt(std::max(prob.a_norm_sq(proj), 0.0) / val.A);
        res.iterations = it;
        if (res.grad_norm <= opt.grad_tol) {
            res.converged = true;
            break;
        }
        if (it >= max_iters) break;

        double beta_cg = 0.0;
        if (have_prev) {
            const double den = dot(grad_prev, g_prev);
            double num = 0.0;
            for (std::size_t k = 0; k < m; ++k) num += grad[k] * (g[k] - g_prev[k]);
            beta_cg = den > 0.0 ? std::max(0.0, num / den) : 0.0;
        }
        for (std::size_t k = 0; k < m; ++k) dir[k] = -g[k] + beta_cg * dir[k];
        double slope = dot(grad, dir);
        if (!(slope < 0.0)) {
            for (std::size_t k = 0; k < m; ++k) dir[k] = -g[k];
            slope = dot(grad, dir);
        }

        auto try_step = [&](double tau, std::vector<double>& out, NehariProblem::Values& tv) {
            for (std::size_t k = 0; k < m; ++k) out[k] = std::max(x[k] + tau * dir[k], 0.0);
            tv = prob.evaluate(out);
            double decrease = 0.0;
            for (std::size_t k = 0; k < m; ++k) decrease += grad[k] * (x[k] - out[k]);
            return tv.D > 0.0 && tv.Q <= val.Q - opt.armijo * decrease;
        };

        bool accepted = false;
        double tau = step;
        NehariProblem::Values tv, best_tv;
        double best_tau = 0.0;
        while (tau > 1e-14 * opt.initial_step) {
            if (try_step(tau, trial, tv)) {
                accepted = true;
                best_tau = tau;
                best_tv = tv;
                std::swap(best_trial, trial);
                break;
            }
            // minimizer of the parabola through Q(0), Q'(0) and Q(tau)
            double next = opt.shrink * tau;
            if (tv.D > 0.0 && std::isfinite(tv.Q)) {
                const double curv = tv.Q - val.Q - slope * tau;
                if (curv > 0.0) next = std::clamp(-slope * tau * tau / (2.0 * curv), 0.1 * tau, opt.shrink * tau);
            }
            tau = next;
        }
        if (!accepted) {
            if (have_prev) { // retry once from steepest descent
                have_prev = false;
                std::fill(dir.begin(), dir.end(), 0.0);
                continue;
            }
            break;
        }
        if (best_tau == step) {
            const double curv = best_tv.Q - val.Q - slope * best_tau;
            if (curv > 0.0) {
                const double cand = std::min(-slope * best_tau * best_tau / (2.0 * curv), 8.0 * best_tau);
                if (std::abs(cand - best_tau) > 0.05 * best_tau && try_step(cand, trial, tv) && tv.Q < best_tv.Q) {
                    best_tau = cand;
                    best_tv = tv;
                    std::swap(best_trial, trial);
                }
            }
        }

        std::swap(grad_prev, grad);
        std::swap(g_prev, g);
        have_prev = true;
        for (std::size_t k = 0; k < m; ++k) dir[k] = (best_trial[k] - x[k]) / best_tau;
        x.swap(best_trial);
        val = best_tv;
        const double t = rescale(x, val);
        // gradients scale like 1/t under x -> t x
        for (double& e : grad_prev) e /= t;
        for (double& e : g_prev) e /= t;
        res.history.push_back(val.Q);
        step = best_tau;
    }

    for (std::size_t k = 0; k < m; ++k)
        if (x[k] == 0.0 && g[k] > 0.0) res.clipping_active = true;
    res.x = std::move(x);
    res.values = val;
    return res;
}

inline std::vector<double> gaussian_seed(const NehariProblem& prob, double u_amp, double q, double v_amp) {
    const auto& p = prob.params();
    const auto r = prob.grid()->nodes();
    const std::size_t n = prob.field_size();
    std::vector<double> x(prob.size(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = u_amp * std::exp(-0.5 * p.omega * r[i] * r[i]);
        x[n + 1 + i] = v_amp * std::exp(-0.5 * p.omega_tilde * r[i] * r[i]);
    }
    x[n] = p.interaction == Interaction::point ? q : 0.0;
    return x;
}

inline constexpr double seed_perturbation = 1e-4;

inline GroundState finish(const NehariProblem& prob, const DescentResult& res, const std::string& seed) {
    GroundState gs;
    gs.objective = prob.objective();
    gs.state = unflatten(res.x, prob.grid(), prob.params());
    gs.report = energy(gs.state, gs.objective);
    if (std::isfinite(gs.report.t0) && gs.report.t0 != 1.0) {
        gs.state = scaled(gs.state, gs.report.t0);
        gs.report = energy(gs.state, gs.objective);
    }
    gs.level = gs.report.I;
    gs.residuals.grad_norm = res.grad_norm;
    gs.residuals.nehari_residual = gs.report.A > 0.0 ? std::abs(gs.report.G) / gs.report.A : 0.0;
    if (prob.params().interaction == Interaction::point)
        gs.residuals.boundary_residual =
            std::abs(value_at_origin(gs.state.u.phi) - (prob.params().alpha + theta(prob.params().omega)) * gs.state.u.q);
    gs.iterations = res.iterations;
    gs.converged = res.converged;
    gs.clipping_active = res.clipping_active;
    gs.seed = seed;
    gs.history = res.history;
    if (gs.report.A > 0.0) gs.classification = classify_state(gs.state);
    return gs;
}

// One seed with restarts from the best iterate.
inline GroundState run_seed(const NehariProblem& prob, std::vector<double> x, const SolveOptions& opt,
                            const std::string& name) {
    DescentResult res = descend(prob, std::move(x), opt, opt.max_iters);
    std::size_t total = res.iterations;
    std::vector<double> history = res.history;
    for (std::size_t r = 0; r < opt.restarts && !res.converged; ++r) {
        res = descend(prob, res.x, opt, opt.max_iters);
        total += res.iterations;
        history.insert(history.end(), res.history.begin(), res.history.end());
    }
    res.iterations = total;
    res.history = std::move(history);
    return finish(prob, res, name);
}

inline GridPtr make_solver_grid(const SolveOptions& opt, double omega, double omega_tilde) {
    opt.validate();
    return Grid::make(resolve_grid(opt, omega, omega_tilde));
}

// Lower level wins; near-ties go to the vector branch.
inline const GroundState& select_best(const std::vector<GroundState>& runs) {
    const GroundState* best = &runs.front();
    for (const auto& gs : runs) {
        const double tie = 1e-9 * std::abs(best->level);
        if (gs.level < best->level - tie) best = &gs;
        else if (std::abs(gs.level - best->level) <= tie && best->classification.is_scalar() &&
                 !gs.classification.is_scalar())
            best = &gs;
    }
    return *best;
}

inline GroundState pick(std::vector<GroundState> runs, const char* what) {
    std::vector<GroundState> ok;
    for (auto& r : runs)
        if (r.converged) ok.push_back(r);
    if (ok.empty()) {
        const GroundState& best = select_best(runs);
        throw ConvergenceError(std::string(what) + ": no seed reached the gradient tolerance (best residual " +
                                   std::to_string(best.residuals.grad_norm) + ")",
                               best);
    }
    return select_best(ok);
}

} // namespace detail

/// Multi-start minimization of the quotient on a given grid.
inline GroundState minimize_on_grid(GridPtr grid, const Params& params, const Objective& obj, Components active,
                                    const SolveOptions& opt, const char* what = "minimize") {
    opt.validate();
    NehariProblem prob(std::move(grid), params, obj, active);
    const double eps = detail::seed_perturbation;
    std::vector<GroundState> runs;
    const bool vector_problem = prob.active().u && prob.active().v;
    const bool all = opt.seeds == SeedPolicy::all;
    if (!vector_problem) {
        runs.push_back(detail::run_seed(prob, detail::gaussian_seed(prob, 1.0, 0.3, 1.0), opt, "gaussian"));
        return detail::pick(std::move(runs), what);
    }
    if (all || opt.seeds == SeedPolicy::gaussian)
        runs.push_back(detail::run_seed(prob, detail::gaussian_seed(prob, 1.0, 0.3, 1.0), opt, "gaussian"));
    if ((all && obj.self_weight > 0.0) || opt.seeds == SeedPolicy::scalar_u)
        runs.push_back(detail::run_seed(prob, detail::gaussian_seed(prob, 1.0, 0.3, eps), opt, "scalar_u"));
    if ((all && obj.self_weight > 0.0) || opt.seeds == SeedPolicy::scalar_v)
        runs.push_back(detail::run_seed(prob, detail::gaussian_seed(prob, eps, 0.3 * eps, 1.0), opt, "scalar_v"));
    return detail::pick(std::move(runs), what);
}

/// Coupled ground state level c_beta (or c0_beta when params.interaction == none).
inline GroundState minimize_coupled(const Params& params, const SolveOptions& opt = {}) {
    params.validate();
    auto grid = detail::make_solver_grid(opt, params.omega, params.omega_tilde);
    return minimize_on_grid(grid, params, Objective::coupled(params.beta), {}, opt, "minimize_coupled");
}

/// d(omega): ground state of the single equation with the point interaction.
inline GroundState minimize_scalar_point(double omega, double alpha, const SolveOptions& opt = {}) {
    Params p{alpha, omega, omega, 0.0, Interaction::point};
    p.validate();
    auto grid = detail::make_solver_grid(opt, omega, omega);
    return minimize_on_grid(grid, p, Objective::coupled(0.0), {true, true, false}, opt, "minimize_scalar_point");
}

/// d0(omega_tilde): ground state of the single equation without interaction.
inline GroundState minimize_scalar_regular(double omega_tilde, const SolveOptions& opt = {}) {
    Params p{0.0, omega_tilde, omega_tilde, 0.0, Interaction::none};
    p.validate();
    auto grid = detail::make_solver_grid(opt, omega_tilde, omega_tilde);
    return minimize_on_grid(grid, p, Objective::coupled(0.0), {false, false, true}, opt, "minimize_scalar_regular");
}

/// c~_infinity: the beta -> infinity limit functional with no self-interaction.
inline GroundState minimize_limit(const Params& params, const SolveOptions& opt = {}) {
    params.validate();
    auto grid = detail::make_solver_grid(opt, params.omega, params.omega_tilde);
    return minimize_on_grid(grid, params, Objective::limit(), {}, opt, "minimize_limit");
}

} // namespace delta_nls
