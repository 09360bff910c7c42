#pragma once

// Parameter-space analysis on top of the solver: beta sweeps of the levels
// with and without the interaction, bisection for the thresholds beta* and
// beta0, the regime table and the large-beta asymptotics.
//
// All levels for one (alpha, omega, omega_tilde) are computed on a single
// grid, so that equal continuum levels (scalar branches shared by several
// problems) coincide to solver precision.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <future>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "delta_nls/classification.hpp"
#include "delta_nls/errors.hpp"
#include "delta_nls/model.hpp"
#include "delta_nls/solver.hpp"

namespace delta_nls {

/// Refuses unconverged input; otherwise thresholds the state.
inline Classification classify(const GroundState& gs, const ClassificationTolerances& tol = {}) {
    if (!gs.converged) throw UsageError("classify: ground state did not converge");
    return classify_state(gs.state, tol);
}

/// Runs jobs on up to `threads` workers; results keep input order.
template <class T>
std::vector<T> run_ordered(std::size_t count, const std::function<T(std::size_t)>& job, std::size_t threads) {
    std::vector<T> out(count);
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = job(i);
        return out;
    }
    std::size_t next = 0;
    while (next < count) {
        std::vector<std::future<T>> batch;
        const std::size_t end = std::min(count, next + threads);
        for (std::size_t i = next; i < end; ++i) batch.push_back(std::async(std::launch::async, job, i));
        for (std::size_t i = next; i < end; ++i) out[i] = batch[i - next].get();
        next = end;
    }
    return out;
}

inline std::size_t default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

/// Reference levels for fixed (alpha, omega, omega_tilde) on a shared grid.
class Baseline {
public:
    Baseline(const Params& params, const SolveOptions& opt) : params_(params), opt_(opt) {
        params_.beta = 0.0;
        params_.interaction = Interaction::point;
        params_.validate();
        grid_ = Grid::make(resolve_grid(opt, params_.omega, params_.omega_tilde));
        d_omega_ = minimize_on_grid(grid_, params_, Objective::coupled(0.0), {true, true, false}, opt_, "d(omega)");
        d0_omega_tilde_ = minimize_on_grid(grid_, params_.with_interaction(Interaction::none), Objective::coupled(0.0),
                                           {false, false, true}, opt_, "d0(omega_tilde)");
        d0_omega_ = minimize_on_grid(grid_, params_.with_interaction(Interaction::none), Objective::coupled(0.0),
                                     {true, false, false}, opt_, "d0(omega)");
    }

    const Params& params() const noexcept { return params_; }
    const SolveOptions& options() const noexcept { return opt_; }
    const GridPtr& grid() const noexcept { return grid_; }

    double d_omega() const { return d_omega_.level; }
    double d0_omega_tilde() const { return d0_omega_tilde_.level; }
    double d0_omega() const { return d0_omega_.level; }
    const GroundState& d_omega_state() const { return d_omega_; }
    const GroundState& d0_omega_tilde_state() const { return d0_omega_tilde_; }

    /// c_0 = min{d(omega), d0(omega_tilde)}.
    double c0() const { return std::min(d_omega(), d0_omega_tilde()); }
    /// c0_0 = min{d0(omega), d0(omega_tilde)}.
    double c00() const { return std::min(d0_omega(), d0_omega_tilde()); }

    GroundState coupled(double beta) const {
        const Params p = params_.with_beta(beta);
        return minimize_on_grid(grid_, p, Objective::coupled(beta), {}, opt_, "c_beta");
    }
    GroundState coupled_free(double beta) const {
        const Params p = params_.with_beta(beta).with_interaction(Interaction::none);
        return minimize_on_grid(grid_, p, Objective::coupled(beta), {}, opt_, "c0_beta");
    }
    GroundState limit() const {
        return minimize_on_grid(grid_, params_, Objective::limit(), {}, opt_, "c_inf");
    }

private:
    Params params_;
    SolveOptions opt_;
    GridPtr grid_;
    GroundState d_omega_;
    GroundState d0_omega_tilde_;
    GroundState d0_omega_;
};

struct SweepRow {
    double beta = 0.0;
    double c_beta = 0.0;
    double c0_beta = 0.0;
    Classification classification;
    double q = 0.0;
    double norm_u = 0.0;
    double norm_v = 0.0;
    double beta_c = 0.0;
    bool ok = false;
    std::string error;
};

struct Sweep {
    std::vector<SweepRow> rows;
    double c0 = 0.0;
    double c00 = 0.0;
    double c_inf = 0.0;
    double d_omega = 0.0;
    double d0_omega_tilde = 0.0;
    std::vector<std::string> violations;
};

struct SweepOptions {
    double slack = 1e-6; // relative to c0
    std::size_t threads = 1;
};

inline SweepRow sweep_row(const Baseline& base, double beta) {
    SweepRow row;
    row.beta = beta;
    try {
        const GroundState gs = base.coupled(beta);
        const GroundState free = base.coupled_free(beta);
        row.c_beta = gs.level;
        row.c0_beta = free.level;
        row.classification = classify(gs);
        row.q = gs.state.u.q;
        row.norm_u = std::sqrt(quadratic_form_u(gs.state.u, gs.state.params));
        row.norm_v = std::sqrt(quadratic_form_v(gs.state.v, gs.state.params.omega_tilde));
        row.beta_c = beta * gs.level;
        row.ok = true;
    } catch (const Error& e) {
        row.ok = false;
        row.error = std::string(e.kind()) + ": " + e.what();
    }
    return row;
}

/// c_beta and c0_beta over ascending betas with the ordering checks
/// c_beta <= c0_beta, monotone non-increase and beta c_beta < c~_inf.
inline Sweep sweep_beta(const Params& params, const std::vector<double>& betas, const SolveOptions& opt = {},
                        const SweepOptions& sopt = {}) {
    if (!std::is_sorted(betas.begin(), betas.end())) throw UsageError("sweep_beta: betas must be ascending");
    for (double b : betas)
        if (!(b >= 0.0)) throw DomainError("sweep_beta: beta must be >= 0");
    const Baseline base(params, opt);
    Sweep sw;
    sw.c0 = base.c0();
    sw.c00 = base.c00();
    sw.d_omega = base.d_omega();
    sw.d0_omega_tilde = base.d0_omega_tilde();
    sw.c_inf = base.limit().level;
    sw.rows = run_ordered<SweepRow>(
        betas.size(), [&](std::size_t i) { return sweep_row(base, betas[i]); }, sopt.threads);

    const double slack = sopt.slack * sw.c0;
    const SweepRow* prev = nullptr;
    for (const auto& row : sw.rows) {
        if (!row.ok) {
            sw.violations.push_back("beta=" + std::to_string(row.beta) + " failed: " + row.error);
            continue;
        }
        if (row.c_beta > row.c0_beta + slack)
            sw.violations.push_back("beta=" + std::to_string(row.beta) + ": c_beta > c0_beta");
        if (prev && row.c_beta > prev->c_beta + slack)
            sw.violations.push_back("beta=" + std::to_string(row.beta) + ": c_beta increased");
        if (row.beta > 0.0 && !(row.beta_c < sw.c_inf))
            sw.violations.push_back("beta=" + std::to_string(row.beta) + ": beta c_beta >= c_inf");
        if (row.classification.vectorness == Vectorness::vector && row.classification.regularity == Regularity::regular)
            sw.violations.push_back("beta=" + std::to_string(row.beta) + ": vector regular ground state");
        prev = &row;
    }
    return sw;
}

struct ThresholdOptions {
    double tol = 1e-2;     // final bracket width
    double margin = 1e-5;  // detection margin on (c0 - c_beta) / c0
};

struct Threshold {
    double value = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    std::size_t evaluations = 0;
};

namespace detail {

inline Threshold bisect_drop(const std::function<double(double)>& level, double reference, double beta_hi,
                             const ThresholdOptions& topt, const char* what) {
    if (!(beta_hi > 0.0)) throw BracketError(std::string(what) + ": upper bracket must be positive");
    const double margin = topt.margin;
    auto dropped = [&](double b) { return (reference - level(b)) / std::abs(reference) > margin; };
    Threshold t;
    t.lo = 0.0;
    t.hi = beta_hi;
    ++t.evaluations;
    if (!dropped(beta_hi))
        throw BracketError(std::string(what) + ": level at beta = " + std::to_string(beta_hi) +
                           " has not dropped below the beta = 0 level");
    while (t.hi - t.lo > topt.tol) {
        const double mid = 0.5 * (t.lo + t.hi);
        ++t.evaluations;
        if (dropped(mid)) t.hi = mid;
        else t.lo = mid;
    }
    t.value = 0.5 * (t.lo + t.hi);
    return t;
}

} // namespace detail

/// beta* = max{beta : c_beta = c_0}, by bisection on [0, beta_hi].
inline Threshold beta_star(const Baseline& base, double beta_hi, const ThresholdOptions& topt = {}) {
    return detail::bisect_drop([&](double b) { return base.coupled(b).level; }, base.c0(), beta_hi, topt, "beta_star");
}

/// beta0 = max{beta : c0_beta = c0_0}, by bisection on [0, beta_hi].
inline Threshold beta_zero(const Baseline& base, double beta_hi, const ThresholdOptions& topt = {}) {
    return detail::bisect_drop([&](double b) { return base.coupled_free(b).level; }, base.c00(), beta_hi, topt,
                               "beta_zero");
}

/// Smallest power-of-two multiple of `start` at which the level has dropped.
inline double find_upper_bracket(const std::function<double(double)>& level, double reference, double margin,
                                 double start = 1.0, double limit = 1e4) {
    for (double b = start; b <= limit; b *= 2.0)
        if ((reference - level(b)) / std::abs(reference) > margin) return b;
    throw BracketError("no beta up to " + std::to_string(limit) + " lowers the level");
}

inline Threshold beta_star(const Baseline& base, const ThresholdOptions& topt = {}) {
    const double hi = find_upper_bracket([&](double b) { return base.coupled(b).level; }, base.c0(), topt.margin);
    return beta_star(base, hi, topt);
}

inline Threshold beta_zero(const Baseline& base, const ThresholdOptions& topt = {}) {
    const double hi = find_upper_bracket([&](double b) { return base.coupled_free(b).level; }, base.c00(), topt.margin);
    return beta_zero(base, hi, topt);
}

/// Regime predicted by the classification theorems.
enum class Regime { scalar_v_regular, scalar_u_singular, either_scalar, vector_singular };

inline const char* to_string(Regime r) {
    switch (r) {
    case Regime::scalar_v_regular: return "scalar-v regular";
    case Regime::scalar_u_singular: return "scalar-u singular";
    case Regime::either_scalar: return "scalar-v regular | scalar-u singular";
    case Regime::vector_singular: return "vector singular";
    }
    return "?";
}

/// Sign convention: `levels_order` is sign(d(omega) - d0(omega_tilde)), 0 for a tie.
inline Regime predicted_regime(int levels_order, bool above_threshold) {
    if (above_threshold) return Regime::vector_singular;
    if (levels_order > 0) return Regime::scalar_v_regular;
    if (levels_order < 0) return Regime::scalar_u_singular;
    return Regime::either_scalar;
}

inline bool regime_matches(Regime r, const Classification& c) {
    const bool sv = c.vectorness == Vectorness::scalar_v && c.regularity == Regularity::regular;
    const bool su = c.vectorness == Vectorness::scalar_u && c.regularity == Regularity::singular;
    switch (r) {
    case Regime::scalar_v_regular: return sv;
    case Regime::scalar_u_singular: return su;
    case Regime::either_scalar: return sv || su;
    case Regime::vector_singular: return c.vectorness == Vectorness::vector && c.regularity == Regularity::singular;
    }
    return false;
}

struct RegimeCell {
    double beta = 0.0;
    bool above_threshold = false;
    Regime predicted = Regime::vector_singular;
    Classification observed;
    double level = 0.0;
    bool match = false;
    std::string error;
};

struct RegimeRow {
    double ratio = 0.0;        // omega_tilde / (d(omega) / d0(1))
    double omega_tilde = 0.0;
    double d_omega = 0.0;
    double d0_omega_tilde = 0.0;
    int levels_order = 0;
    double beta_star = 0.0;
    std::vector<RegimeCell> cells;
    std::string error;
};

struct RegimeTableOptions {
    std::vector<double> ratios{0.5, 1.0, 2.0};
    double beta_offset = 0.2;
    ThresholdOptions threshold{};
    double tie_tolerance = 1e-6; // relative gap below which d(omega) and d0(omega_tilde) tie
    std::size_t threads = 1;
};

/// Rows over omega_tilde = ratio d(omega)/d0(1); in each row the coupled
/// minimizer is classified at beta* - offset and beta* + offset.
inline std::vector<RegimeRow> regime_table(double alpha, double omega, const SolveOptions& opt = {},
                                           const RegimeTableOptions& ropt = {}) {
    const GroundState d = minimize_scalar_point(omega, alpha, opt);
    const GroundState d0 = minimize_scalar_regular(1.0, opt);
    const double unit = d.level / d0.level;
    auto build = [&](std::size_t i) {
        RegimeRow row;
        row.ratio = ropt.ratios[i];
        row.omega_tilde = row.ratio * unit;
        try {
            const Baseline base(Params{alpha, omega, row.omega_tilde, 0.0, Interaction::point}, opt);
            row.d_omega = base.d_omega();
            row.d0_omega_tilde = base.d0_omega_tilde();
            const double gap = (row.d_omega - row.d0_omega_tilde) / std::max(row.d_omega, row.d0_omega_tilde);
            row.levels_order = std::abs(gap) <= ropt.tie_tolerance ? 0 : (gap > 0 ? 1 : -1);
            row.beta_star = beta_star(base, ropt.threshold).value;
            for (bool above : {false, true}) {
                RegimeCell cell;
                cell.above_threshold = above;
                cell.beta = above ? row.beta_star + ropt.beta_offset : std::max(0.0, row.beta_star - ropt.beta_offset);
                cell.predicted = predicted_regime(row.levels_order, above);
                try {
                    const GroundState gs = base.coupled(cell.beta);
                    cell.observed = classify(gs);
                    cell.level = gs.level;
                    cell.match = regime_matches(cell.predicted, cell.observed);
                } catch (const Error& e) {
                    cell.error = std::string(e.kind()) + ": " + e.what();
                }
                row.cells.push_back(cell);
            }
        } catch (const Error& e) {
            row.error = std::string(e.kind()) + ": " + e.what();
        }
        return row;
    };
    return run_ordered<RegimeRow>(ropt.ratios.size(), build, ropt.threads);
}

struct AsymptoticRow {
    double beta = 0.0;
    double c_beta = 0.0;
    double beta_c = 0.0;
    double relative_gap = 0.0;    // |beta c_beta - c~_inf| / c~_inf
    double rescaled_charge = 0.0; // sqrt(beta) q
    double distance = 0.0;        // ||s sqrt(beta)(u, v) - (w0, z0)||_A / ||(w0, z0)||_A, best s
    Classification classification;
};

struct AsymptoticReport {
    double c_inf = 0.0;
    double limit_charge = 0.0;
    std::vector<AsymptoticRow> rows;
    bool gap_decreasing = false;
    bool beta_c_increasing = false;
    bool charge_increments_decreasing = false;
};

inline AsymptoticReport asymptotic_check(const Params& params, const std::vector<double>& betas,
                                         const SolveOptions& opt = {}, std::size_t threads = 1) {
    if (!std::is_sorted(betas.begin(), betas.end()) || betas.empty() || !(betas.front() > 0.0))
        throw UsageError("asymptotic_check: betas must be positive and increasing");
    const Baseline base(params, opt);
    const GroundState lim = base.limit();
    AsymptoticReport rep;
    rep.c_inf = lim.level;
    rep.limit_charge = lim.state.u.q;

    NehariProblem metric(base.grid(), base.params(), Objective::limit(), {});
    const auto xl = flatten(lim.state);
    auto inner = [&](const std::vector<double>& a, const std::vector<double>& b) {
        std::vector<double> s(a.size());
        for (std::size_t k = 0; k < a.size(); ++k) s[k] = a[k] + b[k];
        const double p = metric.a_norm_sq(s);
        for (std::size_t k = 0; k < a.size(); ++k) s[k] = a[k] - b[k];
        return 0.25 * (p - metric.a_norm_sq(s));
    };

    rep.rows = run_ordered<AsymptoticRow>(
        betas.size(),
        [&](std::size_t i) {
            AsymptoticRow row;
            row.beta = betas[i];
            const GroundState gs = base.coupled(row.beta);
            row.c_beta = gs.level;
            row.beta_c = row.beta * gs.level;
            row.relative_gap = std::abs(row.beta_c - rep.c_inf) / rep.c_inf;
            row.rescaled_charge = std::sqrt(row.beta) * gs.state.u.q;
            row.classification = classify(gs);
            auto x = flatten(gs.state);
            for (double& e : x) e *= std::sqrt(row.beta);
            const double s = inner(x, xl) / metric.a_norm_sq(x);
            for (std::size_t k = 0; k < x.size(); ++k) x[k] = s * x[k] - xl[k];
            row.distance = std::sqrt(metric.a_norm_sq(x) / metric.a_norm_sq(xl));
            return row;
        },
        threads);

    rep.gap_decreasing = rep.beta_c_increasing = rep.charge_increments_decreasing = true;
    for (std::size_t i = 1; i < rep.rows.size(); ++i) {
        if (!(rep.rows[i].relative_gap < rep.rows[i - 1].relative_gap)) rep.gap_decreasing = false;
        if (!(rep.rows[i].beta_c > rep.rows[i - 1].beta_c)) rep.beta_c_increasing = false;
        if (i >= 2) {
            const double d1 = std::abs(rep.rows[i - 1].rescaled_charge - rep.rows[i - 2].rescaled_charge);
            const double d2 = std::abs(rep.rows[i].rescaled_charge - rep.rows[i - 1].rescaled_charge);
            if (!(d2 < d1)) rep.charge_increments_decreasing = false;
        }
    }
    return rep;
}

} // namespace delta_nls
