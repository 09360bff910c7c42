#pragma once

// Graded radial discretization of R^2 for radially symmetric fields.
//
// Nodes r_i = r_max (i/n)^p, i = 1..n. Quadrature weights integrate against
// the planar measure 2 pi r dr. Each panel [r_i, r_{i+1}] is integrated
// exactly against the quadratic interpolant of f on a neighbouring 3-node
// stencil; interior panels average the left and right stencils. The first
// panel [0, r_1] holds f constant at f(r_1), which keeps log^k singularities
// at the origin harmless because the Jacobian r vanishes there.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <memory>
#include <numbers>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "delta_nls/errors.hpp"

namespace delta_nls {

struct GridSpec {
    std::size_t n = 4096;
    double r_max = 40.0;
    double grading = 2.0;

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

namespace detail {

// Integral over [a, b] of 2 pi r L_k(r) for the quadratic Lagrange basis on
// nodes x[0..2].
inline std::array<double, 3> quadratic_panel_weights(const std::array<double, 3>& x, double a, double b) {
    const double c = x[1];
    const double lo = a - c;
    const double hi = b - c;
    // moments of t^m on [lo, hi], m = 0..3
    std::array<double, 4> mom{};
    for (int m = 0; m < 4; ++m) mom[m] = (std::pow(hi, m + 1) - std::pow(lo, m + 1)) / (m + 1);
    std::array<double, 3> w{};
    for (int k = 0; k < 3; ++k) {
        const double tk = x[k] - c;
        double denom = 1.0;
        std::array<double, 2> roots{};
        int j = 0;
        for (int m = 0; m < 3; ++m) {
            if (m == k) continue;
            const double tm = x[m] - c;
            denom *= tk - tm;
            roots[j++] = tm;
        }
        // L_k(t) = (t - t0)(t - t1)/denom = (t^2 - (t0+t1) t + t0 t1)/denom
        const double c2 = 1.0 / denom;
        const double c1 = -(roots[0] + roots[1]) / denom;
        const double c0 = roots[0] * roots[1] / denom;
        // (c + t)(c2 t^2 + c1 t + c0)
        const double integral = c * (c2 * mom[2] + c1 * mom[1] + c0 * mom[0]) + (c2 * mom[3] + c1 * mom[2] + c0 * mom[1]);
        w[k] = 2.0 * std::numbers::pi * integral;
    }
    return w;
}

} // namespace detail

/// Immutable graded radial grid with quadrature weights and the
/// finite-difference stiffness of the Dirichlet energy.
class Grid {
public:
    static std::shared_ptr<const Grid> make(const GridSpec& spec) {
        return std::shared_ptr<const Grid>(new Grid(spec));
    }
    static std::shared_ptr<const Grid> make(double r_max, std::size_t n, double grading) {
        return make(GridSpec{n, r_max, grading});
    }

    std::size_t size() const noexcept { return nodes_.size(); }
    double r_max() const noexcept { return spec_.r_max; }
    double grading() const noexcept { return spec_.grading; }
    const GridSpec& spec() const noexcept { return spec_; }
    std::span<const double> nodes() const noexcept { return nodes_; }
    std::span<const double> weights() const noexcept { return weights_; }

    /// Coupling c_i of the Dirichlet energy sum_i c_i (f_i - f_{i-1})^2,
    /// i = 1..n-1; entry 0 is zero (flat first panel).
    std::span<const double> stiffness() const noexcept { return stiffness_; }

private:
    explicit Grid(const GridSpec& spec) : spec_(spec) {
        if (!(spec.r_max > 0.0) || !std::isfinite(spec.r_max))
            throw ConfigError("grid.r_max", "must be positive and finite");
        if (spec.n < 16) throw ConfigError("grid.n", "must be at least 16");
        if (!(spec.grading >= 1.0) || !std::isfinite(spec.grading))
            throw ConfigError("grid.grading", "must be >= 1");

        const std::size_t n = spec.n;
        nodes_.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            nodes_[i] = spec.r_max * std::pow(double(i + 1) / double(n), spec.grading);
        nodes_.back() = spec.r_max;

        weights_.assign(n, 0.0);
        weights_[0] += std::numbers::pi * nodes_[0] * nodes_[0];
        // Quadratic stencils are used only where neighbouring panel widths stay
        // within a factor 1.25; the innermost panels of steep gradings fall back to
        // the linear product rule to keep every weight positive.
        auto mild = [&](std::size_t k) {
            const double h0 = nodes_[k + 1] - nodes_[k];
            const double h1 = nodes_[k + 2] - nodes_[k + 1];
            return h1 <= 1.25 * h0 && h0 <= 1.25 * h1;
        };
        for (std::size_t j = 0; j + 1 < n; ++j) {
            const double a = nodes_[j];
            const double b = nodes_[j + 1];
            const bool has_left = j >= 1 && mild(j - 1);
            const bool has_right = j + 2 < n && mild(j);
            if (!has_left && !has_right) {
                const double m1 = (b * b - a * a) / 2.0;
                const double m2 = (b * b * b - a * a * a) / 3.0;
                const double scale = 2.0 * std::numbers::pi / (b - a);
                weights_[j] += scale * (b * m1 - m2);
                weights_[j + 1] += scale * (m2 - a * m1);
                continue;
            }
            const double share = (has_left && has_right) ? 0.5 : 1.0;
            if (has_left) {
                const auto w = detail::quadratic_panel_weights({nodes_[j - 1], nodes_[j], nodes_[j + 1]}, a, b);
                for (int k = 0; k < 3; ++k) weights_[j - 1 + k] += share * w[k];
            }
            if (has_right) {
                const auto w = detail::quadratic_panel_weights({nodes_[j], nodes_[j + 1], nodes_[j + 2]}, a, b);
                for (int k = 0; k < 3; ++k) weights_[j + k] += share * w[k];
            }
        }
        for (double w : weights_)
            if (!(w > 0.0)) throw ConfigError("grid", "grading produces a non-positive quadrature weight");

        stiffness_.assign(n, 0.0);
        for (std::size_t i = 1; i < n; ++i)
            stiffness_[i] = std::numbers::pi * (nodes_[i] + nodes_[i - 1]) / (nodes_[i] - nodes_[i - 1]);
    }

    GridSpec spec_;
    std::vector<double> nodes_;
    std::vector<double> weights_;
    std::vector<double> stiffness_;
};

using GridPtr = std::shared_ptr<const Grid>;

/// Sampled radial real function on a grid.
class Field {
public:
    Field() = default;
    explicit Field(GridPtr grid) : grid_(std::move(grid)), samples_(grid_ ? grid_->size() : 0, 0.0) {}
    Field(GridPtr grid, std::vector<double> samples) : grid_(std::move(grid)), samples_(std::move(samples)) {
        if (!grid_) throw UsageError("Field: null grid");
        if (samples_.size() != grid_->size()) throw UsageError("Field: sample count does not match grid size");
    }

    /// Samples f(r_i) of a callable on the grid nodes.
    template <class F>
    static Field sample(GridPtr grid, F&& f) {
        std::vector<double> s(grid->size());
        const auto r = grid->nodes();
        for (std::size_t i = 0; i < s.size(); ++i) s[i] = f(r[i]);
        return Field(std::move(grid), std::move(s));
    }

    const GridPtr& grid() const noexcept { return grid_; }
    std::size_t size() const noexcept { return samples_.size(); }
    std::span<const double> samples() const noexcept { return samples_; }
    std::span<double> samples() noexcept { return samples_; }
    double operator[](std::size_t i) const { return samples_[i]; }
    double& operator[](std::size_t i) { return samples_[i]; }

    Field& operator*=(double s) {
        for (double& x : samples_) x *= s;
        return *this;
    }
    friend Field operator*(double s, Field f) { return f *= s; }

    double max_abs() const noexcept {
        double m = 0.0;
        for (double x : samples_) m = std::max(m, std::abs(x));
        return m;
    }

private:
    GridPtr grid_;
    std::vector<double> samples_;
};

inline void require_same_grid(const Field& a, const Field& b) {
    if (a.grid() != b.grid()) throw UsageError("fields live on different grids");
}

/// Pointwise product.
inline Field product(const Field& a, const Field& b) {
    require_same_grid(a, b);
    Field out(a.grid());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
    return out;
}

/// sum_i w_i f(r_i), approximating 2 pi int_0^{r_max} f(r) r dr.
inline double integrate(const Grid& grid, std::span<const double> f) {
    if (f.size() != grid.size()) throw UsageError("integrate: sample count does not match grid size");
    const auto w = grid.weights();
    double s = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) s += w[i] * f[i];
    return s;
}

inline double integrate(const Field& f) {
    if (!f.grid()) throw UsageError("integrate: field without grid");
    return integrate(*f.grid(), f.samples());
}

/// Discrete ||grad f||^2 = 2 pi int (f')^2 r dr from first differences.
inline double dirichlet_energy(const Grid& grid, std::span<const double> f) {
    if (f.size() != grid.size()) throw UsageError("dirichlet_energy: sample count does not match grid size");
    const auto c = grid.stiffness();
    double s = 0.0;
    for (std::size_t i = 1; i < f.size(); ++i) {
        const double d = f[i] - f[i - 1];
        s += c[i] * d * d;
    }
    return s;
}

inline double dirichlet_energy(const Field& f) {
    if (!f.grid()) throw UsageError("dirichlet_energy: field without grid");
    return dirichlet_energy(*f.grid(), f.samples());
}

/// Quadratic extrapolation to r = 0 from the three innermost nodes.
inline double value_at_origin(const Grid& grid, std::span<const double> f) {
    if (f.size() != grid.size()) throw UsageError("value_at_origin: sample count does not match grid size");
    const auto r = grid.nodes();
    const double r0 = r[0], r1 = r[1], r2 = r[2];
    const double l0 = (r1 * r2) / ((r0 - r1) * (r0 - r2));
    const double l1 = (r0 * r2) / ((r1 - r0) * (r1 - r2));
    const double l2 = (r0 * r1) / ((r2 - r0) * (r2 - r1));
    return l0 * f[0] + l1 * f[1] + l2 * f[2];
}

inline double value_at_origin(const Field& f) {
    if (!f.grid()) throw UsageError("value_at_origin: field without grid");
    return value_at_origin(*f.grid(), f.samples());
}

/// |f(r_max)| / max|f|; above 1e-10 the field is not resolved by the box.
inline double tail_ratio(const Field& f) {
    const double m = f.max_abs();
    return m > 0.0 ? std::abs(f.samples().back()) / m : 0.0;
}

inline bool tail_resolved(const Field& f, double tolerance = 1e-10) { return tail_ratio(f) <= tolerance; }

/// Writes "r,value" CSV rows with 17 significant digits.
inline void write_csv(std::ostream& os, const Field& f, const std::string& value_name = "value") {
    os << "r," << value_name << '\n';
    const auto r = f.grid()->nodes();
    char buf[64];
    for (std::size_t i = 0; i < f.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", r[i], f[i]);
        os << buf;
    }
}

} // namespace delta_nls
