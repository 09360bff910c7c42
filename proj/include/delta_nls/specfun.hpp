#pragma once

// Closed-form scalar functions of the point-interaction model: the modified
// Bessel function K0, the Green's kernel of -Laplacian + lambda on R^2, the
// log-shift theta(lambda) and the bound-state energy omega_alpha.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "delta_nls/errors.hpp"

namespace delta_nls {

/// Euler-Mascheroni constant to 20 significant digits.
inline constexpr double euler_gamma = 0.57721566490153286061;

inline constexpr double two_pi = 2.0 * std::numbers::pi;

namespace detail {

// K0 via the ascending series
//   K0(z) = -(log(z/2) + gamma) I0(z) + sum_k (z^2/4)^k / (k!)^2 * H_k,
// which converges fast and with mild cancellation for z <= 2.
inline double bessel_k0_series(double z) {
    const double y = 0.25 * z * z;
    double term = 1.0; // (z^2/4)^k / (k!)^2
    double harmonic = 0.0;
    double i0 = 1.0;
    double tail = 0.0;
    for (int k = 1; k < 60; ++k) {
        term *= y / (double(k) * double(k));
        harmonic += 1.0 / k;
        i0 += term;
        tail += term * harmonic;
        if (term * harmonic < 1e-18 * std::abs(tail)) break;
    }
    return -(std::log(0.5 * z) + euler_gamma) * i0 + tail;
}

// K0(z) = e^{-z} * int_0^inf exp(-z (cosh t - 1)) dt. The integrand is entire
// and even in t, so the trapezoid rule converges geometrically in 1/h. The
// step is tied to the Gaussian width 1/sqrt(z) of the peak at t = 0.
inline double bessel_k0_integral(double z) {
    const double h = std::min(0.1, 0.5 / std::sqrt(z));
    double sum = 0.5;
    for (int k = 1; k < 100000; ++k) {
        const double t = k * h;
        const double e = z * (std::cosh(t) - 1.0);
        if (e > 745.0) break;
        const double f = std::exp(-e);
        sum += f;
        if (f < 1e-18 * sum) break;
    }
    return std::exp(-z) * h * sum;
}

} // namespace detail

/// Modified Bessel function of the second kind, order zero.
///
/// Relative accuracy is about 1e-14 on [1e-8, 700]. Arguments above 700
/// underflow and return 0.
inline double bessel_k0(double z) {
    if (!(z > 0.0)) throw DomainError("bessel_k0: argument must be positive, got " + std::to_string(z));
    if (z > 700.0) return 0.0;
    if (z <= 2.0) return detail::bessel_k0_series(z);
    return detail::bessel_k0_integral(z);
}

/// theta(lambda) = (log(sqrt(lambda)/2) + gamma) / (2 pi).
inline double theta(double lambda) {
    if (!(lambda > 0.0)) throw DomainError("theta: lambda must be positive, got " + std::to_string(lambda));
    return (0.5 * std::log(lambda) - std::numbers::ln2 + euler_gamma) / two_pi;
}

/// Modulus of the unique negative eigenvalue of the point-interaction
/// Laplacian with strength alpha: 4 exp(-4 pi alpha - 2 gamma).
inline double omega_alpha(double alpha) {
    if (!std::isfinite(alpha)) throw DomainError("omega_alpha: alpha must be finite");
    return 4.0 * std::exp(-4.0 * std::numbers::pi * alpha - 2.0 * euler_gamma);
}

/// Green's function of -Laplacian + lambda on R^2 at radius r:
/// K0(sqrt(lambda) r) / (2 pi). Diverges like -log(r)/(2 pi) at the origin.
inline double green_value(double lambda, double r) {
    if (!(lambda > 0.0)) throw DomainError("green_value: lambda must be positive");
    if (!(r > 0.0)) throw DomainError("green_value: r must be positive, got " + std::to_string(r));
    return bessel_k0(std::sqrt(lambda) * r) / two_pi;
}

/// Squared L2 norm of the Green's function, 1 / (4 pi lambda).
inline double green_l2_squared(double lambda) {
    if (!(lambda > 0.0)) throw DomainError("green_l2_squared: lambda must be positive");
    return 1.0 / (4.0 * std::numbers::pi * lambda);
}

} // namespace delta_nls
