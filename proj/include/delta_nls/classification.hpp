#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "delta_nls/model.hpp"

namespace delta_nls {

enum class Vectorness { scalar_u, scalar_v, vector };
enum class Regularity { regular, singular };

inline const char* to_string(Vectorness v) {
    switch (v) {
    case Vectorness::scalar_u: return "scalar-u";
    case Vectorness::scalar_v: return "scalar-v";
    case Vectorness::vector: return "vector";
    }
    return "?";
}

inline const char* to_string(Regularity r) { return r == Regularity::regular ? "regular" : "singular"; }

struct ClassificationTolerances {
    double component = 1e-3;
    double charge = 1e-3;
};

struct Classification {
    Vectorness vectorness = Vectorness::vector;
    Regularity regularity = Regularity::singular;
    ClassificationTolerances tolerances;
    // component energy norms and charge, each relative to ||(u, v)||
    double u_fraction = 0.0;
    double v_fraction = 0.0;
    double charge_fraction = 0.0;

    bool is_scalar() const { return vectorness != Vectorness::vector; }
    std::string label() const { return std::string(to_string(vectorness)) + " " + to_string(regularity); }
};

/// Thresholded scalar/vector and regular/singular classification of a state.
inline Classification classify_state(const CoupledState& s, const ClassificationTolerances& tol = {}) {
    const double au = quadratic_form_u(s.u, s.params);
    const double av = quadratic_form_v(s.v, s.params.omega_tilde);
    const double total = std::sqrt(au + av);
    Classification c;
    c.tolerances = tol;
    if (!(total > 0.0)) throw DomainError("classify: zero state");
    c.u_fraction = std::sqrt(std::max(au, 0.0)) / total;
    c.v_fraction = std::sqrt(std::max(av, 0.0)) / total;
    c.charge_fraction = std::abs(s.u.q) / total;
    if (c.v_fraction <= tol.component)
        c.vectorness = Vectorness::scalar_u;
    else if (c.u_fraction <= tol.component)
        c.vectorness = Vectorness::scalar_v;
    else
        c.vectorness = Vectorness::vector;
    c.regularity = c.charge_fraction <= tol.charge ? Regularity::regular : Regularity::singular;
    return c;
}

} // namespace delta_nls
