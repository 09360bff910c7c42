#pragma once

// JSON records and CSV tables for ground states, sweeps, thresholds, regime
// tables and asymptotics. CSV numbers carry 17 significant digits; JSON
// numbers use the shortest representation that reads back to the same double.

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "delta_nls/classification.hpp"
#include "delta_nls/errors.hpp"
#include "delta_nls/phase.hpp"
#include "delta_nls/solver.hpp"

namespace delta_nls::io {

using json = nlohmann::ordered_json;

inline std::string g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline json to_json(const Classification& c) {
    return json{{"vectorness", to_string(c.vectorness)}, {"regularity", to_string(c.regularity)},
                {"label", c.label()},                    {"u_fraction", c.u_fraction},
                {"v_fraction", c.v_fraction},            {"charge_fraction", c.charge_fraction},
                {"component_tol", c.tolerances.component}, {"charge_tol", c.tolerances.charge}};
}

inline json to_json(const GridSpec& g) { return json{{"n", g.n}, {"r_max", g.r_max}, {"grading", g.grading}}; }

inline json to_json(const EnergyReport& r) {
    return json{{"A", r.A}, {"B", r.B}, {"C", r.C}, {"I", r.I}, {"G", r.G}, {"J", r.J}, {"t0", r.t0}};
}

/// The ground-state record; classification uses the given tolerances.
inline json to_json(const GroundState& gs, const ClassificationTolerances& tol = {}) {
    const auto& s = gs.state;
    const auto& grid = *s.grid();
    json j;
    j["alpha"] = s.params.alpha;
    j["omega"] = s.params.omega;
    j["omega_tilde"] = s.params.omega_tilde;
    j["beta"] = s.params.beta;
    j["interaction"] = to_string(s.params.interaction);
    j["objective"] = {{"self_weight", gs.objective.self_weight}, {"coupling", gs.objective.coupling}};
    j["lambda"] = s.u.lambda;
    j["q"] = s.u.q;
    j["level"] = gs.level;
    j["grid"] = to_json(grid.spec());
    j["r"] = std::vector<double>(grid.nodes().begin(), grid.nodes().end());
    j["phi"] = std::vector<double>(s.u.phi.samples().begin(), s.u.phi.samples().end());
    j["v"] = std::vector<double>(s.v.samples().begin(), s.v.samples().end());
    j["residuals"] = {{"grad_norm", gs.residuals.grad_norm},
                      {"boundary_residual", gs.residuals.boundary_residual},
                      {"nehari_residual", gs.residuals.nehari_residual}};
    j["energy"] = to_json(gs.report);
    j["classification"] = gs.report.A > 0.0 ? to_json(classify_state(s, tol)) : json(nullptr);
    j["converged"] = gs.converged;
    j["iterations"] = gs.iterations;
    j["seed"] = gs.seed;
    j["clipping_active"] = gs.clipping_active;
    return j;
}

inline const char* class_code(const Classification& c) {
    if (c.vectorness == Vectorness::vector) return c.regularity == Regularity::singular ? "vector-singular" : "vector-regular";
    if (c.vectorness == Vectorness::scalar_u)
        return c.regularity == Regularity::singular ? "scalar-u-singular" : "scalar-u-regular";
    return c.regularity == Regularity::singular ? "scalar-v-singular" : "scalar-v-regular";
}

/// r, phi, u = phi + q G, v.
inline void write_profile_csv(std::ostream& os, const GroundState& gs) {
    const auto r = gs.state.grid()->nodes();
    const auto u = reconstruct_u(gs.state.u);
    os << "r,phi,u,v\n";
    for (std::size_t i = 0; i < r.size(); ++i)
        os << g17(r[i]) << ',' << g17(gs.state.u.phi[i]) << ',' << g17(u[i]) << ',' << g17(gs.state.v[i]) << '\n';
}

inline void write_sweep_csv(std::ostream& os, const Sweep& sw) {
    os << "beta,c_beta,c0_beta,q,norm_u,norm_v,class,beta_c\n";
    for (const auto& r : sw.rows) {
        if (!r.ok) {
            os << g17(r.beta) << ",nan,nan,nan,nan,nan,failed,nan\n";
            continue;
        }
        os << g17(r.beta) << ',' << g17(r.c_beta) << ',' << g17(r.c0_beta) << ',' << g17(r.q) << ','
           << g17(r.norm_u) << ',' << g17(r.norm_v) << ',' << class_code(r.classification) << ',' << g17(r.beta_c)
           << '\n';
    }
}

inline json to_json(const Sweep& sw) {
    json rows = json::array();
    for (const auto& r : sw.rows) {
        json row{{"beta", r.beta}, {"ok", r.ok}};
        if (r.ok) {
            row["c_beta"] = r.c_beta;
            row["c0_beta"] = r.c0_beta;
            row["q"] = r.q;
            row["norm_u"] = r.norm_u;
            row["norm_v"] = r.norm_v;
            row["class"] = class_code(r.classification);
            row["beta_c"] = r.beta_c;
        } else {
            row["error"] = r.error;
        }
        rows.push_back(row);
    }
    return json{{"c0", sw.c0},       {"c00", sw.c00},
                {"d_omega", sw.d_omega}, {"d0_omega_tilde", sw.d0_omega_tilde},
                {"c_inf", sw.c_inf}, {"rows", rows},
                {"violations", sw.violations}};
}

inline json to_json(const Threshold& t) {
    return json{{"value", t.value}, {"lo", t.lo}, {"hi", t.hi}, {"evaluations", t.evaluations}};
}

inline void write_regimes_csv(std::ostream& os, const std::vector<RegimeRow>& table) {
    os << "ratio,omega_tilde,d_omega,d0_omega_tilde,beta_star,"
          "below_beta,below_observed,below_predicted,below_match,"
          "above_beta,above_observed,above_predicted,above_match\n";
    for (const auto& row : table) {
        os << g17(row.ratio) << ',' << g17(row.omega_tilde) << ',' << g17(row.d_omega) << ','
           << g17(row.d0_omega_tilde) << ',' << g17(row.beta_star);
        for (std::size_t k = 0; k < 2; ++k) {
            if (k < row.cells.size() && row.cells[k].error.empty()) {
                const auto& c = row.cells[k];
                os << ',' << g17(c.beta) << ',' << c.observed.label() << ',' << to_string(c.predicted) << ','
                   << (c.match ? "yes" : "no");
            } else {
                os << ",nan,failed,,no";
            }
        }
        os << '\n';
    }
}

inline json to_json(const std::vector<RegimeRow>& table) {
    json rows = json::array();
    for (const auto& row : table) {
        json cells = json::array();
        for (const auto& c : row.cells) {
            json cell{{"beta", c.beta}, {"above_threshold", c.above_threshold}, {"predicted", to_string(c.predicted)}};
            if (c.error.empty()) {
                cell["observed"] = c.observed.label();
                cell["level"] = c.level;
                cell["match"] = c.match;
            } else {
                cell["error"] = c.error;
            }
            cells.push_back(cell);
        }
        json r{{"ratio", row.ratio},           {"omega_tilde", row.omega_tilde},
               {"d_omega", row.d_omega},       {"d0_omega_tilde", row.d0_omega_tilde},
               {"levels_order", row.levels_order}, {"beta_star", row.beta_star},
               {"cells", cells}};
        if (!row.error.empty()) r["error"] = row.error;
        rows.push_back(r);
    }
    return rows;
}

inline void write_asymptotics_csv(std::ostream& os, const AsymptoticReport& rep) {
    os << "beta,c_beta,beta_c,relative_gap,rescaled_charge,distance,class\n";
    for (const auto& r : rep.rows)
        os << g17(r.beta) << ',' << g17(r.c_beta) << ',' << g17(r.beta_c) << ',' << g17(r.relative_gap) << ','
           << g17(r.rescaled_charge) << ',' << g17(r.distance) << ',' << class_code(r.classification) << '\n';
}

inline json to_json(const AsymptoticReport& rep) {
    json rows = json::array();
    for (const auto& r : rep.rows)
        rows.push_back(json{{"beta", r.beta},
                            {"c_beta", r.c_beta},
                            {"beta_c", r.beta_c},
                            {"relative_gap", r.relative_gap},
                            {"rescaled_charge", r.rescaled_charge},
                            {"distance", r.distance},
                            {"class", class_code(r.classification)}});
    return json{{"c_inf", rep.c_inf},
                {"limit_charge", rep.limit_charge},
                {"gap_decreasing", rep.gap_decreasing},
                {"beta_c_increasing", rep.beta_c_increasing},
                {"charge_increments_decreasing", rep.charge_increments_decreasing},
                {"rows", rows}};
}

inline json error_json(const std::string& kind, const std::string& message, const std::string& key = {}) {
    json e{{"kind", kind}, {"message", message}};
    if (!key.empty()) e["key"] = key;
    return json{{"error", e}};
}

} // namespace delta_nls::io
