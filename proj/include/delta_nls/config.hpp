#pragma once

// Run configuration: a flat "key = value" text with dotted keys.
//
//   command = sweep
//   params.alpha = 0
//   params.omega = 2
//   sweep.betas = 0, 0.5, 1, 2, 4
//
// Lines starting with '#' and blank lines are ignored. Every key has a
// default; unknown or repeated keys are rejected. emit_config writes every
// key in a fixed order so that parse_config(emit_config(c)) == c.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "delta_nls/classification.hpp"
#include "delta_nls/errors.hpp"
#include "delta_nls/model.hpp"
#include "delta_nls/phase.hpp"
#include "delta_nls/solver.hpp"

namespace delta_nls {

enum class Command { solve, scalar, sweep, thresholds, regimes, limit, asymptotics, selftest };

inline constexpr std::pair<Command, const char*> command_names[] = {
    {Command::solve, "solve"},         {Command::scalar, "scalar"},   {Command::sweep, "sweep"},
    {Command::thresholds, "thresholds"}, {Command::regimes, "regimes"}, {Command::limit, "limit"},
    {Command::asymptotics, "asymptotics"}, {Command::selftest, "selftest"},
};

inline const char* to_string(Command c) {
    for (const auto& [k, name] : command_names)
        if (k == c) return name;
    return "?";
}

inline Command parse_command(std::string_view s) {
    for (const auto& [k, name] : command_names)
        if (s == name) return k;
    throw ConfigError("command", "unknown command '" + std::string(s) + "'");
}

struct OutputFormats {
    bool csv = true;
    bool json = true;
    bool svg = false;
    bool operator==(const OutputFormats&) const = default;
};

struct RunConfig {
    Command command = Command::solve;
    Params params{};
    SolveOptions solver{};
    ClassificationTolerances classify{};
    std::vector<double> sweep_betas{0.0, 0.5, 1.0, 2.0, 4.0};
    std::size_t threads = 1;
    ThresholdOptions threshold{};
    double beta_hi = 0.0; // 0: bracket found by doubling
    RegimeTableOptions regimes{};
    std::vector<double> asymptotic_betas{25.0, 50.0, 100.0};
    std::string out_dir = "out";
    OutputFormats formats{};

    bool operator==(const RunConfig& o) const {
        auto same_solver = [](const SolveOptions& a, const SolveOptions& b) {
            return a.max_iters == b.max_iters && a.grad_tol == b.grad_tol && a.initial_step == b.initial_step &&
                   a.shrink == b.shrink && a.armijo == b.armijo && a.restarts == b.restarts && a.seeds == b.seeds &&
                   a.grid.n == b.grid.n && a.grid.r_max == b.grid.r_max && a.grid.grading == b.grid.grading;
        };
        return command == o.command && params.alpha == o.params.alpha && params.omega == o.params.omega &&
               params.omega_tilde == o.params.omega_tilde && params.beta == o.params.beta &&
               params.interaction == o.params.interaction && same_solver(solver, o.solver) &&
               classify.component == o.classify.component && classify.charge == o.classify.charge &&
               sweep_betas == o.sweep_betas && threads == o.threads && threshold.tol == o.threshold.tol &&
               threshold.margin == o.threshold.margin && beta_hi == o.beta_hi && regimes.ratios == o.regimes.ratios &&
               regimes.beta_offset == o.regimes.beta_offset && regimes.tie_tolerance == o.regimes.tie_tolerance &&
               asymptotic_betas == o.asymptotic_betas && out_dir == o.out_dir && formats == o.formats;
    }
};

namespace detail {

inline std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

inline std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline double parse_double(const std::string& key, const std::string& s) {
    double x = 0.0;
    const auto* end = s.data() + s.size();
    const auto [p, ec] = std::from_chars(s.data(), end, x);
    if (ec != std::errc{} || p != end || s.empty()) throw ConfigError(key, "expected a number, got '" + s + "'");
    if (!std::isfinite(x)) throw ConfigError(key, "must be finite");
    return x;
}

inline std::size_t parse_count(const std::string& key, const std::string& s) {
    std::size_t x = 0;
    const auto* end = s.data() + s.size();
    const auto [p, ec] = std::from_chars(s.data(), end, x);
    if (ec != std::errc{} || p != end || s.empty())
        throw ConfigError(key, "expected a non-negative integer, got '" + s + "'");
    return x;
}

inline std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, ',')) {
        auto t = trim(item);
        if (!t.empty()) out.push_back(t);
    }
    return out;
}

inline std::vector<double> parse_list(const std::string& key, const std::string& s) {
    std::vector<double> out;
    for (const auto& item : split_list(s)) out.push_back(parse_double(key, item));
    if (out.empty()) throw ConfigError(key, "expected a non-empty comma-separated list");
    return out;
}

inline std::string format_list(const std::vector<double>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + format_double(xs[i]);
    return s;
}

inline SeedPolicy parse_seeds(const std::string& key, const std::string& s) {
    for (SeedPolicy p : {SeedPolicy::all, SeedPolicy::gaussian, SeedPolicy::scalar_u, SeedPolicy::scalar_v})
        if (s == to_string(p)) return p;
    throw ConfigError(key, "expected one of all, gaussian, scalar_u, scalar_v");
}

inline OutputFormats parse_formats(const std::string& key, const std::string& s) {
    OutputFormats f{false, false, false};
    for (const auto& item : split_list(s)) {
        if (item == "csv") f.csv = true;
        else if (item == "json") f.json = true;
        else if (item == "svg") f.svg = true;
        else throw ConfigError(key, "unknown format '" + item + "' (expected csv, json, svg)");
    }
    return f;
}

inline std::string format_formats(const OutputFormats& f) {
    std::vector<std::string> v;
    if (f.csv) v.emplace_back("csv");
    if (f.json) v.emplace_back("json");
    if (f.svg) v.emplace_back("svg");
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
    return s;
}

struct Setting {
    const char* key;
    std::function<void(RunConfig&, const std::string&)> set;
    std::function<std::string(const RunConfig&)> get;
};

inline const std::vector<Setting>& schema() {
    using C = RunConfig;
    using S = const std::string&;
    static const std::vector<Setting> fields = {
        {"command", [](C& c, S v) { c.command = parse_command(v); }, [](const C& c) { return std::string(to_string(c.command)); }},
        {"params.alpha", [](C& c, S v) { c.params.alpha = parse_double("params.alpha", v); },
         [](const C& c) { return format_double(c.params.alpha); }},
        {"params.omega", [](C& c, S v) { c.params.omega = parse_double("params.omega", v); },
         [](const C& c) { return format_double(c.params.omega); }},
        {"params.omega_tilde", [](C& c, S v) { c.params.omega_tilde = parse_double("params.omega_tilde", v); },
         [](const C& c) { return format_double(c.params.omega_tilde); }},
        {"params.beta", [](C& c, S v) { c.params.beta = parse_double("params.beta", v); },
         [](const C& c) { return format_double(c.params.beta); }},
        {"params.interaction",
         [](C& c, S v) {
             if (v == "point") c.params.interaction = Interaction::point;
             else if (v == "none") c.params.interaction = Interaction::none;
             else throw ConfigError("params.interaction", "expected point or none");
         },
         [](const C& c) { return std::string(to_string(c.params.interaction)); }},
        {"grid.n", [](C& c, S v) { c.solver.grid.n = parse_count("grid.n", v); },
         [](const C& c) { return std::to_string(c.solver.grid.n); }},
        {"grid.r_max", [](C& c, S v) { c.solver.grid.r_max = parse_double("grid.r_max", v); },
         [](const C& c) { return format_double(c.solver.grid.r_max); }},
        {"grid.grading", [](C& c, S v) { c.solver.grid.grading = parse_double("grid.grading", v); },
         [](const C& c) { return format_double(c.solver.grid.grading); }},
        {"solver.max_iters", [](C& c, S v) { c.solver.max_iters = parse_count("solver.max_iters", v); },
         [](const C& c) { return std::to_string(c.solver.max_iters); }},
        {"solver.grad_tol", [](C& c, S v) { c.solver.grad_tol = parse_double("solver.grad_tol", v); },
         [](const C& c) { return format_double(c.solver.grad_tol); }},
        {"solver.initial_step", [](C& c, S v) { c.solver.initial_step = parse_double("solver.initial_step", v); },
         [](const C& c) { return format_double(c.solver.initial_step); }},
        {"solver.shrink", [](C& c, S v) { c.solver.shrink = parse_double("solver.shrink", v); },
         [](const C& c) { return format_double(c.solver.shrink); }},
        {"solver.armijo", [](C& c, S v) { c.solver.armijo = parse_double("solver.armijo", v); },
         [](const C& c) { return format_double(c.solver.armijo); }},
        {"solver.restarts", [](C& c, S v) { c.solver.restarts = parse_count("solver.restarts", v); },
         [](const C& c) { return std::to_string(c.solver.restarts); }},
        {"solver.seeds", [](C& c, S v) { c.solver.seeds = parse_seeds("solver.seeds", v); },
         [](const C& c) { return std::string(to_string(c.solver.seeds)); }},
        {"classify.component_tol", [](C& c, S v) { c.classify.component = parse_double("classify.component_tol", v); },
         [](const C& c) { return format_double(c.classify.component); }},
        {"classify.charge_tol", [](C& c, S v) { c.classify.charge = parse_double("classify.charge_tol", v); },
         [](const C& c) { return format_double(c.classify.charge); }},
        {"sweep.betas", [](C& c, S v) { c.sweep_betas = parse_list("sweep.betas", v); },
         [](const C& c) { return format_list(c.sweep_betas); }},
        {"run.threads", [](C& c, S v) { c.threads = parse_count("run.threads", v); },
         [](const C& c) { return std::to_string(c.threads); }},
        {"threshold.tol", [](C& c, S v) { c.threshold.tol = parse_double("threshold.tol", v); },
         [](const C& c) { return format_double(c.threshold.tol); }},
        {"threshold.margin", [](C& c, S v) { c.threshold.margin = parse_double("threshold.margin", v); },
         [](const C& c) { return format_double(c.threshold.margin); }},
        {"threshold.beta_hi", [](C& c, S v) { c.beta_hi = parse_double("threshold.beta_hi", v); },
         [](const C& c) { return format_double(c.beta_hi); }},
        {"regimes.ratios", [](C& c, S v) { c.regimes.ratios = parse_list("regimes.ratios", v); },
         [](const C& c) { return format_list(c.regimes.ratios); }},
        {"regimes.beta_offset", [](C& c, S v) { c.regimes.beta_offset = parse_double("regimes.beta_offset", v); },
         [](const C& c) { return format_double(c.regimes.beta_offset); }},
        {"regimes.tie_tolerance", [](C& c, S v) { c.regimes.tie_tolerance = parse_double("regimes.tie_tolerance", v); },
         [](const C& c) { return format_double(c.regimes.tie_tolerance); }},
        {"asymptotics.betas", [](C& c, S v) { c.asymptotic_betas = parse_list("asymptotics.betas", v); },
         [](const C& c) { return format_list(c.asymptotic_betas); }},
        {"output.directory", [](C& c, S v) {
             if (v.empty()) throw ConfigError("output.directory", "must not be empty");
             c.out_dir = v;
         },
         [](const C& c) { return c.out_dir; }},
        {"output.formats", [](C& c, S v) { c.formats = parse_formats("output.formats", v); },
         [](const C& c) { return format_formats(c.formats); }},
    };
    return fields;
}

inline const Setting* find_setting(std::string_view key) {
    for (const auto& f : schema())
        if (key == f.key) return &f;
    return nullptr;
}

} // namespace detail

/// Constraint checks; every failure names its key.
inline void validate(const RunConfig& c) {
    c.params.validate();
    c.solver.validate();
    if (!(c.solver.grid.r_max >= 0.0)) throw ConfigError("grid.r_max", "must be >= 0 (0 selects the default)");
    if (!(c.classify.component > 0.0 && c.classify.component < 1.0))
        throw ConfigError("classify.component_tol", "must lie in (0, 1)");
    if (!(c.classify.charge > 0.0 && c.classify.charge < 1.0))
        throw ConfigError("classify.charge_tol", "must lie in (0, 1)");
    double prev = -1.0;
    for (double b : c.sweep_betas) {
        if (!(b >= 0.0)) throw ConfigError("sweep.betas", "entries must be >= 0");
        if (!(b > prev)) throw ConfigError("sweep.betas", "entries must be strictly increasing");
        prev = b;
    }
    if (!(c.threshold.tol > 0.0)) throw ConfigError("threshold.tol", "must be positive");
    if (!(c.threshold.margin > 0.0)) throw ConfigError("threshold.margin", "must be positive");
    if (!(c.beta_hi >= 0.0)) throw ConfigError("threshold.beta_hi", "must be >= 0 (0 searches for a bracket)");
    for (double r : c.regimes.ratios)
        if (!(r > 0.0)) throw ConfigError("regimes.ratios", "entries must be positive");
    if (!(c.regimes.beta_offset > 0.0)) throw ConfigError("regimes.beta_offset", "must be positive");
    if (!(c.regimes.tie_tolerance >= 0.0)) throw ConfigError("regimes.tie_tolerance", "must be >= 0");
    prev = 0.0;
    for (double b : c.asymptotic_betas) {
        if (!(b > prev)) throw ConfigError("asymptotics.betas", "entries must be positive and strictly increasing");
        prev = b;
    }
    if (c.threads == 0) throw ConfigError("run.threads", "must be at least 1");
    if (!c.formats.csv && !c.formats.json && !c.formats.svg)
        throw ConfigError("output.formats", "select at least one of csv, json, svg");
}

/// Applies one "key=value" assignment.
inline void apply_setting(RunConfig& c, std::string_view assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos) throw ConfigError(detail::trim(assignment), "expected key=value");
    const auto key = detail::trim(assignment.substr(0, eq));
    const auto value = detail::trim(assignment.substr(eq + 1));
    const auto* field = detail::find_setting(key);
    if (!field) throw ConfigError(key, "unknown key");
    field->set(c, value);
}

/// Parses the text, applies `overrides` (key=value) on top, then validates.
inline RunConfig parse_config(std::string_view text, const std::vector<std::string>& overrides = {}) {
    RunConfig c;
    std::set<std::string> seen;
    std::istringstream is{std::string(text)};
    std::string line;
    std::size_t number = 0;
    while (std::getline(is, line)) {
        ++number;
        const auto t = detail::trim(line);
        if (t.empty() || t.front() == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError(t, "line " + std::to_string(number) + ": expected key = value");
        const auto key = detail::trim(std::string_view(t).substr(0, eq));
        if (!seen.insert(key).second) throw ConfigError(key, "repeated key");
        apply_setting(c, t);
    }
    for (const auto& o : overrides) apply_setting(c, o);
    validate(c);
    return c;
}

inline std::string emit_config(const RunConfig& c) {
    std::string s;
    for (const auto& f : detail::schema()) s += std::string(f.key) + " = " + f.get(c) + "\n";
    return s;
}

} // namespace delta_nls
