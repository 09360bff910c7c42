#pragma once

// Run orchestration for the command-line front end. Every command writes its
// artifacts under the output directory and prints a JSON summary on `out`.
// Exit status: 0 success, 1 invalid input or failed check, 2 solver
// non-convergence (the best iterate is dumped), 3 file I/O failure.

#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "delta_nls/config.hpp"
#include "delta_nls/io.hpp"
#include "delta_nls/phase.hpp"
#include "delta_nls/selftest.hpp"
#include "delta_nls/solver.hpp"
#include "delta_nls/svg.hpp"

namespace delta_nls {

enum ExitCode : int { exit_ok = 0, exit_failure = 1, exit_nonconvergence = 2, exit_io = 3 };

namespace detail {

class OutputDir {
public:
    explicit OutputDir(std::filesystem::path dir) : dir_(std::move(dir)) {
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        if (ec || !std::filesystem::is_directory(dir_))
            throw IoError("cannot create output directory " + dir_.string() + ": " + ec.message());
    }

    void write(const std::string& name, const std::function<void(std::ostream&)>& body) {
        const auto path = dir_ / name;
        std::ofstream f(path, std::ios::binary | std::ios::trunc);
        if (!f) throw IoError("cannot open " + path.string() + " for writing");
        body(f);
        f.flush();
        if (!f) throw IoError("write to " + path.string() + " failed");
        written_.push_back(path.string());
    }

    const std::vector<std::string>& written() const { return written_; }

private:
    std::filesystem::path dir_;
    std::vector<std::string> written_;
};

inline void write_ground_state(OutputDir& dir, const RunConfig& cfg, const GroundState& gs, const std::string& stem,
                               const std::string& title) {
    if (cfg.formats.json)
        dir.write(stem + ".json", [&](std::ostream& os) { os << io::to_json(gs, cfg.classify).dump(1) << '\n'; });
    if (cfg.formats.csv) dir.write(stem + "_profile.csv", [&](std::ostream& os) { io::write_profile_csv(os, gs); });
    if (cfg.formats.svg) {
        const auto r = gs.state.grid()->nodes();
        const auto u = reconstruct_u(gs.state.u);
        // the profile near the origin is dominated by the logarithmic singularity; plot from r_1
        std::vector<double> x(r.begin() + 1, r.end()), yu(u.begin() + 1, u.end()),
            yv(gs.state.v.samples().begin() + 1, gs.state.v.samples().end());
        const double shown = std::min(r.back(), 12.0 / std::sqrt(std::min(gs.state.params.omega, gs.state.params.omega_tilde)));
        std::size_t keep = 0;
        while (keep < x.size() && x[keep] <= shown) ++keep;
        x.resize(keep);
        yu.resize(keep);
        yv.resize(keep);
        dir.write(stem + ".svg", [&](std::ostream& os) {
            svg::line_plot(os, {title + " (" + gs.classification.label() + ")", "r", "profile"},
                           {{"u", x, yu}, {"v", x, yv}});
        });
    }
}

inline io::json run_command(const RunConfig& cfg, OutputDir& dir) {
    const auto& opt = cfg.solver;
    const auto& p = cfg.params;
    io::json summary{{"command", to_string(cfg.command)}};
    switch (cfg.command) {
    case Command::solve: {
        const auto gs = minimize_coupled(p, opt);
        write_ground_state(dir, cfg, gs, "ground_state", "coupled ground state");
        summary["level"] = gs.level;
        summary["q"] = gs.state.u.q;
        summary["classification"] = classify_state(gs.state, cfg.classify).label();
        break;
    }
    case Command::scalar: {
        const auto d = minimize_scalar_point(p.omega, p.alpha, opt);
        const auto d0 = minimize_scalar_regular(p.omega_tilde, opt);
        write_ground_state(dir, cfg, d, "scalar_u", "d(omega)");
        write_ground_state(dir, cfg, d0, "scalar_v", "d0(omega_tilde)");
        summary["d_omega"] = d.level;
        summary["d0_omega_tilde"] = d0.level;
        summary["d0_per_unit_omega_tilde"] = d0.level / p.omega_tilde;
        if (cfg.formats.json)
            dir.write("scalar.json", [&](std::ostream& os) { os << summary.dump(1) << '\n'; });
        break;
    }
    case Command::sweep: {
        const auto sw = sweep_beta(p, cfg.sweep_betas, opt, {1e-6, cfg.threads});
        if (cfg.formats.csv) dir.write("sweep.csv", [&](std::ostream& os) { io::write_sweep_csv(os, sw); });
        if (cfg.formats.json) dir.write("sweep.json", [&](std::ostream& os) { os << io::to_json(sw).dump(1) << '\n'; });
        if (cfg.formats.svg) {
            std::vector<double> b, c, c0, cinf;
            for (const auto& r : sw.rows)
                if (r.ok) {
                    b.push_back(r.beta);
                    c.push_back(r.c_beta);
                    c0.push_back(r.c0_beta);
                    cinf.push_back(r.beta > 0 ? sw.c_inf / r.beta : std::numeric_limits<double>::quiet_NaN());
                }
            dir.write("sweep.svg", [&](std::ostream& os) {
                svg::line_plot(os, {"ground state levels", "beta", "level"},
                               {{"c_beta", b, c, true}, {"c0_beta", b, c0, true}, {"c_inf / beta", b, cinf}});
            });
        }
        summary["rows"] = sw.rows.size();
        summary["c0"] = sw.c0;
        summary["c_inf"] = sw.c_inf;
        summary["violations"] = sw.violations;
        for (const auto& r : sw.rows)
            if (!r.ok) summary["failed_rows"].push_back(r.beta);
        break;
    }
    case Command::thresholds: {
        const Baseline base(p, opt);
        const auto bs = cfg.beta_hi > 0 ? beta_star(base, cfg.beta_hi, cfg.threshold) : beta_star(base, cfg.threshold);
        const auto bz = cfg.beta_hi > 0 ? beta_zero(base, cfg.beta_hi, cfg.threshold) : beta_zero(base, cfg.threshold);
        summary["d_omega"] = base.d_omega();
        summary["d0_omega_tilde"] = base.d0_omega_tilde();
        summary["d0_omega"] = base.d0_omega();
        summary["c0"] = base.c0();
        summary["c00"] = base.c00();
        summary["beta_star"] = io::to_json(bs);
        summary["beta_zero"] = io::to_json(bz);
        if (cfg.formats.json) dir.write("thresholds.json", [&](std::ostream& os) { os << summary.dump(1) << '\n'; });
        if (cfg.formats.csv)
            dir.write("thresholds.csv", [&](std::ostream& os) {
                os << "quantity,value,lo,hi\n";
                os << "beta_star," << io::g17(bs.value) << ',' << io::g17(bs.lo) << ',' << io::g17(bs.hi) << '\n';
                os << "beta_zero," << io::g17(bz.value) << ',' << io::g17(bz.lo) << ',' << io::g17(bz.hi) << '\n';
            });
        break;
    }
    case Command::regimes: {
        RegimeTableOptions ropt = cfg.regimes;
        ropt.threshold = cfg.threshold;
        ropt.threads = cfg.threads;
        const auto table = regime_table(p.alpha, p.omega, opt, ropt);
        if (cfg.formats.csv) dir.write("regimes.csv", [&](std::ostream& os) { io::write_regimes_csv(os, table); });
        if (cfg.formats.json)
            dir.write("regimes.json", [&](std::ostream& os) { os << io::to_json(table).dump(1) << '\n'; });
        if (cfg.formats.svg) {
            std::vector<std::vector<svg::Cell>> rows;
            for (const auto& row : table) {
                std::vector<svg::Cell> cells{{"omega~ = " + svg::num(row.ratio) + " d/d0(1)"},
                                             {row.levels_order > 0 ? "d > d0" : row.levels_order < 0 ? "d < d0" : "d = d0"},
                                             {row.error.empty() ? svg::num(row.beta_star) : "failed"}};
                for (const auto& c : row.cells)
                    cells.push_back({c.error.empty() ? c.observed.label() : "failed", c.match ? "#cfc" : "#fcc"});
                rows.push_back(cells);
            }
            dir.write("regimes.svg", [&](std::ostream& os) {
                svg::table(os, "regime table", {"row", "levels", "beta*", "beta* - offset", "beta* + offset"}, rows);
            });
        }
        std::size_t mismatches = 0;
        for (const auto& row : table) {
            if (!row.error.empty()) ++mismatches;
            for (const auto& c : row.cells)
                if (!c.match) ++mismatches;
        }
        summary["rows"] = table.size();
        summary["mismatches"] = mismatches;
        break;
    }
    case Command::limit: {
        const auto gs = minimize_limit(p, opt);
        write_ground_state(dir, cfg, gs, "limit", "limit problem");
        summary["c_inf"] = gs.level;
        summary["limit_charge"] = gs.state.u.q;
        break;
    }
    case Command::asymptotics: {
        const auto rep = asymptotic_check(p, cfg.asymptotic_betas, opt, cfg.threads);
        if (cfg.formats.csv)
            dir.write("asymptotics.csv", [&](std::ostream& os) { io::write_asymptotics_csv(os, rep); });
        if (cfg.formats.json)
            dir.write("asymptotics.json", [&](std::ostream& os) { os << io::to_json(rep).dump(1) << '\n'; });
        if (cfg.formats.svg) {
            std::vector<double> b, bc, lim;
            for (const auto& r : rep.rows) {
                b.push_back(r.beta);
                bc.push_back(r.beta_c);
                lim.push_back(rep.c_inf);
            }
            dir.write("asymptotics.svg", [&](std::ostream& os) {
                svg::line_plot(os, {"beta c_beta against the limit level", "beta", "level"},
                               {{"beta c_beta", b, bc, true}, {"c_inf", b, lim}});
            });
        }
        summary["c_inf"] = rep.c_inf;
        summary["largest_beta_gap"] = rep.rows.back().relative_gap;
        summary["gap_decreasing"] = rep.gap_decreasing;
        break;
    }
    case Command::selftest: {
        const auto checks = identity_checks();
        bool all = true;
        io::json list = io::json::array();
        for (const auto& c : checks) {
            all = all && c.pass();
            list.push_back({{"name", c.name}, {"error", c.error}, {"tolerance", c.tolerance}, {"pass", c.pass()}});
        }
        summary["checks"] = list;
        summary["pass"] = all;
        if (cfg.formats.json) dir.write("selftest.json", [&](std::ostream& os) { os << summary.dump(1) << '\n'; });
        if (cfg.formats.csv)
            dir.write("selftest.csv", [&](std::ostream& os) {
                os << "check,error,tolerance,pass\n";
                for (const auto& c : checks)
                    os << '"' << c.name << "\"," << io::g17(c.error) << ',' << io::g17(c.tolerance) << ','
                       << (c.pass() ? "yes" : "no") << '\n';
            });
        break;
    }
    }
    return summary;
}

} // namespace detail

/// Executes the configured command; see the header comment for exit codes.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        validate(cfg);
        detail::OutputDir dir(cfg.out_dir);
        try {
            auto summary = detail::run_command(cfg, dir);
            summary["files"] = dir.written();
            out << summary.dump() << '\n';
            if (cfg.command == Command::selftest && !summary["pass"].get<bool>()) return exit_failure;
            return exit_ok;
        } catch (const ConvergenceError& e) {
            try {
                detail::write_ground_state(dir, cfg, e.best(), "best_iterate", "best iterate");
            } catch (const IoError&) {
            }
            err << io::error_json(e.kind(), e.what()).dump() << '\n';
            return exit_nonconvergence;
        }
    } catch (const IoError& e) {
        err << io::error_json(e.kind(), e.what()).dump() << '\n';
        return exit_io;
    } catch (const ConfigError& e) {
        err << io::error_json(e.kind(), e.what(), e.key()).dump() << '\n';
        return exit_failure;
    } catch (const Error& e) {
        err << io::error_json(e.kind(), e.what()).dump() << '\n';
        return exit_failure;
    } catch (const std::exception& e) {
        err << io::error_json("internal", e.what()).dump() << '\n';
        return exit_failure;
    }
}

} // namespace delta_nls
