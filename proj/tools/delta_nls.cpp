// delta-nls <command> --config <path> [--set key=value ...] [--out dir]

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "delta_nls/cli.hpp"

int main(int argc, char** argv) {
    using namespace delta_nls;
    CLI::App app{"Ground states of the coupled cubic NLS system with a point interaction"};
    std::string command;
    std::string config_path;
    std::vector<std::string> sets;
    std::string out_dir;
    bool print_config = false;
    app.add_option("command", command, "solve | scalar | sweep | thresholds | regimes | limit | asymptotics | selftest")
        ->required();
    app.add_option("--config", config_path, "key = value configuration file");
    app.add_option("--set", sets, "override one key, e.g. --set params.beta=2");
    app.add_option("--out", out_dir, "output directory (overrides output.directory)");
    app.add_flag("--print-config", print_config, "print the resolved configuration and exit");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    std::string text;
    if (!config_path.empty()) {
        std::ifstream f(config_path);
        if (!f) {
            std::cerr << io::error_json("io", "cannot read " + config_path).dump() << '\n';
            return exit_io;
        }
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    std::vector<std::string> overrides{"command=" + command};
    overrides.insert(overrides.end(), sets.begin(), sets.end());
    if (!out_dir.empty()) overrides.push_back("output.directory=" + out_dir);

    RunConfig cfg;
    try {
        cfg = parse_config(text, overrides);
    } catch (const ConfigError& e) {
        std::cerr << io::error_json(e.kind(), e.what(), e.key()).dump() << '\n';
        return exit_failure;
    }
    if (print_config) {
        std::cout << emit_config(cfg);
        return exit_ok;
    }
    return run(cfg, std::cout, std::cerr);
}
