#include "tcsim/run.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open config file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tunable-coupler qubit stabilization simulator"};
    app.require_subcommand(1);

    std::string config_path, out_dir;
    int workers = 0;
    bool reproducible = false;

    auto* run_cmd = app.add_subcommand("run", "run the experiment described by a config file");
    run_cmd->add_option("config", config_path, "path to the config file")->required();
    run_cmd->add_option("--out", out_dir, "output directory (overrides the config's directory)");
    run_cmd->add_option("--workers", workers, "number of worker threads");
    run_cmd->add_flag("--reproducible", reproducible,
                      "suppress the timestamp comment for byte-stable output");

    auto* validate_cmd = app.add_subcommand("validate", "parse and validate a config file");
    validate_cmd->add_option("config", config_path, "path to the config file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        const std::string text = read_file(config_path);
        const tcsim::io::RunConfig cfg = tcsim::io::parse_config(text);

        if (validate_cmd->parsed()) {
            std::cout << "ok: " << tcsim::io::to_string(cfg.kind) << " experiment, output "
                      << cfg.out_path << "\n";
            return 0;
        }

        tcsim::io::RunOptions opts;
        opts.out_dir = out_dir;
        opts.workers_override = workers;
        opts.reproducible = reproducible;
        const auto res = tcsim::io::run(cfg, opts);
        if (res.exit_code == 0)
            std::cout << "wrote " << res.output_path << " (" << res.table.rows.size()
                      << " rows)\n";
        else
            std::cerr << "error: " << res.message << "\n";
        return res.exit_code;
    } catch (const tcsim::io::ConfigError& e) {
        std::cerr << "error: config: ";
        if (e.line > 0) std::cerr << "line " << e.line << ": ";
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
