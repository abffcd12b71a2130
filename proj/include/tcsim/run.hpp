#pragma once

#include "tcsim/config.hpp"
#include "tcsim/experiments.hpp"

#include <string>

namespace tcsim::io {

struct RunOptions {
    std::string out_dir;      // overrides the directory of cfg.out_path when set
    int workers_override = 0; // > 0 overrides cfg.workers
    bool reproducible = false;  // suppress the timestamp comment line
};

struct RunResult {
    int exit_code = 0;  // 0 ok, 1 config error, 2 solver error
    std::string output_path;
    std::string message;
    experiments::Table table;
};

// Dispatches the configured experiment and writes the output file.
RunResult run(const RunConfig& cfg, const RunOptions& opts = {});

// Output writers (CSV: '#' comment block with resolved config + version,
// header row, 17-significant-digit scientific cells, LF endings; a final
// `error` column carries per-row markers).
std::string render_csv(const experiments::Table& t, const RunConfig& cfg, bool reproducible);
std::string render_json(const experiments::Table& t, const RunConfig& cfg, bool reproducible);

}  // namespace tcsim::io
