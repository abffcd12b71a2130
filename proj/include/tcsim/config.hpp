#pragma once

#include "tcsim/circuit.hpp"
#include "tcsim/hamiltonians.hpp"

#include <optional>
#include <string>

namespace tcsim::io {

inline constexpr const char* version = "0.1.0";

// Configuration error carrying the offending line (0 when not line-specific).
struct ConfigError : std::runtime_error {
    int line;
    explicit ConfigError(const std::string& msg, int line_ = 0)
        : std::runtime_error(msg), line(line_) {}
};

enum class ExperimentKind {
    Quantize,
    FluxSweep,
    Stabilize,
    Compare,
    Spectroscopy,
    VacuumRabi,
    Rates,
};

std::string to_string(ExperimentKind k);
ExperimentKind experiment_kind_from_string(const std::string& s);

struct GridSpec {
    double start = 0.0;
    double stop = 0.0;
    int count = 1;

    std::vector<double> points() const;
};

enum class OutputFormat { Csv, Json };

struct RunConfig {
    ExperimentKind kind = ExperimentKind::Quantize;

    std::optional<circuitq::CircuitParams> circuit;
    double phi_ac = 0.0;  // flux-sweep modulation amplitude, Phi_0 units
    int n_harmonics = 2;

    std::optional<SystemParams> system;
    DriveSettings drive;

    std::optional<GridSpec> theta_grid;  // rad
    std::optional<GridSpec> flux_grid;   // Phi_0 units
    std::optional<GridSpec> time_grid;   // s
    std::optional<GridSpec> probe_grid;  // rad/s offsets from omega_r
    std::optional<GridSpec> mod_grid;    // rad/s offsets from omega_q + omega_r

    std::string out_path = "out.csv";
    OutputFormat format = OutputFormat::Csv;

    double rtol = 1e-8;
    double atol = 1e-10;
    int workers = 1;
};

// Parses the sectioned key = value format documented in the README.
// Inputs use ordinary units (Hz, ns, nH, fF, rad) with optional unit
// suffixes; everything is stored in SI angular units. Throws ConfigError
// with the offending line number.
RunConfig parse_config(const std::string& text);

// Canonical textual form of a resolved config; parse(serialize(c)) == c.
std::string serialize_config(const RunConfig& cfg);

}  // namespace tcsim::io
