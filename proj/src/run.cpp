#include "tcsim/run.hpp"

#include "tcsim/dressed.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace tcsim::io {

namespace {

using experiments::Table;

std::string cell(double v) {
    if (!std::isfinite(v)) v = 0.0;  // failed rows carry the error marker instead
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

std::string sanitize(const std::string& s) {
    std::string out = s;
    for (char& c : out)
        if (c == ',' || c == '\n' || c == '\r') c = ';';
    return out;
}

std::string timestamp_utc() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

Table run_quantize(const RunConfig& cfg) {
    Table t;
    t.columns = {"omega_q_hz", "omega_r_hz", "g_r_hz",        "g_b_hz", "g_l_hz",
                 "g_c_hz",     "g_r_approx_hz", "g_b_approx_hz", "z1_ohm", "z2_ohm"};
    const auto m = circuitq::quantize(*cfg.circuit);
    t.rows.push_back({angular_to_hz(m.omega_q), angular_to_hz(m.omega_r), angular_to_hz(m.g_r),
                      angular_to_hz(m.g_b), angular_to_hz(m.g_l), angular_to_hz(m.g_c),
                      angular_to_hz(m.g_r_approx), angular_to_hz(m.g_b_approx), m.z1, m.z2});
    t.row_errors.push_back("");
    return t;
}

Table run_flux_sweep(const RunConfig& cfg) {
    Table t;
    t.columns = {"phi_ext", "g_r_hz", "g_b_hz", "omega_q_hz", "omega_r_hz"};
    const bool harmonics = cfg.phi_ac > 0.0;
    if (harmonics)
        for (int k = 0; k <= cfg.n_harmonics; ++k) {
            t.columns.push_back("g_r_harm" + std::to_string(k) + "_hz");
            t.columns.push_back("g_b_harm" + std::to_string(k) + "_hz");
        }
    for (double phi : cfg.flux_grid->points()) {
        circuitq::CircuitParams p = *cfg.circuit;
        p.phi_ext = phi;
        std::vector<double> row;
        std::string err;
        try {
            const auto m = circuitq::quantize(p);
            row = {phi, angular_to_hz(m.g_r), angular_to_hz(m.g_b), angular_to_hz(m.omega_q),
                   angular_to_hz(m.omega_r)};
            if (harmonics) {
                const auto h =
                    circuitq::modulation_harmonics(p, phi, cfg.phi_ac, cfg.n_harmonics);
                for (int k = 0; k <= cfg.n_harmonics; ++k) {
                    row.push_back(angular_to_hz(h.g_r[k]));
                    row.push_back(angular_to_hz(h.g_b[k]));
                }
            }
        } catch (const std::exception& e) {
            row.assign(t.columns.size(), 0.0);
            row[0] = phi;
            err = e.what();
        }
        t.rows.push_back(std::move(row));
        t.row_errors.push_back(std::move(err));
    }
    return t;
}

Table run_rates(const RunConfig& cfg) {
    Table t;
    t.columns = {"theta_rad", "gamma_minus_hz", "gamma_plus_hz", "gamma_phi_tilde_hz"};
    const auto& s = *cfg.system;
    for (double theta : cfg.theta_grid->points()) {
        const auto r = dressed::dressed_rates(s.gamma, s.gamma_phi, theta);
        t.rows.push_back({theta, angular_to_hz(r.gamma_minus), angular_to_hz(r.gamma_plus),
                          angular_to_hz(r.gamma_phi_tilde)});
        t.row_errors.push_back("");
    }
    return t;
}

Table run_vacuum_rabi(const RunConfig& cfg) {
    const auto times = cfg.time_grid->points();
    lindblad::IntegratorOptions integ{cfg.rtol, cfg.atol, 0.0};
    const auto evo =
        experiments::vacuum_rabi_trace(*cfg.system, cfg.drive.omega_r_sb, times, integ);
    Table t;
    t.columns = {"time_s", "p_excited", "n_photon", "bloch_x", "bloch_y", "bloch_z"};
    for (size_t i = 0; i < evo.times.size(); ++i) {
        const double pe = 0.5 * (1.0 + evo.bloch[i][2]);
        t.rows.push_back({evo.times[i], pe, evo.n_photon[i], evo.bloch[i][0], evo.bloch[i][1],
                          evo.bloch[i][2]});
        t.row_errors.push_back("");
    }
    return t;
}

Table dispatch(const RunConfig& cfg, int workers) {
    experiments::SweepOptions sweep;
    sweep.workers = workers;
    sweep.integrator = {cfg.rtol, cfg.atol, 0.0};
    switch (cfg.kind) {
        case ExperimentKind::Quantize:
            return run_quantize(cfg);
        case ExperimentKind::FluxSweep:
            return run_flux_sweep(cfg);
        case ExperimentKind::Stabilize:
            return experiments::stabilization_sweep(*cfg.system, cfg.drive,
                                                    cfg.theta_grid->points(), sweep);
        case ExperimentKind::Compare: {
            DriveSettings drv = cfg.drive;  // omega_x holds the fixed Rabi frequency
            using experiments::Interaction;
            return experiments::interaction_comparison(
                *cfg.system, drv, cfg.theta_grid->points(),
                {Interaction::Blue, Interaction::Red, Interaction::Longitudinal,
                 Interaction::Purple},
                sweep);
        }
        case ExperimentKind::Spectroscopy: {
            experiments::SpectroscopyOptions sopts;
            sopts.workers = workers;
            sopts.integrator = {cfg.rtol, cfg.atol, 0.0};
            return experiments::spectroscopy_map(*cfg.system, cfg.drive,
                                                 cfg.probe_grid->points(),
                                                 cfg.mod_grid->points(), sopts);
        }
        case ExperimentKind::VacuumRabi:
            return run_vacuum_rabi(cfg);
        case ExperimentKind::Rates:
            return run_rates(cfg);
    }
    throw std::logic_error("unhandled experiment kind");
}

}  // namespace

std::string render_csv(const Table& t, const RunConfig& cfg, bool reproducible) {
    std::ostringstream out;
    out << "# tcsim " << version << "\n";
    out << "# experiment: " << to_string(cfg.kind) << "\n";
    out << "# config-begin\n";
    std::istringstream cfg_text(serialize_config(cfg));
    std::string line;
    while (std::getline(cfg_text, line)) out << "#   " << line << "\n";
    out << "# config-end\n";
    if (!reproducible) out << "# timestamp: " << timestamp_utc() << "\n";

    for (size_t c = 0; c < t.columns.size(); ++c) out << (c ? "," : "") << t.columns[c];
    out << ",error\n";
    for (size_t r = 0; r < t.rows.size(); ++r) {
        for (size_t c = 0; c < t.rows[r].size(); ++c) out << (c ? "," : "") << cell(t.rows[r][c]);
        out << "," << sanitize(r < t.row_errors.size() ? t.row_errors[r] : "") << "\n";
    }
    return out.str();
}

std::string render_json(const Table& t, const RunConfig& cfg, bool reproducible) {
    nlohmann::json j;
    j["version"] = version;
    j["experiment"] = to_string(cfg.kind);
    j["config"] = serialize_config(cfg);
    if (!reproducible) j["timestamp"] = timestamp_utc();
    j["columns"] = t.columns;
    auto& rows = j["rows"] = nlohmann::json::array();
    for (const auto& r : t.rows) {
        nlohmann::json row = nlohmann::json::array();
        for (double v : r) row.push_back(std::isfinite(v) ? v : 0.0);
        rows.push_back(std::move(row));
    }
    j["row_errors"] = t.row_errors;
    return j.dump(2) + "\n";
}

RunResult run(const RunConfig& cfg, const RunOptions& opts) {
    RunResult res;
    namespace fs = std::filesystem;
    fs::path out_path(cfg.out_path);
    if (!opts.out_dir.empty()) out_path = fs::path(opts.out_dir) / out_path.filename();
    res.output_path = out_path.string();

    const int workers = opts.workers_override > 0 ? opts.workers_override : cfg.workers;
    try {
        res.table = dispatch(cfg, workers);
    } catch (const std::exception& e) {
        res.exit_code = 2;
        res.message = std::string("solver error: ") + e.what();
        return res;
    }

    const std::string payload = cfg.format == OutputFormat::Csv
                                    ? render_csv(res.table, cfg, opts.reproducible)
                                    : render_json(res.table, cfg, opts.reproducible);
    if (out_path.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(out_path.parent_path(), ec);
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        res.exit_code = 2;
        res.message = "cannot open output file " + res.output_path;
        return res;
    }
    out << payload;
    out.close();

    // Row-level failures leave completed rows in place; surface them in the
    // exit status so scripted sweeps notice.
    for (const auto& e : res.table.row_errors)
        if (!e.empty()) {
            res.exit_code = 2;
            res.message = "one or more rows failed; see the error column";
            break;
        }
    return res;
}

}  // namespace tcsim::io
