#include "tcsim/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace tcsim::io {

std::string to_string(ExperimentKind k) {
    switch (k) {
        case ExperimentKind::Quantize: return "quantize";
        case ExperimentKind::FluxSweep: return "flux-sweep";
        case ExperimentKind::Stabilize: return "stabilize";
        case ExperimentKind::Compare: return "compare";
        case ExperimentKind::Spectroscopy: return "spectroscopy";
        case ExperimentKind::VacuumRabi: return "vacuum-rabi";
        case ExperimentKind::Rates: return "rates";
    }
    return "?";
}

ExperimentKind experiment_kind_from_string(const std::string& s) {
    for (ExperimentKind k : {ExperimentKind::Quantize, ExperimentKind::FluxSweep,
                             ExperimentKind::Stabilize, ExperimentKind::Compare,
                             ExperimentKind::Spectroscopy, ExperimentKind::VacuumRabi,
                             ExperimentKind::Rates})
        if (to_string(k) == s) return k;
    throw ConfigError("unknown experiment kind '" + s + "'");
}

std::vector<double> GridSpec::points() const {
    std::vector<double> p;
    p.reserve(count);
    if (count == 1) {
        p.push_back(start);
        return p;
    }
    for (int i = 0; i < count; ++i)
        p.push_back(start + (stop - start) * double(i) / double(count - 1));
    return p;
}

namespace {

enum class Dim { Frequency, Time, Inductance, Capacitance, Angle, Plain };

struct Entry {
    std::string value;
    int line;
};

using Sections = std::map<std::string, std::map<std::string, Entry>>;

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    size_t b = s.find_last_not_of(" \t\r");
    if (a == std::string::npos) return "";
    return s.substr(a, b - a + 1);
}

Sections tokenize(const std::string& text) {
    Sections sections;
    std::istringstream in(text);
    std::string raw, section;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string s = trim(raw);
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']') throw ConfigError("malformed section header", line);
            section = trim(s.substr(1, s.size() - 2));
            if (section.empty()) throw ConfigError("empty section name", line);
            sections.try_emplace(section);
            continue;
        }
        const size_t eq = s.find('=');
        if (eq == std::string::npos) throw ConfigError("expected 'key = value'", line);
        if (section.empty()) throw ConfigError("key outside of any section", line);
        const std::string key = trim(s.substr(0, eq));
        const std::string val = trim(s.substr(eq + 1));
        if (key.empty()) throw ConfigError("empty key", line);
        auto [it, inserted] = sections[section].try_emplace(key, Entry{val, line});
        if (!inserted)
            throw ConfigError("duplicate key '" + section + "." + key + "' (lines " +
                                  std::to_string(it->second.line) + " and " +
                                  std::to_string(line) + ")",
                              line);
    }
    return sections;
}

double unit_multiplier(Dim dim, const std::string& unit, int line) {
    static const std::map<std::string, double> freq = {
        {"Hz", 1.0}, {"kHz", 1e3}, {"MHz", 1e6}, {"GHz", 1e9}};
    static const std::map<std::string, double> time = {
        {"s", 1.0}, {"ms", 1e-3}, {"us", 1e-6}, {"ns", 1e-9}};
    static const std::map<std::string, double> ind = {
        {"H", 1.0}, {"mH", 1e-3}, {"uH", 1e-6}, {"nH", 1e-9}, {"pH", 1e-12}};
    static const std::map<std::string, double> cap = {
        {"F", 1.0}, {"uF", 1e-6}, {"nF", 1e-9}, {"pF", 1e-12}, {"fF", 1e-15}};

    const std::map<std::string, double>* table = nullptr;
    switch (dim) {
        case Dim::Frequency: table = &freq; break;
        case Dim::Time: table = &time; break;
        case Dim::Inductance: table = &ind; break;
        case Dim::Capacitance: table = &cap; break;
        case Dim::Angle:
            if (unit == "rad") return 1.0;
            if (unit == "deg") return pi / 180.0;
            throw ConfigError("bad unit suffix '" + unit + "' for an angle key", line);
        case Dim::Plain:
            throw ConfigError("unit suffix '" + unit + "' not allowed for this key", line);
    }
    const auto it = table->find(unit);
    if (it == table->end())
        throw ConfigError("bad unit suffix '" + unit + "' for this key", line);
    return it->second;
}

// Default unit per dimension when no suffix is given: Hz, ns, nH, fF, rad.
double default_multiplier(Dim dim) {
    switch (dim) {
        case Dim::Frequency: return 1.0;
        case Dim::Time: return 1e-9;
        case Dim::Inductance: return 1e-9;
        case Dim::Capacitance: return 1e-15;
        case Dim::Angle: return 1.0;
        case Dim::Plain: return 1.0;
    }
    return 1.0;
}

class Extractor {
public:
    explicit Extractor(Sections sections) : sections_(std::move(sections)) {}

    bool has_section(const std::string& s) const { return sections_.count(s) > 0; }

    bool has(const std::string& sec, const std::string& key) const {
        auto it = sections_.find(sec);
        return it != sections_.end() && it->second.count(key) > 0;
    }

    // Numeric value with unit handling; marks the key as consumed.
    double number(const std::string& sec, const std::string& key, Dim dim) {
        const Entry e = take(sec, key);
        size_t pos = 0;
        double v;
        try {
            v = std::stod(e.value, &pos);
        } catch (const std::exception&) {
            throw ConfigError("bad numeric value for '" + sec + "." + key + "'", e.line);
        }
        const std::string unit = trim(e.value.substr(pos));
        const double mult = unit.empty() ? default_multiplier(dim)
                                         : unit_multiplier(dim, unit, e.line);
        double out = v * mult;
        if (dim == Dim::Frequency) out = hz_to_angular(out);
        return out;
    }

    int integer(const std::string& sec, const std::string& key) {
        const Entry e = take(sec, key);
        try {
            size_t pos = 0;
            const int v = std::stoi(e.value, &pos);
            if (trim(e.value.substr(pos)).size())
                throw ConfigError("trailing characters after integer", e.line);
            return v;
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception&) {
            throw ConfigError("bad integer value for '" + sec + "." + key + "'", e.line);
        }
    }

    std::string text(const std::string& sec, const std::string& key) {
        return take(sec, key).value;
    }

    template <typename T>
    void optional_number(const std::string& sec, const std::string& key, Dim dim, T& target) {
        if (has(sec, key)) target = T(number(sec, key, dim));
    }

    void require(const std::string& sec, const std::string& key) const {
        if (!has_section(sec)) throw ConfigError("missing required section [" + sec + "]");
        if (!has(sec, key))
            throw ConfigError("missing required key '" + key + "' in section [" + sec + "]");
    }

    // Every key must have been consumed by the end of parsing.
    void check_unknown() const {
        for (const auto& [sec, keys] : sections_)
            for (const auto& [key, entry] : keys)
                if (!consumed_.count(sec + "." + key))
                    throw ConfigError("unknown key '" + sec + "." + key + "'", entry.line);
    }

private:
    Entry take(const std::string& sec, const std::string& key) {
        require(sec, key);
        consumed_.insert(sec + "." + key);
        return sections_.at(sec).at(key);
    }

    Sections sections_;
    std::set<std::string> consumed_;
};

GridSpec grid(Extractor& ex, const std::string& prefix, Dim dim) {
    GridSpec g;
    ex.require("grid", prefix + "_start");
    ex.require("grid", prefix + "_stop");
    ex.require("grid", prefix + "_count");
    g.start = ex.number("grid", prefix + "_start", dim);
    g.stop = ex.number("grid", prefix + "_stop", dim);
    g.count = ex.integer("grid", prefix + "_count");
    if (g.count < 1) throw ConfigError("grid '" + prefix + "' must have count >= 1");
    return g;
}

circuitq::CircuitParams parse_circuit(Extractor& ex) {
    for (const char* key : {"L_q", "L_r", "L_g0", "C_q", "C_r", "C_g", "phi_ext"})
        ex.require("circuit", key);
    circuitq::CircuitParams p{};
    p.l_q = ex.number("circuit", "L_q", Dim::Inductance);
    p.l_r = ex.number("circuit", "L_r", Dim::Inductance);
    p.l_g0 = ex.number("circuit", "L_g0", Dim::Inductance);
    p.c_q = ex.number("circuit", "C_q", Dim::Capacitance);
    p.c_r = ex.number("circuit", "C_r", Dim::Capacitance);
    p.c_g = ex.number("circuit", "C_g", Dim::Capacitance);
    p.phi_ext = ex.number("circuit", "phi_ext", Dim::Plain);
    return p;
}

SystemParams parse_system(Extractor& ex) {
    for (const char* key : {"omega_q", "omega_r", "kappa", "gamma", "gamma_phi"})
        ex.require("system", key);
    SystemParams s{};
    s.omega_q = ex.number("system", "omega_q", Dim::Frequency);
    s.omega_r = ex.number("system", "omega_r", Dim::Frequency);
    s.kappa = ex.number("system", "kappa", Dim::Frequency);
    s.gamma = ex.number("system", "gamma", Dim::Frequency);
    s.gamma_phi = ex.number("system", "gamma_phi", Dim::Frequency);
    if (ex.has("system", "chi")) s.chi = ex.number("system", "chi", Dim::Frequency);
    if (ex.has("system", "alpha")) s.alpha = ex.number("system", "alpha", Dim::Frequency);
    s.n_fock = ex.has("system", "n_fock") ? ex.integer("system", "n_fock") : 5;
    if (s.n_fock < 2) throw ConfigError("system.n_fock must be >= 2");
    if (s.kappa < 0 || s.gamma < 0 || s.gamma_phi < 0)
        throw ConfigError("system rates must be nonnegative");
    return s;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    Extractor ex(tokenize(text));
    if (!ex.has_section("experiment"))
        throw ConfigError("missing required section [experiment]");
    ex.require("experiment", "kind");

    RunConfig cfg;
    cfg.kind = experiment_kind_from_string(ex.text("experiment", "kind"));

    switch (cfg.kind) {
        case ExperimentKind::Quantize:
            cfg.circuit = parse_circuit(ex);
            break;
        case ExperimentKind::FluxSweep:
            cfg.circuit = parse_circuit(ex);
            cfg.flux_grid = grid(ex, "flux", Dim::Plain);
            if (ex.has("circuit", "phi_ac")) cfg.phi_ac = ex.number("circuit", "phi_ac", Dim::Plain);
            if (ex.has("circuit", "n_harmonics"))
                cfg.n_harmonics = ex.integer("circuit", "n_harmonics");
            break;
        case ExperimentKind::Stabilize:
            cfg.system = parse_system(ex);
            ex.require("drive", "omega_x");
            ex.require("drive", "omega_b");
            cfg.drive.omega_x = ex.number("drive", "omega_x", Dim::Frequency);
            cfg.drive.omega_b = ex.number("drive", "omega_b", Dim::Frequency);
            ex.optional_number("drive", "phase", Dim::Angle, cfg.drive.phase_phi);
            cfg.theta_grid = grid(ex, "theta", Dim::Angle);
            break;
        case ExperimentKind::Compare:
            cfg.system = parse_system(ex);
            ex.require("drive", "omega_rabi");
            ex.require("drive", "coupling");
            cfg.drive.omega_x = ex.number("drive", "omega_rabi", Dim::Frequency);
            cfg.drive.omega_b = ex.number("drive", "coupling", Dim::Frequency);
            cfg.theta_grid = grid(ex, "theta", Dim::Angle);
            break;
        case ExperimentKind::Spectroscopy:
            cfg.system = parse_system(ex);
            ex.require("drive", "omega_b");
            ex.require("drive", "probe_eps");
            cfg.drive.omega_b = ex.number("drive", "omega_b", Dim::Frequency);
            cfg.drive.probe_eps = ex.number("drive", "probe_eps", Dim::Frequency);
            cfg.probe_grid = grid(ex, "probe", Dim::Frequency);
            cfg.mod_grid = grid(ex, "mod", Dim::Frequency);
            break;
        case ExperimentKind::VacuumRabi:
            cfg.system = parse_system(ex);
            ex.require("drive", "omega_r_sb");
            cfg.drive.omega_r_sb = ex.number("drive", "omega_r_sb", Dim::Frequency);
            cfg.time_grid = grid(ex, "time", Dim::Time);
            break;
        case ExperimentKind::Rates:
            cfg.system = parse_system(ex);
            cfg.theta_grid = grid(ex, "theta", Dim::Angle);
            break;
    }

    if (ex.has("output", "path")) cfg.out_path = ex.text("output", "path");
    if (ex.has("output", "format")) {
        const std::string f = ex.text("output", "format");
        if (f == "csv")
            cfg.format = OutputFormat::Csv;
        else if (f == "json")
            cfg.format = OutputFormat::Json;
        else
            throw ConfigError("output.format must be 'csv' or 'json'");
    }
    if (ex.has("solver", "rtol")) cfg.rtol = ex.number("solver", "rtol", Dim::Plain);
    if (ex.has("solver", "atol")) cfg.atol = ex.number("solver", "atol", Dim::Plain);
    if (ex.has("solver", "workers")) cfg.workers = ex.integer("solver", "workers");
    if (cfg.rtol <= 0 || cfg.atol <= 0) throw ConfigError("solver tolerances must be positive");
    if (cfg.workers < 1) throw ConfigError("solver.workers must be >= 1");

    ex.check_unknown();
    return cfg;
}

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_hz(double angular) { return fmt(angular_to_hz(angular)); }

void emit_grid(std::ostringstream& out, const char* name, const GridSpec& g, bool freq,
               bool time = false) {
    const double mult = time ? 1e9 : 1.0;  // time grids serialize in ns
    out << name << "_start = " << fmt(freq ? angular_to_hz(g.start) : g.start * mult) << "\n";
    out << name << "_stop = " << fmt(freq ? angular_to_hz(g.stop) : g.stop * mult) << "\n";
    out << name << "_count = " << g.count << "\n";
}

}  // namespace

std::string serialize_config(const RunConfig& cfg) {
    std::ostringstream out;
    out << "[experiment]\nkind = " << to_string(cfg.kind) << "\n";

    if (cfg.circuit) {
        const auto& c = *cfg.circuit;
        out << "\n[circuit]\n";
        out << "L_q = " << fmt(c.l_q * 1e9) << " nH\n";
        out << "L_r = " << fmt(c.l_r * 1e9) << " nH\n";
        out << "L_g0 = " << fmt(c.l_g0 * 1e9) << " nH\n";
        out << "C_q = " << fmt(c.c_q * 1e15) << " fF\n";
        out << "C_r = " << fmt(c.c_r * 1e15) << " fF\n";
        out << "C_g = " << fmt(c.c_g * 1e15) << " fF\n";
        out << "phi_ext = " << fmt(c.phi_ext) << "\n";
        if (cfg.kind == ExperimentKind::FluxSweep) {
            out << "phi_ac = " << fmt(cfg.phi_ac) << "\n";
            out << "n_harmonics = " << cfg.n_harmonics << "\n";
        }
    }
    if (cfg.system) {
        const auto& s = *cfg.system;
        out << "\n[system]\n";
        out << "omega_q = " << fmt_hz(s.omega_q) << "\n";
        out << "omega_r = " << fmt_hz(s.omega_r) << "\n";
        out << "chi = " << fmt_hz(s.chi) << "\n";
        out << "alpha = " << fmt_hz(s.alpha) << "\n";
        out << "kappa = " << fmt_hz(s.kappa) << "\n";
        out << "gamma = " << fmt_hz(s.gamma) << "\n";
        out << "gamma_phi = " << fmt_hz(s.gamma_phi) << "\n";
        out << "n_fock = " << s.n_fock << "\n";
    }
    switch (cfg.kind) {
        case ExperimentKind::Stabilize:
            out << "\n[drive]\n";
            out << "omega_x = " << fmt_hz(cfg.drive.omega_x) << "\n";
            out << "omega_b = " << fmt_hz(cfg.drive.omega_b) << "\n";
            out << "phase = " << fmt(cfg.drive.phase_phi) << " rad\n";
            break;
        case ExperimentKind::Compare:
            out << "\n[drive]\n";
            out << "omega_rabi = " << fmt_hz(cfg.drive.omega_x) << "\n";
            out << "coupling = " << fmt_hz(cfg.drive.omega_b) << "\n";
            break;
        case ExperimentKind::Spectroscopy:
            out << "\n[drive]\n";
            out << "omega_b = " << fmt_hz(cfg.drive.omega_b) << "\n";
            out << "probe_eps = " << fmt_hz(cfg.drive.probe_eps) << "\n";
            break;
        case ExperimentKind::VacuumRabi:
            out << "\n[drive]\n";
            out << "omega_r_sb = " << fmt_hz(cfg.drive.omega_r_sb) << "\n";
            break;
        default:
            break;
    }
    if (cfg.theta_grid || cfg.flux_grid || cfg.time_grid || cfg.probe_grid || cfg.mod_grid) {
        out << "\n[grid]\n";
        if (cfg.theta_grid) emit_grid(out, "theta", *cfg.theta_grid, false);
        if (cfg.flux_grid) emit_grid(out, "flux", *cfg.flux_grid, false);
        if (cfg.time_grid) emit_grid(out, "time", *cfg.time_grid, false, true);
        if (cfg.probe_grid) emit_grid(out, "probe", *cfg.probe_grid, true);
        if (cfg.mod_grid) emit_grid(out, "mod", *cfg.mod_grid, true);
    }
    out << "\n[output]\npath = " << cfg.out_path << "\nformat = "
        << (cfg.format == OutputFormat::Csv ? "csv" : "json") << "\n";
    out << "\n[solver]\nrtol = " << fmt(cfg.rtol) << "\natol = " << fmt(cfg.atol)
        << "\nworkers = " << cfg.workers << "\n";
    return out.str();
}

}  // namespace tcsim::io
