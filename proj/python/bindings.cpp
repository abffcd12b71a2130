#include "tcsim/circuit.hpp"
#include "tcsim/dressed.hpp"
#include "tcsim/experiments.hpp"
#include "tcsim/hamiltonians.hpp"
#include "tcsim/lindblad.hpp"
#include "tcsim/qop.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace tcsim;

namespace {

std::vector<lindblad::CollapseOp> to_collapse(
    const std::vector<std::pair<double, Mat>>& ops) {
    std::vector<lindblad::CollapseOp> out;
    out.reserve(ops.size());
    for (const auto& [rate, op] : ops) out.push_back({rate, op});
    return out;
}

py::dict table_to_dict(const experiments::Table& t) {
    py::dict d;
    d["columns"] = t.columns;
    d["rows"] = t.rows;
    d["row_errors"] = t.row_errors;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Tunable-coupler qubit stabilization simulator";
    m.attr("__version__") = "0.1.0";

    // ------------------------------------------------------------- qop
    m.def("destroy", &qop::destroy, py::arg("n_fock"));
    m.def("create", &qop::create, py::arg("n_fock"));
    m.def("number", &qop::number, py::arg("n_fock"));
    m.def("sigma_x", &qop::sigma_x);
    m.def("sigma_y", &qop::sigma_y);
    m.def("sigma_z", &qop::sigma_z);
    m.def("sigma_plus", &qop::sigma_plus);
    m.def("sigma_minus", &qop::sigma_minus);
    m.def("tensor", &qop::tensor, py::arg("a"), py::arg("b"));
    m.def("expect", &qop::expect, py::arg("obs"), py::arg("rho"));
    m.def(
        "eig_hermitian",
        [](const Mat& h) {
            const auto r = qop::eig_hermitian(h);
            return py::make_tuple(r.values, r.vectors);
        },
        py::arg("h"), "Eigenvalues (ascending) and eigenvector columns of a Hermitian matrix");
    m.def("partial_trace_cavity", &qop::partial_trace_cavity, py::arg("rho"), py::arg("n_fock"));
    m.def("qubit_cavity_ket", &qop::qubit_cavity_ket, py::arg("qubit"), py::arg("n"),
          py::arg("n_fock"));

    // --------------------------------------------------------- circuitq
    py::class_<circuitq::CircuitParams>(m, "CircuitParams")
        .def(py::init([](double l_q, double l_r, double l_g0, double c_q, double c_r,
                         double c_g, double phi_ext) {
                 return circuitq::CircuitParams{l_q, l_r, l_g0, c_q, c_r, c_g, phi_ext};
             }),
             py::arg("l_q"), py::arg("l_r"), py::arg("l_g0"), py::arg("c_q"), py::arg("c_r"),
             py::arg("c_g"), py::arg("phi_ext") = 0.0)
        .def_readwrite("l_q", &circuitq::CircuitParams::l_q)
        .def_readwrite("l_r", &circuitq::CircuitParams::l_r)
        .def_readwrite("l_g0", &circuitq::CircuitParams::l_g0)
        .def_readwrite("c_q", &circuitq::CircuitParams::c_q)
        .def_readwrite("c_r", &circuitq::CircuitParams::c_r)
        .def_readwrite("c_g", &circuitq::CircuitParams::c_g)
        .def_readwrite("phi_ext", &circuitq::CircuitParams::phi_ext);

    py::class_<circuitq::TwoModeModel>(m, "TwoModeModel")
        .def_readonly("omega_q", &circuitq::TwoModeModel::omega_q)
        .def_readonly("omega_r", &circuitq::TwoModeModel::omega_r)
        .def_readonly("g_l", &circuitq::TwoModeModel::g_l)
        .def_readonly("g_c", &circuitq::TwoModeModel::g_c)
        .def_readonly("g_r", &circuitq::TwoModeModel::g_r)
        .def_readonly("g_b", &circuitq::TwoModeModel::g_b)
        .def_readonly("g_r_approx", &circuitq::TwoModeModel::g_r_approx)
        .def_readonly("g_b_approx", &circuitq::TwoModeModel::g_b_approx)
        .def_readonly("z1", &circuitq::TwoModeModel::z1)
        .def_readonly("z2", &circuitq::TwoModeModel::z2);

    m.def("coupler_inductance", &circuitq::coupler_inductance, py::arg("l_g0"),
          py::arg("phi_ext"));
    m.def(
        "quantize",
        [](const circuitq::CircuitParams& p) { return circuitq::quantize(p); },
        py::arg("params"));
    m.def(
        "coupling_vs_flux",
        [](const circuitq::CircuitParams& p, const std::vector<double>& flux) {
            py::list out;
            for (const auto& fp : circuitq::coupling_vs_flux(p, flux))
                out.append(py::make_tuple(fp.phi_ext, fp.g_r, fp.g_b, fp.omega_q, fp.omega_r));
            return out;
        },
        py::arg("params"), py::arg("flux_grid"));
    m.def(
        "modulation_harmonics",
        [](const circuitq::CircuitParams& p, double phi_dc, double phi_ac, int n_harmonics) {
            const auto h = circuitq::modulation_harmonics(p, phi_dc, phi_ac, n_harmonics);
            return py::make_tuple(h.g_r, h.g_b);
        },
        py::arg("params"), py::arg("phi_dc"), py::arg("phi_ac"), py::arg("n_harmonics"));

    // ----------------------------------------------------- hamiltonians
    py::class_<SystemParams>(m, "SystemParams")
        .def(py::init([](double omega_q, double omega_r, double chi, double alpha,
                         double kappa, double gamma, double gamma_phi, int n_fock) {
                 SystemParams s;
                 s.omega_q = omega_q;
                 s.omega_r = omega_r;
                 s.chi = chi;
                 s.alpha = alpha;
                 s.kappa = kappa;
                 s.gamma = gamma;
                 s.gamma_phi = gamma_phi;
                 s.n_fock = n_fock;
                 return s;
             }),
             py::arg("omega_q") = 0.0, py::arg("omega_r") = 0.0, py::arg("chi") = 0.0,
             py::arg("alpha") = 0.0, py::arg("kappa") = 0.0, py::arg("gamma") = 0.0,
             py::arg("gamma_phi") = 0.0, py::arg("n_fock") = 5)
        .def_readwrite("omega_q", &SystemParams::omega_q)
        .def_readwrite("omega_r", &SystemParams::omega_r)
        .def_readwrite("chi", &SystemParams::chi)
        .def_readwrite("alpha", &SystemParams::alpha)
        .def_readwrite("kappa", &SystemParams::kappa)
        .def_readwrite("gamma", &SystemParams::gamma)
        .def_readwrite("gamma_phi", &SystemParams::gamma_phi)
        .def_readwrite("n_fock", &SystemParams::n_fock);

    py::class_<DriveSettings>(m, "DriveSettings")
        .def(py::init([](double omega_x, double omega_z, double phase_phi, double omega_b,
                         double omega_r_sb, double omega_p_sb, double delta, double probe_eps) {
                 DriveSettings d;
                 d.omega_x = omega_x;
                 d.omega_z = omega_z;
                 d.phase_phi = phase_phi;
                 d.omega_b = omega_b;
                 d.omega_r_sb = omega_r_sb;
                 d.omega_p_sb = omega_p_sb;
                 d.delta = delta;
                 d.probe_eps = probe_eps;
                 return d;
             }),
             py::arg("omega_x") = 0.0, py::arg("omega_z") = 0.0, py::arg("phase_phi") = 0.0,
             py::arg("omega_b") = 0.0, py::arg("omega_r_sb") = 0.0, py::arg("omega_p_sb") = 0.0,
             py::arg("delta") = 0.0, py::arg("probe_eps") = 0.0)
        .def_readwrite("omega_x", &DriveSettings::omega_x)
        .def_readwrite("omega_z", &DriveSettings::omega_z)
        .def_readwrite("phase_phi", &DriveSettings::phase_phi)
        .def_readwrite("omega_b", &DriveSettings::omega_b)
        .def_readwrite("omega_r_sb", &DriveSettings::omega_r_sb)
        .def_readwrite("omega_p_sb", &DriveSettings::omega_p_sb)
        .def_readwrite("delta", &DriveSettings::delta)
        .def_readwrite("probe_eps", &DriveSettings::probe_eps)
        .def("rabi_frequency", &DriveSettings::rabi_frequency);

    m.def("h_static", &ham::h_static, py::arg("sys"), py::arg("g_r"), py::arg("g_b"));
    m.def("h_red_rotating", &ham::h_red_rotating, py::arg("sys"), py::arg("g_r_eff"),
          py::arg("detuning"));
    m.def("h_blue_rotating", &ham::h_blue_rotating, py::arg("sys"), py::arg("drive"));
    m.def("h_purple_rotating", &ham::h_purple_rotating, py::arg("sys"), py::arg("drive"));
    m.def("h_longitudinal", &ham::h_longitudinal, py::arg("sys"), py::arg("omega_l"),
          py::arg("drive"));
    m.def(
        "optimal_detunings",
        [](const SystemParams& s, const DriveSettings& d, double theta) {
            const auto o = ham::optimal_detunings(s, d, theta);
            return py::make_tuple(o.omega_1, o.omega_2, o.delta);
        },
        py::arg("sys"), py::arg("drive"), py::arg("theta"));

    // ---------------------------------------------------------- dressed
    m.def("dressing_unitary", &dressed::dressing_unitary, py::arg("theta"));
    m.def(
        "dressed_rates",
        [](double gamma, double gamma_phi, double theta) {
            const auto r = dressed::dressed_rates(gamma, gamma_phi, theta);
            return py::make_tuple(r.gamma_minus, r.gamma_plus, r.gamma_phi_tilde);
        },
        py::arg("gamma"), py::arg("gamma_phi"), py::arg("theta"));
    m.def(
        "golden_rule_rate",
        [](double g, double kappa, double delta, double omega) {
            const auto r = dressed::golden_rule_rate(g, kappa, delta, omega);
            return py::make_tuple(r.lorentzian, r.saturating);
        },
        py::arg("g"), py::arg("kappa"), py::arg("delta") = 0.0, py::arg("omega") = 0.0);
    auto rates_arg = [](py::tuple t) {
        return dressed::DressedRates{t[0].cast<double>(), t[1].cast<double>(),
                                     t[2].cast<double>()};
    };
    m.def(
        "pop_weak_coupling",
        [rates_arg](py::tuple rates, double g, double kappa) {
            return dressed::pop_weak_coupling(rates_arg(rates), g, kappa);
        },
        py::arg("rates"), py::arg("g"), py::arg("kappa"));
    m.def(
        "pop_strong_coupling",
        [rates_arg](py::tuple rates, double kappa) {
            return dressed::pop_strong_coupling(rates_arg(rates), kappa);
        },
        py::arg("rates"), py::arg("kappa"));
    m.def(
        "pop_main_text",
        [rates_arg](py::tuple rates, double g, double kappa) {
            return dressed::pop_main_text(rates_arg(rates), g, kappa);
        },
        py::arg("rates"), py::arg("g"), py::arg("kappa"));
    m.def("corrected_angle", &dressed::corrected_angle, py::arg("theta"), py::arg("chi"),
          py::arg("n_bar"), py::arg("omega_x"), py::arg("omega_z"));
    m.def(
        "nbar_max",
        [rates_arg](py::tuple rates, double kappa) {
            return dressed::nbar_max(rates_arg(rates), kappa);
        },
        py::arg("rates"), py::arg("kappa"));

    // --------------------------------------------------------- lindblad
    py::class_<lindblad::Liouvillian>(m, "Liouvillian")
        .def_readonly("hilbert_dim", &lindblad::Liouvillian::hilbert_dim)
        .def_readonly("matrix", &lindblad::Liouvillian::matrix);

    m.def(
        "build_liouvillian",
        [](const Mat& h, const std::vector<std::pair<double, Mat>>& collapse) {
            return lindblad::build_liouvillian(h, to_collapse(collapse));
        },
        py::arg("h"), py::arg("collapse"),
        "Collapse operators as (rate, operator) pairs");
    m.def(
        "steady_state",
        [](const lindblad::Liouvillian& liou) { return lindblad::steady_state(liou).rho; },
        py::arg("liouvillian"));
    m.def(
        "propagate",
        [](const lindblad::Liouvillian& liou, const Mat& rho0, const std::vector<double>& times,
           double rtol, double atol) {
            const auto r = lindblad::propagate(liou, {rho0, 0.0}, times, {rtol, atol, 0.0});
            py::dict d;
            d["times"] = r.times;
            d["bloch"] = r.bloch;
            d["n_photon"] = r.n_photon;
            d["populations"] = r.populations;
            d["final_state"] = r.final_state;
            return d;
        },
        py::arg("liouvillian"), py::arg("rho0"), py::arg("times"), py::arg("rtol") = 1e-8,
        py::arg("atol") = 1e-10);
    m.def(
        "bloch_vector",
        [](const Mat& rho) {
            const auto b = lindblad::bloch_vector(rho);
            return py::make_tuple(b.x, b.y, b.z, b.purity);
        },
        py::arg("rho"));

    // ------------------------------------------------------ experiments
    m.def(
        "stabilization_sweep",
        [](const SystemParams& s, const DriveSettings& d, const std::vector<double>& thetas,
           int workers) {
            experiments::SweepOptions opts;
            opts.workers = workers;
            return table_to_dict(experiments::stabilization_sweep(s, d, thetas, opts));
        },
        py::arg("sys"), py::arg("drive"), py::arg("thetas"), py::arg("workers") = 1);
    m.def(
        "interaction_comparison",
        [](const SystemParams& s, const DriveSettings& d, const std::vector<double>& thetas,
           int workers) {
            experiments::SweepOptions opts;
            opts.workers = workers;
            using experiments::Interaction;
            return table_to_dict(experiments::interaction_comparison(
                s, d, thetas,
                {Interaction::Blue, Interaction::Red, Interaction::Longitudinal,
                 Interaction::Purple},
                opts));
        },
        py::arg("sys"), py::arg("drive"), py::arg("thetas"), py::arg("workers") = 1);
    m.def(
        "spectroscopy_map",
        [](const SystemParams& s, const DriveSettings& d, const std::vector<double>& probe,
           const std::vector<double>& mod, int workers) {
            experiments::SpectroscopyOptions opts;
            opts.workers = workers;
            return table_to_dict(experiments::spectroscopy_map(s, d, probe, mod, opts));
        },
        py::arg("sys"), py::arg("drive"), py::arg("probe_offsets"), py::arg("mod_offsets"),
        py::arg("workers") = 1);
    m.def(
        "vacuum_rabi_trace",
        [](const SystemParams& s, double g_eff, const std::vector<double>& times) {
            const auto r = experiments::vacuum_rabi_trace(s, g_eff, times);
            py::dict d;
            d["times"] = r.times;
            d["bloch"] = r.bloch;
            d["n_photon"] = r.n_photon;
            return d;
        },
        py::arg("sys"), py::arg("g_eff"), py::arg("times"));
    m.def("dominant_frequency", &experiments::dominant_frequency, py::arg("dt"),
          py::arg("samples"));
    m.def("g_from_number_splitting", &experiments::g_from_number_splitting, py::arg("chi"),
          py::arg("delta"), py::arg("alpha"));
    m.def("chi_from_coupling", &experiments::chi_from_coupling, py::arg("g"), py::arg("delta"),
          py::arg("alpha"));
    m.def(
        "rabi_rate_calibration",
        [](const std::vector<std::array<double, 2>>& samples) {
            const auto r = experiments::rabi_rate_calibration(samples);
            return py::make_tuple(r.eps_d, r.omega_0, r.residual_rms);
        },
        py::arg("samples"));
}
