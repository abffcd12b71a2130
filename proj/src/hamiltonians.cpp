#include "tcsim/hamiltonians.hpp"

#include "tcsim/qop.hpp"

#include <cmath>

namespace tcsim {

double DriveSettings::rabi_frequency() const {
    return std::hypot(omega_x, omega_z);
}

namespace ham {

namespace {

struct CompositeOps {
    Mat a, ad, n, sx, sy, sz, sp, sm;
    explicit CompositeOps(int n_fock) {
        a = qop::cavity_destroy(n_fock);
        ad = a.adjoint();
        n = ad * a;
        sx = qop::qubit_op(qop::sigma_x(), n_fock);
        sy = qop::qubit_op(qop::sigma_y(), n_fock);
        sz = qop::qubit_op(qop::sigma_z(), n_fock);
        sp = qop::qubit_op(qop::sigma_plus(), n_fock);
        sm = qop::qubit_op(qop::sigma_minus(), n_fock);
    }
};

Mat dressing_terms(const DriveSettings& drv, const CompositeOps& o) {
    return 0.5 * drv.omega_x * o.sx + 0.5 * drv.omega_z * o.sz + drv.delta * o.n;
}

}  // namespace

Mat h_static(const SystemParams& sys, double g_r, double g_b) {
    const CompositeOps o(sys.n_fock);
    Mat h = sys.omega_r * o.n + 0.5 * sys.omega_q * o.sz;
    h -= g_r * (o.ad * o.sm + o.a * o.sp);
    h -= g_b * (o.ad * o.sp + o.a * o.sm);
    return h;
}

Mat h_red_rotating(const SystemParams& sys, double g_r_eff, double detuning) {
    const CompositeOps o(sys.n_fock);
    Mat h = detuning * o.n - sys.chi * (o.n * o.sz);
    h -= g_r_eff * (o.ad * o.sm + o.a * o.sp);
    return h;
}

Mat h_blue_rotating(const SystemParams& sys, const DriveSettings& drv) {
    const CompositeOps o(sys.n_fock);
    const Complex phase = std::exp(Complex(0, drv.phase_phi));
    Mat h = dressing_terms(drv, o) + sys.chi * (o.n * o.sz);
    h += drv.omega_b * (phase * (o.ad * o.sp) + std::conj(phase) * (o.a * o.sm));
    return h;
}

Mat h_purple_rotating(const SystemParams& sys, const DriveSettings& drv) {
    const CompositeOps o(sys.n_fock);
    return dressing_terms(drv, o) + drv.omega_p_sb * ((o.ad + o.a) * o.sy);
}

Mat h_longitudinal(const SystemParams& sys, double omega_l, const DriveSettings& drv) {
    const CompositeOps o(sys.n_fock);
    return dressing_terms(drv, o) + omega_l * ((o.ad + o.a) * o.sz);
}

OptimalDetunings optimal_detunings(const SystemParams& sys, const DriveSettings& drv,
                                   double theta) {
    const double omega_rabi = drv.rabi_frequency();
    if (omega_rabi <= 0) throw std::invalid_argument("optimal_detunings: Rabi frequency is zero");
    OptimalDetunings d;
    d.omega_1 = sys.omega_q - drv.omega_z;
    d.omega_2 = sys.omega_q + sys.omega_r - omega_rabi - drv.omega_z;
    d.delta = omega_rabi + 2.0 * sys.chi * std::cos(theta);
    return d;
}

std::vector<std::string> rwa_validity_warnings(const SystemParams& sys,
                                               const DriveSettings& drv) {
    std::vector<std::string> w;
    const double wmin = std::min(sys.omega_q, sys.omega_r);
    if (wmin > 0) {
        if (drv.omega_b > 0.05 * wmin || drv.omega_x > 0.05 * wmin)
            w.push_back("drive strength exceeds 5% of the mode frequencies; "
                        "counter-rotating corrections are not modeled");
    }
    const double omega_rabi = drv.rabi_frequency();
    const double slow = std::max(sys.gamma, sys.gamma_phi);
    if (omega_rabi > 0 && slow > 0 && omega_rabi < 20.0 * slow)
        w.push_back("Rabi frequency below 20x the qubit rates; the dressed-rate "
                    "master equation drops cross terms that are not negligible here");
    return w;
}

}  // namespace ham
}  // namespace tcsim
