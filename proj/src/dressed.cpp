#include "tcsim/dressed.hpp"

#include <cmath>

namespace tcsim::dressed {

StabilizationAxis StabilizationAxis::from_drive(const DriveSettings& drv) {
    const double omega_rabi = drv.rabi_frequency();
    if (omega_rabi <= 0)
        throw std::invalid_argument("StabilizationAxis: Rabi frequency is zero");
    double phi = std::fmod(drv.phase_phi, two_pi);
    if (phi < 0) phi += two_pi;
    return {std::acos(std::clamp(drv.omega_z / omega_rabi, -1.0, 1.0)), phi};
}

Eigen::Matrix2cd dressing_unitary(double theta) {
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    Eigen::Matrix2cd u;
    u << c, s, -s, c;
    return u;
}

Mat dressed_qubit_op(const Mat& op_qubit, double theta) {
    if (op_qubit.rows() != 2 || op_qubit.cols() != 2)
        throw DimensionMismatch("dressed_qubit_op: expected a 2x2 operator");
    const Eigen::Matrix2cd u = dressing_unitary(theta);
    return u * op_qubit * u.adjoint();
}

DressedRates dressed_rates(double gamma, double gamma_phi, double theta) {
    if (gamma < 0 || gamma_phi < 0)
        throw std::invalid_argument("dressed_rates: rates must be nonnegative");
    const double c2 = std::pow(std::cos(theta / 2), 2);
    const double s2 = std::pow(std::sin(theta / 2), 2);
    const double st2 = std::pow(std::sin(theta), 2);
    DressedRates r;
    r.gamma_minus = gamma * c2 * c2 + 0.5 * gamma_phi * st2;
    r.gamma_plus = gamma * s2 * s2 + 0.5 * gamma_phi * st2;
    r.gamma_phi_tilde = 0.5 * gamma * st2 + gamma_phi * (1.0 - st2);
    return r;
}

GoldenRule golden_rule_rate(double g, double kappa, double delta, double omega) {
    if (kappa <= 0) throw std::invalid_argument("golden_rule_rate: kappa must be positive");
    GoldenRule out;
    const double det = delta - omega;
    out.lorentzian = g * g * kappa / (0.25 * kappa * kappa + det * det);
    out.saturating = 4.0 * g * g * kappa / (kappa * kappa + 4.0 * g * g);
    return out;
}

double pop_weak_coupling(const DressedRates& r, double g, double kappa) {
    const double gm = r.gamma_minus, gp = r.gamma_plus;
    const double k2 = kappa * kappa, g2 = 4.0 * g * g;
    const double num = gm * (gm + gp + kappa) * k2 + g2 * (gm + kappa) * (gp + kappa);
    const double den = (gm + gp) * (gm + gp + kappa) * k2 + g2 * ((gm + gp) * (gp + kappa) + k2);
    if (den == 0.0) throw std::invalid_argument("pop_weak_coupling: all rates are zero");
    return num / den;
}

double pop_strong_coupling(const DressedRates& r, double kappa) {
    const double den = r.gamma_minus + r.gamma_plus + kappa;
    if (den == 0.0) throw std::invalid_argument("pop_strong_coupling: all rates are zero");
    return (r.gamma_minus + kappa) / den;
}

double pop_main_text(const DressedRates& r, double g, double kappa) {
    const double gr = (kappa > 0) ? golden_rule_rate(g, kappa, 0, 0).saturating : 0.0;
    const double den = r.gamma_minus + r.gamma_plus + gr;
    if (den == 0.0) throw std::invalid_argument("pop_main_text: all rates are zero");
    return (r.gamma_minus + gr) / den;
}

double corrected_angle(double theta, double chi, double n_bar, double omega_x, double omega_z) {
    const double oz = omega_z + 2.0 * chi * n_bar;
    const double norm = std::hypot(omega_x, oz);
    if (norm == 0.0) return theta;
    return std::acos(std::clamp(oz / norm, -1.0, 1.0));
}

double nbar_max(const DressedRates& r, double kappa) {
    const double den = r.gamma_minus + r.gamma_plus + kappa;
    if (den == 0.0) throw std::invalid_argument("nbar_max: all rates are zero");
    return r.gamma_plus / den;
}

}  // namespace tcsim::dressed
