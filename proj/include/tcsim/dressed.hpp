#pragma once

#include "tcsim/hamiltonians.hpp"
#include "tcsim/types.hpp"

namespace tcsim::dressed {

// Stabilization axis on the Bloch sphere, polar angle measured from the
// ground-state pole: theta = arccos(Omega_z / Omega_R).
struct StabilizationAxis {
    double theta;  // [0, pi]
    double phi;    // [0, 2pi)

    static StabilizationAxis from_drive(const DriveSettings& drv);
};

struct DressedRates {
    double gamma_minus;      // rad/s
    double gamma_plus;       // rad/s
    double gamma_phi_tilde;  // rad/s
};

// U = [[cos t/2, sin t/2], [-sin t/2, cos t/2]]; |g~> = U|g>, |e~> = U|e>.
Eigen::Matrix2cd dressing_unitary(double theta);

// Conjugates a 2x2 qubit operator into the dressed frame: U op U†.
Mat dressed_qubit_op(const Mat& op_qubit, double theta);

// Rotating-frame decay/excitation/dephasing rates from the lab-frame
// dissipators conjugated into the dressed basis:
//   g- = gamma cos^4(t/2) + (gamma_phi/2) sin^2 t
//   g+ = gamma sin^4(t/2) + (gamma_phi/2) sin^2 t
//   g~phi = (gamma/2) sin^2 t + gamma_phi cos^2 t
DressedRates dressed_rates(double gamma, double gamma_phi, double theta);

struct GoldenRule {
    double lorentzian;  // g^2 kappa / ((kappa/2)^2 + (delta-omega)^2)
    double saturating;  // 4 g^2 kappa / (kappa^2 + 4 g^2)
};

GoldenRule golden_rule_rate(double g, double kappa, double delta, double omega);

// Steady-state |g~> population, weak-coupling solution of the four-level
// optical Bloch equations.
double pop_weak_coupling(const DressedRates& r, double g, double kappa);

// Strong-coupling asymptote (gamma- + kappa)/(gamma- + gamma+ + kappa).
double pop_strong_coupling(const DressedRates& r, double kappa);

// Main-text form with the saturating transition rate Gamma.
double pop_main_text(const DressedRates& r, double g, double kappa);

// Dispersive-shift-corrected stabilization angle
//   theta' = arccos[(Oz + 2 chi nbar)/sqrt(Ox^2 + (Oz + 2 chi nbar)^2)].
double corrected_angle(double theta, double chi, double n_bar, double omega_x, double omega_z);

// Mean photon number ceiling gamma+/(gamma- + gamma+ + kappa).
double nbar_max(const DressedRates& r, double kappa);

}  // namespace tcsim::dressed
