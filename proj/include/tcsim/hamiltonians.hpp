#pragma once

#include "tcsim/types.hpp"

#include <vector>

namespace tcsim {

// Two-mode model parameters. chi is the signed dispersive shift entering the
// rotating frame as +chi * a†a * sigma_z; for a transmon below the cavity
// chi < 0. alpha is informational (it enters only through chi).
struct SystemParams {
    double omega_q = 0;    // rad/s
    double omega_r = 0;    // rad/s
    double chi = 0;        // rad/s
    double alpha = 0;      // rad/s
    double kappa = 0;      // rad/s
    double gamma = 0;      // rad/s
    double gamma_phi = 0;  // rad/s
    int n_fock = 5;
};

struct DriveSettings {
    double omega_x = 0;     // Rabi strength, rad/s
    double omega_z = 0;     // Rabi detuning, rad/s
    double phase_phi = 0;   // azimuth, applied as the sideband phase
    double omega_b = 0;     // blue-sideband strength, rad/s
    double omega_r_sb = 0;  // red-sideband strength, rad/s
    double omega_p_sb = 0;  // purple-sideband strength, rad/s
    double delta = 0;       // rotating-frame cavity detuning, rad/s
    double probe_eps = 0;   // cavity probe strength, rad/s
    double probe_detuning = 0;

    double rabi_frequency() const;  // sqrt(omega_x^2 + omega_z^2)
};

namespace ham {

// Lab-frame two-mode Hamiltonian
//   omega_r a†a + (omega_q/2) sigma_z - g_r(a†s- + a s+) - g_b(a†s+ + a s-).
Mat h_static(const SystemParams& sys, double g_r, double g_b);

// Red-sideband rotating frame, reduced so that only the residual modulation
// detuning and the dispersive term remain:
//   (detuning - chi sigma_z) a†a - g_r_eff (a†s- + a s+).
// At detuning = -chi the |e0>,|g1> pair is degenerate before coupling.
Mat h_red_rotating(const SystemParams& sys, double g_r_eff, double detuning);

// Blue-sideband rotating frame:
//   (Ox/2)sx + (Oz/2)sz + chi a†a sz + Ob(a†s+ e^{i phi} + a s- e^{-i phi})
//   + delta a†a.
Mat h_blue_rotating(const SystemParams& sys, const DriveSettings& drv);

// Qubit dressing terms + delta a†a + Omega_P (a†+a) sigma_y.
Mat h_purple_rotating(const SystemParams& sys, const DriveSettings& drv);

// Qubit dressing terms + delta a†a + omega_l (a†+a) sigma_z.
Mat h_longitudinal(const SystemParams& sys, double omega_l, const DriveSettings& drv);

struct OptimalDetunings {
    double omega_1;  // Rabi drive frequency, rad/s
    double omega_2;  // blue-sideband drive frequency, rad/s
    double delta;    // rotating-frame cavity detuning, rad/s
};

// omega_1 = omega_q - Oz, omega_2 = omega_q + omega_r - OR - Oz,
// delta = OR + 2 chi cos(theta).
OptimalDetunings optimal_detunings(const SystemParams& sys, const DriveSettings& drv,
                                   double theta);

// RWA guard: the rotating-frame forms assume drive strengths well below the
// mode frequencies, and the dressed-rate dissipators assume OR >> gamma.
std::vector<std::string> rwa_validity_warnings(const SystemParams& sys,
                                               const DriveSettings& drv);

}  // namespace ham
}  // namespace tcsim
