#pragma once

#include "tcsim/types.hpp"

#include <vector>

namespace tcsim::circuitq {

// Lumped-element values of the tunable-coupler circuit: transmon branch
// (L_q, C_q), resonator branch (L_r, C_r), shared SQUID inductance L_g0 at
// zero flux, direct coupling capacitance C_g, and the external flux through
// the SQUID loop in units of Phi_0.
struct CircuitParams {
    double l_q;      // H
    double l_r;      // H
    double l_g0;     // H
    double c_q;      // F
    double c_r;      // F
    double c_g;      // F
    double phi_ext;  // Phi_0 units
};

// Two-mode model extracted from the linearized circuit. Couplings are
// angular frequencies; g_l/g_c multiply (a1†+a1)(a2†+a2) and
// (a1†-a1)(a2†-a2), and regroup into the red/blue sideband couplings as
// g_r = -(g_l - g_c), g_b = -(g_l + g_c).
struct TwoModeModel {
    double omega_q;  // rad/s
    double omega_r;  // rad/s
    double g_l;      // rad/s
    double g_c;      // rad/s
    double g_r;      // rad/s, exact
    double g_b;      // rad/s, exact
    double g_r_approx;  // small-coupling closed form
    double g_b_approx;
    double z1;  // ohm
    double z2;  // ohm
};

// L_g0 / |cos(pi*phi_ext)|. Throws DivergentCoupler when |cos| <= 1e-6.
double coupler_inductance(double l_g0, double phi_ext);

// Full quantization of the linearized circuit. Appends validity warnings
// (e.g. L_g0 not small against L_q, L_r) when a sink is provided.
TwoModeModel quantize(const CircuitParams& p, std::vector<std::string>* warnings = nullptr);

struct FluxPoint {
    double phi_ext;
    double g_r, g_b;          // rad/s
    double omega_q, omega_r;  // rad/s
};

std::vector<FluxPoint> coupling_vs_flux(const CircuitParams& p,
                                        const std::vector<double>& flux_grid);

// Cosine Fourier coefficients of g_r(t), g_b(t) under flux modulation
// phi(t) = phi_dc + phi_ac*cos(omega_d t); index k holds g^(k).
struct ModulationHarmonics {
    std::vector<double> g_r;  // rad/s
    std::vector<double> g_b;  // rad/s
};

ModulationHarmonics modulation_harmonics(const CircuitParams& p, double phi_dc, double phi_ac,
                                         int n_harmonics, int samples = 4096);

}  // namespace tcsim::circuitq
