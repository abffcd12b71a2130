#include "tcsim/circuit.hpp"

#include <cmath>
#include <string>

namespace tcsim::circuitq {

namespace {

void validate(const CircuitParams& p, std::vector<std::string>* warnings) {
    if (p.l_q <= 0 || p.l_r <= 0 || p.l_g0 <= 0 || p.c_q <= 0 || p.c_r <= 0 || p.c_g < 0)
        throw std::invalid_argument("circuit: all inductances/capacitances must be positive");
    if (warnings && p.l_g0 >= 0.1 * std::min(p.l_q, p.l_r))
        warnings->push_back("L_g0 is not small against L_q, L_r; the adiabatic "
                            "elimination of the coupler mode becomes inaccurate");
}

}  // namespace

double coupler_inductance(double l_g0, double phi_ext) {
    const double c = std::abs(std::cos(pi * phi_ext));
    if (c <= 1e-6)
        throw DivergentCoupler("coupler inductance diverges near half a flux quantum");
    return l_g0 / c;
}

TwoModeModel quantize(const CircuitParams& p, std::vector<std::string>* warnings) {
    validate(p, warnings);
    const double l_g = coupler_inductance(p.l_g0, p.phi_ext);

    const double l_star2 = p.l_r * p.l_q + p.l_r * l_g + p.l_q * l_g;
    const double c_star2 = p.c_r * p.c_q + p.c_r * p.c_g + p.c_q * p.c_g;
    const double a_q = 1.0 - p.l_r * l_g / l_star2;  // = L_q(L_r+L_g)/L*^2 > 0
    const double a_r = 1.0 - p.l_q * l_g / l_star2;

    TwoModeModel m;
    m.z1 = std::sqrt(p.l_q * (p.c_r + p.c_g) / (c_star2 * a_q));
    m.z2 = std::sqrt(p.l_r * (p.c_q + p.c_g) / (c_star2 * a_r));
    m.omega_q = std::sqrt(a_q * (p.c_r + p.c_g) / (p.l_q * c_star2));
    m.omega_r = std::sqrt(a_r * (p.c_q + p.c_g) / (p.l_r * c_star2));
    m.g_l = -(l_g / (2.0 * l_star2)) * std::sqrt(m.z1 * m.z2);
    m.g_c = -(p.c_g / (2.0 * c_star2)) / std::sqrt(m.z1 * m.z2);
    m.g_r = -(m.g_l - m.g_c);
    m.g_b = -(m.g_l + m.g_c);

    // Leading-order forms quoted in terms of the mode frequencies; they drop
    // the L_g, C_g corrections inside L*^2, C*^2 and the impedances.
    const double wprod = m.omega_r * m.omega_q;
    m.g_r_approx = (l_g / 2.0) * std::sqrt(wprod / (p.l_r * p.l_q)) -
                   (p.c_g / 2.0) * std::sqrt(wprod / (p.c_r * p.c_q));
    m.g_b_approx = (l_g / 2.0) * std::sqrt(wprod / (p.l_r * p.l_q)) +
                   (p.c_g / 2.0) * std::sqrt(wprod / (p.c_r * p.c_q));
    return m;
}

std::vector<FluxPoint> coupling_vs_flux(const CircuitParams& p,
                                        const std::vector<double>& flux_grid) {
    std::vector<FluxPoint> out;
    out.reserve(flux_grid.size());
    for (double phi : flux_grid) {
        CircuitParams q = p;
        q.phi_ext = phi;
        const TwoModeModel m = quantize(q);
        out.push_back({phi, m.g_r, m.g_b, m.omega_q, m.omega_r});
    }
    return out;
}

ModulationHarmonics modulation_harmonics(const CircuitParams& p, double phi_dc, double phi_ac,
                                         int n_harmonics, int samples) {
    if (n_harmonics < 0) throw std::invalid_argument("n_harmonics must be >= 0");
    if (samples < 4096) samples = 4096;
    if (std::abs(phi_dc) + std::abs(phi_ac) >= 0.5)
        throw DivergentCoupler("flux excursion reaches half a flux quantum");

    ModulationHarmonics h;
    h.g_r.assign(n_harmonics + 1, 0.0);
    h.g_b.assign(n_harmonics + 1, 0.0);

    // Trapezoid rule over one period; the integrand is periodic so the
    // endpoints coincide and a plain mean over [0, 2pi) is exact to
    // spectral accuracy.
    CircuitParams q = p;
    for (int s = 0; s < samples; ++s) {
        const double x = two_pi * s / samples;
        q.phi_ext = phi_dc + phi_ac * std::cos(x);
        const TwoModeModel m = quantize(q);
        for (int k = 0; k <= n_harmonics; ++k) {
            const double w = (k == 0 ? 1.0 : 2.0) * std::cos(k * x) / samples;
            h.g_r[k] += w * m.g_r;
            h.g_b[k] += w * m.g_b;
        }
    }
    return h;
}

}  // namespace tcsim::circuitq
