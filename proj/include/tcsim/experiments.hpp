#pragma once

#include "tcsim/dressed.hpp"
#include "tcsim/hamiltonians.hpp"
#include "tcsim/lindblad.hpp"
#include "tcsim/types.hpp"

#include <array>
#include <string>
#include <vector>

namespace tcsim::experiments {

// Tabular sweep output. Numeric cells are already in output units (ordinary
// frequencies in Hz, angles in rad, times in s); one row_errors entry per
// row, empty when the row solved cleanly.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::string> row_errors;
};

struct SweepOptions {
    int workers = 1;
    lindblad::IntegratorOptions integrator;
};

// Steady-state stabilization sweep over the polar angle. Per point the Rabi
// detuning is set from theta at fixed omega_x (endpoints switch to pure
// natural decay at theta=0 and to a flux-modulation-only drive at theta=pi),
// the cavity detuning comes from optimal_detunings, and the master equation
// is solved in the dressed rotating frame.
//
// Two interaction models are reported: the primary columns use the resonant
// dressed-frame coupling g(theta)(a†s~- + a s~+) that the analytic fidelity
// formulas describe; the *_full columns keep the bare blue-sideband operator
// Omega_b(a†s+ + a s-), whose off-resonant components depress the purity at
// small angles.
Table stabilization_sweep(const SystemParams& sys, const DriveSettings& base,
                          const std::vector<double>& thetas, const SweepOptions& opts = {});

enum class Interaction { Blue, Red, Longitudinal, Purple };

// Interaction-type comparison: equal coupling strength (taken from drv.omega_b)
// for every interaction type, fixed Rabi frequency from drv, steady-state
// P_g~ per theta, plus the no-interaction baseline column.
Table interaction_comparison(const SystemParams& sys, const DriveSettings& drv,
                             const std::vector<double>& thetas,
                             const std::vector<Interaction>& kinds, const SweepOptions& opts = {});

struct SpectroscopyOptions {
    int workers = 1;
    lindblad::IntegratorOptions integrator{1e-6, 1e-9, 0.0};
    double settle_over_kappa = 15.0;  // initial integration time * kappa
    double converge_rel = 1e-3;       // successive-period |<a>| change
    int max_periods = 64;
    int samples_per_period = 32;
};

// Cavity transmission map under blue-sideband flux modulation. probe_offsets
// are probe detunings from the bare cavity (rad/s); mod_offsets are
// modulation detunings from the bare sum frequency omega_q + omega_r
// (rad/s). Each cell is propagated to its periodic steady state and reports
// time-averaged |<a>|; non-convergent cells carry a row error marker. Rows
// are emitted row-major, modulation outer, probe inner.
Table spectroscopy_map(const SystemParams& sys, const DriveSettings& drv,
                       const std::vector<double>& probe_offsets,
                       const std::vector<double>& mod_offsets,
                       const SpectroscopyOptions& opts = {});

// Red-sideband vacuum Rabi oscillation from |e0> with kappa and gamma
// active, at exact sideband resonance.
lindblad::EvolutionResult vacuum_rabi_trace(const SystemParams& sys, double g_eff,
                                            const std::vector<double>& times,
                                            const lindblad::IntegratorOptions& opts = {});

// Dominant oscillation frequency (rad/s) of a uniformly sampled signal:
// mean-removed FFT zero-padded 8x with parabolic peak interpolation.
double dominant_frequency(double dt, const std::vector<double>& samples);

// |g_r| = sqrt(2 chi Delta (Delta+alpha) / alpha); inverse of the
// photon-number-splitting dispersive shift.
double g_from_number_splitting(double chi, double delta, double alpha);

// chi(g_r) = g_r^2 alpha / (2 Delta (Delta+alpha)).
double chi_from_coupling(double g, double delta, double alpha);

struct RabiCalibration {
    double eps_d;         // rad/s, half the fitted slope
    double omega_0;       // rad/s, intercept
    double residual_rms;  // rad/s
};

// Least-squares fit of Omega_R = 2 eps_d |g_r/Delta| + Omega_0 from
// (g_over_delta, omega_R) samples.
RabiCalibration rabi_rate_calibration(const std::vector<std::array<double, 2>>& samples);

// Shared worker pool used by the sweeps: runs fn(0..n-1) on `workers`
// threads, results indexed deterministically.
void parallel_for(int n, int workers, const std::function<void(int)>& fn);

}  // namespace tcsim::experiments
