#pragma once

#include "tcsim/types.hpp"

#include <array>
#include <functional>
#include <vector>

namespace tcsim::lindblad {

struct CollapseOp {
    double rate;  // rad/s, >= 0
    Mat op;
};

// Dense superoperator acting on column-stacked vec(rho).
struct Liouvillian {
    int hilbert_dim = 0;
    Mat matrix;  // (d^2 x d^2)

    int superop_dim() const { return hilbert_dim * hilbert_dim; }
};

// L(rho) = -i[H, rho] + sum_k rate_k (C rho C† - {C†C, rho}/2).
Liouvillian build_liouvillian(const Mat& h, const std::vector<CollapseOp>& collapse);

struct DensityMatrix {
    Mat rho;
    double time = 0.0;
};

DensityMatrix density_from_ket(const Vec& ket);

// Checks trace ~ 1, Hermiticity, positivity; throws std::runtime_error when
// violated beyond the given tolerances.
void validate_density(const Mat& rho, double trace_tol = 1e-9, double herm_tol = 1e-10,
                      double psd_tol = 1e-8);

struct SteadyStateOptions {
    bool check_uniqueness = true;
    double uniqueness_factor = 1e3;  // second-smallest |Re| must exceed factor * smallest
    double residual_tol = 1e-10;     // ||L rho|| <= tol * ||L||
};

// Null-space extraction with the trace condition appended as a row and the
// bordered system solved in the least-squares sense. Throws
// DegenerateSteadyState when the zero eigenvalue is not isolated.
DensityMatrix steady_state(const Liouvillian& liou, const SteadyStateOptions& opts = {});

struct IntegratorOptions {
    double rtol = 1e-8;
    double atol = 1e-10;
    double max_step = 0.0;  // 0 = unbounded
};

struct EvolutionResult {
    std::vector<double> times;                   // s
    std::vector<std::array<double, 3>> bloch;    // <sx>, <sy>, <sz>
    std::vector<double> n_photon;                // <a†a>
    std::vector<Eigen::VectorXd> populations;    // diag(rho)
    Mat final_state;
};

// Adaptive Dormand-Prince 5(4) propagation with output at the requested
// (sorted, nonnegative) times.
EvolutionResult propagate(const Liouvillian& liou, const DensityMatrix& rho0,
                          const std::vector<double>& times, const IntegratorOptions& opts = {});

struct BlochVector {
    double x, y, z;
    double purity;  // |<sigma_vec>|
};

// Partial trace over the cavity, then Pauli expectations. <sigma_z> = +1
// for |e>.
BlochVector bloch_vector(const Mat& rho);

// Polar angle of the Bloch vector measured from the ground-state pole,
// arccos(-z/|sigma_vec|), matching theta = 0 <-> |g>.
double stabilization_angle(const BlochVector& b);

// Generic embedded 4(5) integrator over complex vectors. Calls
// observer(t, y) at every accepted step when provided. Throws
// StepSizeUnderflow when the controller stalls.
using Rhs = std::function<void(double, const Vec&, Vec&)>;
using Observer = std::function<void(double, const Vec&)>;
void integrate_rk45(const Rhs& rhs, double t0, double t1, Vec& y, const IntegratorOptions& opts,
                    const Observer* observer = nullptr);

}  // namespace tcsim::lindblad
