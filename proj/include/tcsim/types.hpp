#pragma once

#include <Eigen/Dense>

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace tcsim {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

// All frequencies and rates are stored internally as angular frequencies
// (rad/s). Ordinary ("/2pi") frequencies appear only at I/O boundaries.
inline double hz_to_angular(double f) { return two_pi * f; }
inline double angular_to_hz(double w) { return w / two_pi; }

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Coupler inductance L_g0/|cos(pi*phi)| diverges at half a flux quantum.
struct DivergentCoupler : std::domain_error {
    using std::domain_error::domain_error;
};

// Thrown when the Liouvillian null space fails the uniqueness check.
struct DegenerateSteadyState : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Negative radicand in the number-splitting inversion.
struct InvalidDispersiveRegime : std::domain_error {
    using std::domain_error::domain_error;
};

struct StepSizeUnderflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace tcsim
