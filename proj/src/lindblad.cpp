#include "tcsim/lindblad.hpp"

#include "tcsim/qop.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace tcsim::lindblad {

Liouvillian build_liouvillian(const Mat& h, const std::vector<CollapseOp>& collapse) {
    const int d = int(h.rows());
    if (h.cols() != d) throw DimensionMismatch("build_liouvillian: H must be square");
    const Mat id = Mat::Identity(d, d);
    const Complex i_unit(0, 1);

    // vec(A rho B) = (B^T (x) A) vec(rho) for column stacking.
    Mat liou = -i_unit * (qop::tensor(id, h) - qop::tensor(h.transpose(), id));
    for (const auto& c : collapse) {
        if (c.op.rows() != d || c.op.cols() != d)
            throw DimensionMismatch("build_liouvillian: collapse operator dimension mismatch");
        if (c.rate < 0) throw std::invalid_argument("build_liouvillian: negative rate");
        if (c.rate == 0) continue;
        const Mat cdc = c.op.adjoint() * c.op;
        liou += c.rate * (qop::tensor(c.op.conjugate(), c.op) -
                          0.5 * qop::tensor(id, cdc) - 0.5 * qop::tensor(cdc.transpose(), id));
    }
    return {d, std::move(liou)};
}

DensityMatrix density_from_ket(const Vec& ket) {
    const double norm = ket.norm();
    if (norm == 0) throw std::invalid_argument("density_from_ket: zero vector");
    Vec k = ket / norm;
    return {k * k.adjoint(), 0.0};
}

void validate_density(const Mat& rho, double trace_tol, double herm_tol, double psd_tol) {
    if (std::abs(rho.trace().real() - 1.0) > trace_tol || std::abs(rho.trace().imag()) > trace_tol)
        throw std::runtime_error("density matrix trace deviates from 1");
    const double scale = std::max(1.0, rho.cwiseAbs().maxCoeff());
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > herm_tol * scale)
        throw std::runtime_error("density matrix is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (rho + rho.adjoint()));
    if (es.eigenvalues().minCoeff() < -psd_tol)
        throw std::runtime_error("density matrix has a negative eigenvalue");
}

DensityMatrix steady_state(const Liouvillian& liou, const SteadyStateOptions& opts) {
    const int d = liou.hilbert_dim;
    const int n = liou.superop_dim();

    if (opts.check_uniqueness) {
        Eigen::ComplexEigenSolver<Mat> es(liou.matrix, /*computeEigenvectors=*/false);
        if (es.info() != Eigen::Success)
            throw std::runtime_error("steady_state: eigenvalue computation failed");
        std::vector<double> re(n);
        for (int k = 0; k < n; ++k) re[k] = std::abs(es.eigenvalues()(k).real());
        std::sort(re.begin(), re.end());
        if (n > 1 && !(re[1] > opts.uniqueness_factor * re[0]))
            throw DegenerateSteadyState("steady_state: zero eigenvalue is not isolated");
    }

    // Bordered least-squares system [L; tr] x = [0; 1].
    Mat m(n + 1, n);
    m.topRows(n) = liou.matrix;
    Vec tr_row = qop::vectorize(Mat::Identity(d, d));
    m.row(n) = tr_row.adjoint();
    Vec rhs = Vec::Zero(n + 1);
    rhs(n) = 1.0;
    Vec x = m.colPivHouseholderQr().solve(rhs);

    const double lnorm = liou.matrix.norm();
    const double residual = (liou.matrix * x).norm();
    if (lnorm > 0 && residual > opts.residual_tol * lnorm)
        throw std::runtime_error("steady_state: residual exceeds tolerance");

    Mat rho = qop::unvectorize(x, d);
    rho = 0.5 * (rho + rho.adjoint());
    rho /= rho.trace().real();
    return {std::move(rho), 0.0};
}

namespace {

// Dormand-Prince 5(4) coefficients.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                 e4 = 125.0 / 192 - 393.0 / 640, e5 = -2187.0 / 6784 + 92097.0 / 339200,
                 e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

}  // namespace

void integrate_rk45(const Rhs& rhs, double t0, double t1, Vec& y, const IntegratorOptions& opts,
                    const Observer* observer) {
    if (t1 < t0) throw std::invalid_argument("integrate_rk45: t1 < t0");
    if (t1 == t0) return;

    const Eigen::Index n = y.size();
    Vec k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), ytmp(n), y5(n), err(n);

    double t = t0;
    rhs(t, y, k1);
    double h = (opts.max_step > 0) ? std::min(opts.max_step, (t1 - t0) / 10)
                                   : (t1 - t0) / 100;
    const double h_floor = 1e-14 * std::max(std::abs(t1), std::abs(t1 - t0));
    bool first_same_as_last = false;

    while (t < t1) {
        if (h < h_floor) throw StepSizeUnderflow("integrate_rk45: step size underflow");
        bool clipped = false;
        if (t + h >= t1) {
            h = t1 - t;
            clipped = true;
        }

        if (first_same_as_last) {
            // k1 already holds f(t, y) from the previous step's k7
        } else {
            rhs(t, y, k1);
        }
        ytmp = y + h * (a21 * k1);
        rhs(t + c2 * h, ytmp, k2);
        ytmp = y + h * (a31 * k1 + a32 * k2);
        rhs(t + c3 * h, ytmp, k3);
        ytmp = y + h * (a41 * k1 + a42 * k2 + a43 * k3);
        rhs(t + c4 * h, ytmp, k4);
        ytmp = y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4);
        rhs(t + c5 * h, ytmp, k5);
        ytmp = y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
        rhs(t + h, ytmp, k6);
        y5 = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        rhs(t + h, y5, k7);
        err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

        // RMS error norm against atol + rtol*|y|.
        double acc = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            const double sc = opts.atol +
                              opts.rtol * std::max(std::abs(y(i)), std::abs(y5(i)));
            const double e = std::abs(err(i)) / sc;
            acc += e * e;
        }
        const double enorm = std::sqrt(acc / double(n));

        if (enorm <= 1.0) {
            t = clipped ? t1 : t + h;
            y.swap(y5);
            k1.swap(k7);
            first_same_as_last = true;
            if (observer) (*observer)(t, y);
        } else {
            first_same_as_last = false;
        }
        double factor = 0.9 * std::pow(std::max(enorm, 1e-10), -0.2);
        factor = std::clamp(factor, 0.2, 5.0);
        h *= factor;
        if (opts.max_step > 0) h = std::min(h, opts.max_step);
    }
}

EvolutionResult propagate(const Liouvillian& liou, const DensityMatrix& rho0,
                          const std::vector<double>& times, const IntegratorOptions& opts) {
    const int d = liou.hilbert_dim;
    if (rho0.rho.rows() != d || rho0.rho.cols() != d)
        throw DimensionMismatch("propagate: state dimension mismatch");
    if (!std::is_sorted(times.begin(), times.end()) || (!times.empty() && times.front() < 0))
        throw std::invalid_argument("propagate: times must be sorted and nonnegative");
    const int n_fock = d / 2;

    const Mat n_op = qop::cavity_op(qop::number(n_fock));
    const double tr0 = rho0.rho.trace().real();

    EvolutionResult res;
    Vec y = qop::vectorize(rho0.rho);
    auto rhs = [&liou](double, const Vec& v, Vec& dv) { dv.noalias() = liou.matrix * v; };

    double t = 0.0;
    for (double target : times) {
        if (target > t) {
            integrate_rk45(rhs, t, target, y, opts);
            t = target;
        }
        Mat rho = qop::unvectorize(y, d);
        const double drift = std::abs(rho.trace().real() - tr0);
        if (drift > 1e-7) throw std::runtime_error("propagate: trace drift exceeds 1e-7");
        const BlochVector b = bloch_vector(rho);
        res.times.push_back(t);
        res.bloch.push_back({b.x, b.y, b.z});
        res.n_photon.push_back(qop::expect(n_op, rho).real());
        res.populations.push_back(rho.diagonal().real());
        res.final_state = std::move(rho);
    }
    return res;
}

BlochVector bloch_vector(const Mat& rho) {
    const int n_fock = int(rho.rows()) / 2;
    const Mat rq = qop::partial_trace_cavity(rho, n_fock);
    BlochVector b;
    b.x = (qop::sigma_x() * rq).trace().real();
    b.y = (qop::sigma_y() * rq).trace().real();
    b.z = (qop::sigma_z() * rq).trace().real();
    b.purity = std::sqrt(b.x * b.x + b.y * b.y + b.z * b.z);
    return b;
}

double stabilization_angle(const BlochVector& b) {
    if (b.purity == 0) return 0.0;
    return std::acos(std::clamp(-b.z / b.purity, -1.0, 1.0));
}

}  // namespace tcsim::lindblad
