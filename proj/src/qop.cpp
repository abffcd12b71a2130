#include "tcsim/qop.hpp"

#include <cmath>

namespace tcsim::qop {

Mat identity(int dim) { return Mat::Identity(dim, dim); }

Mat destroy(int n_fock) {
    if (n_fock < 2) throw std::invalid_argument("Fock cutoff must be >= 2");
    Mat a = Mat::Zero(n_fock, n_fock);
    for (int n = 1; n < n_fock; ++n) a(n - 1, n) = std::sqrt(double(n));
    return a;
}

Mat create(int n_fock) { return destroy(n_fock).adjoint(); }

Mat number(int n_fock) {
    Mat n = Mat::Zero(n_fock, n_fock);
    for (int k = 0; k < n_fock; ++k) n(k, k) = double(k);
    return n;
}

Mat sigma_x() {
    Mat s(2, 2);
    s << 0, 1, 1, 0;
    return s;
}

Mat sigma_y() {
    Mat s(2, 2);
    s << 0, Complex(0, 1), Complex(0, -1), 0;
    return s;
}

Mat sigma_z() {
    Mat s(2, 2);
    s << -1, 0, 0, 1;
    return s;
}

Mat sigma_plus() {
    Mat s = Mat::Zero(2, 2);
    s(1, 0) = 1;
    return s;
}

Mat sigma_minus() {
    Mat s = Mat::Zero(2, 2);
    s(0, 1) = 1;
    return s;
}

Mat tensor(const Mat& a, const Mat& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols())
        throw DimensionMismatch("tensor: operands must be square");
    const Eigen::Index na = a.rows(), nb = b.rows();
    Mat out(na * nb, na * nb);
    for (Eigen::Index i = 0; i < na; ++i)
        for (Eigen::Index j = 0; j < na; ++j)
            out.block(i * nb, j * nb, nb, nb) = a(i, j) * b;
    return out;
}

Mat dag(const Mat& a) { return a.adjoint(); }

bool is_hermitian(const Mat& a, double rel_tol) {
    if (a.rows() != a.cols()) return false;
    const double scale = a.cwiseAbs().maxCoeff();
    if (scale == 0.0) return true;
    return (a - a.adjoint()).cwiseAbs().maxCoeff() <= rel_tol * scale;
}

Complex expect(const Mat& obs, const Mat& rho) {
    if (obs.rows() != rho.rows() || obs.cols() != rho.cols())
        throw DimensionMismatch("expect: operator/state dimension mismatch");
    return (obs * rho).trace();
}

EigResult eig_hermitian(const Mat& h) {
    if (!is_hermitian(h, 1e-10))
        throw std::invalid_argument("eig_hermitian: input is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Mat> solver(h);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eig_hermitian: eigensolver failed");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

Vec vectorize(const Mat& m) {
    return Eigen::Map<const Vec>(m.data(), m.size());
}

Mat unvectorize(const Vec& v, int dim) {
    if (v.size() != Eigen::Index(dim) * dim)
        throw DimensionMismatch("unvectorize: size mismatch");
    return Eigen::Map<const Mat>(v.data(), dim, dim);
}

Mat cavity_op(const Mat& op_cavity) { return tensor(identity(2), op_cavity); }

Mat qubit_op(const Mat& op_qubit, int n_fock) {
    return tensor(op_qubit, identity(n_fock));
}

Mat cavity_destroy(int n_fock) { return cavity_op(destroy(n_fock)); }

Vec qubit_cavity_ket(int q, int n, int n_fock) {
    if (q < 0 || q > 1 || n < 0 || n >= n_fock)
        throw std::invalid_argument("qubit_cavity_ket: index out of range");
    Vec ket = Vec::Zero(2 * n_fock);
    ket(q * n_fock + n) = 1.0;
    return ket;
}

Mat projector(const Vec& ket) { return ket * ket.adjoint(); }

Mat partial_trace_cavity(const Mat& rho, int n_fock) {
    if (rho.rows() != 2 * n_fock || rho.cols() != 2 * n_fock)
        throw DimensionMismatch("partial_trace_cavity: dimension mismatch");
    Mat rq = Mat::Zero(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int n = 0; n < n_fock; ++n) rq(i, j) += rho(i * n_fock + n, j * n_fock + n);
    return rq;
}

}  // namespace tcsim::qop
