#pragma once

#include "tcsim/types.hpp"

#include <vector>

namespace tcsim::qop {

// Dense operator algebra on the truncated space H = C^2 (qubit) x C^N
// (cavity Fock levels 0..N-1). Composite ordering is qubit-first:
// basis index = q*N + n. Qubit basis: index 0 = |g>, index 1 = |e>,
// sigma_z = diag(-1, +1) so that H_q = (omega_q/2) sigma_z puts |e>
// above |g>.

Mat identity(int dim);

// Cavity annihilation operator, a[n-1, n] = sqrt(n). Requires n_fock >= 2.
Mat destroy(int n_fock);
Mat create(int n_fock);
Mat number(int n_fock);

Mat sigma_x();
Mat sigma_y();
Mat sigma_z();
Mat sigma_plus();   // |e><g|
Mat sigma_minus();  // |g><e|

// Kronecker product, dim = dim(a) * dim(b).
Mat tensor(const Mat& a, const Mat& b);

Mat dag(const Mat& a);

bool is_hermitian(const Mat& a, double rel_tol = 1e-12);

// tr(obs * rho). Throws DimensionMismatch on shape mismatch.
Complex expect(const Mat& obs, const Mat& rho);

struct EigResult {
    Eigen::VectorXd values;  // ascending
    Mat vectors;             // columns are eigenvectors
};

// Diagonalizes a Hermitian-flagged operator. Throws on non-Hermitian input.
EigResult eig_hermitian(const Mat& h);

// Column-stacking vectorization (vec index = col*dim + row) and its inverse.
Vec vectorize(const Mat& m);
Mat unvectorize(const Vec& v, int dim);

// Composite-space helpers.
Mat cavity_op(const Mat& op_cavity);              // I_2 (x) op
Mat qubit_op(const Mat& op_qubit, int n_fock);    // op (x) I_N
Mat cavity_destroy(int n_fock);

Vec qubit_cavity_ket(int q, int n, int n_fock);
Mat projector(const Vec& ket);

// Reduced 2x2 qubit state, tracing out the cavity.
Mat partial_trace_cavity(const Mat& rho, int n_fock);

}  // namespace tcsim::qop
