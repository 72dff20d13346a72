#pragma once

#include <complex>

#include <Eigen/Dense>

#include "berry/errors.hpp"

namespace berry {

using Complex = std::complex<double>;

/// Dense complex matrix acting on a finite Hilbert space (row/column indices
/// are basis states). All operators in this library are small (dim <= ~64),
/// so everything is dense and eager.
using Operator = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Largest absolute entry of a matrix.
double maxnorm(const Operator& a);

/// Hermiticity within tol * max(1, maxnorm(a)).
bool is_hermitian(const Operator& a, double tol = 1e-12);

/// maxnorm(u^dag u - 1) <= tol.
bool is_unitary(const Operator& u, double tol = 1e-10);

/// Result of a Hermitian eigendecomposition. Eigenvalues ascending,
/// vectors.col(k) belongs to values[k], columns orthonormal. Degenerate
/// columns carry an arbitrary unitary mixing; callers must not assume a
/// gauge.
struct EigenSystem {
    Eigen::VectorXd values;
    Eigen::MatrixXcd vectors;

    Eigen::Index dim() const { return values.size(); }
};

/// Kronecker product, (a kron b)(x kron y) = (a x) kron (b y).
Operator kron(const Operator& a, const Operator& b);

/// Eigendecomposition of a Hermitian matrix.
/// Throws NotHermitian if the input fails the Hermiticity check and
/// ConvergenceFailure if the solver does not converge.
EigenSystem eig_hermitian(const Operator& h);

/// Exact single-step unitary propagator exp(-i h dt) in hbar = 1 units,
/// computed through the eigendecomposition of h.
Operator step_propagator(const Operator& h, double dt);

} // namespace berry
