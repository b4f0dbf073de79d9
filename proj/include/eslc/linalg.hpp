#pragma once

#include <Eigen/Dense>
#include <complex>

#include "eslc/errors.hpp"

namespace eslc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

/// Frobenius-norm tolerance used to certify unitarity of propagators.
inline constexpr double kUnitaryTol = 1e-10;

/// Entrywise tolerance for the Hermitian / skew-Hermitian predicates,
/// relative to max(1, max|A_ij|).
inline constexpr double kSymmetryTol = 1e-12;

bool is_hermitian(const ComplexMatrix& a, double tol = kSymmetryTol);
bool is_skew_hermitian(const ComplexMatrix& a, double tol = kSymmetryTol);

/// ||A'A - I||_F <= tol.
bool is_unitary(const ComplexMatrix& a, double tol = kUnitaryTol);

/// | ||psi|| - 1 | <= tol.
bool is_normalized(const StateVector& psi, double tol = 1e-10);

/// Matrix exponential e^A. Skew-Hermitian inputs (the propagation hot path)
/// are diagonalized through the Hermitian matrix iA and exponentiated on the
/// eigenvalues, which keeps the result unitary to round-off. Other inputs
/// fall back to scaling-and-squaring.
ComplexMatrix mat_exp(const ComplexMatrix& a);

/// <psi|phi>, conjugate-linear in the first argument.
Complex inner_product(const StateVector& psi, const StateVector& phi);

/// A * psi with an explicit dimension check.
StateVector apply(const ComplexMatrix& a, const StateVector& psi);

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& a);

/// A * B with an explicit dimension check.
ComplexMatrix mul(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace eslc
