#include "eslc/linalg.hpp"

#include <unsupported/Eigen/MatrixFunctions>

namespace eslc {

namespace {

void require_square(const ComplexMatrix& a, const char* who) {
    if (a.rows() != a.cols() || a.rows() < 1) {
        throw DimensionError(std::string(who) + ": matrix must be square, got " +
                             std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    }
}

double symmetry_scale(const ComplexMatrix& a) {
    return std::max(1.0, a.cwiseAbs().maxCoeff());
}

}  // namespace

bool is_hermitian(const ComplexMatrix& a, double tol) {
    if (a.rows() != a.cols()) return false;
    return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol * symmetry_scale(a);
}

bool is_skew_hermitian(const ComplexMatrix& a, double tol) {
    if (a.rows() != a.cols()) return false;
    return (a + a.adjoint()).cwiseAbs().maxCoeff() <= tol * symmetry_scale(a);
}

bool is_unitary(const ComplexMatrix& a, double tol) {
    if (a.rows() != a.cols()) return false;
    ComplexMatrix residual = a.adjoint() * a;
    residual -= ComplexMatrix::Identity(a.rows(), a.cols());
    return residual.norm() <= tol;
}

bool is_normalized(const StateVector& psi, double tol) {
    return std::abs(psi.norm() - 1.0) <= tol;
}

ComplexMatrix mat_exp(const ComplexMatrix& a) {
    require_square(a, "mat_exp");
    if (is_skew_hermitian(a)) {
        // A = -i(iA) with iA Hermitian: exp(A) = V diag(e^{-i lambda}) V'.
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(Complex(0, 1) * a);
        if (es.info() != Eigen::Success) {
            throw Error("mat_exp: eigendecomposition failed");
        }
        Eigen::ArrayXcd phases =
            (Complex(0, -1) * es.eigenvalues().cast<Complex>().array()).exp();
        return es.eigenvectors() * phases.matrix().asDiagonal() *
               es.eigenvectors().adjoint();
    }
    return a.exp();
}

Complex inner_product(const StateVector& psi, const StateVector& phi) {
    if (psi.size() != phi.size()) {
        throw DimensionError("inner_product: size mismatch, " +
                             std::to_string(psi.size()) + " vs " +
                             std::to_string(phi.size()));
    }
    return psi.dot(phi);  // Eigen's dot conjugates the first argument
}

StateVector apply(const ComplexMatrix& a, const StateVector& psi) {
    if (a.cols() != psi.size()) {
        throw DimensionError("apply: matrix is " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + ", vector has length " +
                             std::to_string(psi.size()));
    }
    return a * psi;
}

ComplexMatrix adjoint(const ComplexMatrix& a) { return a.adjoint(); }

ComplexMatrix mul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("mul: inner dimensions differ, " +
                             std::to_string(a.cols()) + " vs " +
                             std::to_string(b.rows()));
    }
    return a * b;
}

}  // namespace eslc
