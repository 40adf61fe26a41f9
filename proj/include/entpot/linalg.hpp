#pragma once

#include <complex>

#include <Eigen/Dense>

#include "entpot/error.hpp"

namespace entpot::linalg {

using cd = std::complex<double>;

/// Fixed-size complex matrix. Only 2x2 (qubit) and 4x4 (two-qubit) are
/// instantiated.
template <int Dim>
using CMatrix = Eigen::Matrix<cd, Dim, Dim>;
template <int Dim>
using RVector = Eigen::Matrix<double, Dim, 1>;

using Matrix2 = CMatrix<2>;
using Matrix4 = CMatrix<4>;

/// Elementwise tolerance used for the Hermiticity precondition.
inline constexpr double kHermitianTol = 1e-10;
/// Eigenvalues in [-kClipTol, 0] are treated as zero for PSD and entropy
/// purposes; anything more negative is an error.
inline constexpr double kClipTol = 1e-10;
/// Eigenvalues below this contribute nothing to entropies (0 log 0 := 0).
inline constexpr double kEntropyFloor = 1e-15;
/// Spectral floor for matrix logarithms of states.
inline constexpr double kLogFloor = 1e-12;

template <int Dim>
struct HermitianEigen {
  RVector<Dim> values;   // ascending
  CMatrix<Dim> vectors;  // orthonormal columns, paired with values

  CMatrix<Dim> reconstruct() const {
    return vectors * values.template cast<cd>().asDiagonal() * vectors.adjoint();
  }
};

enum class Subsystem { First, Second };

template <int Dim>
double hermiticity_defect(const CMatrix<Dim>& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

/// Throws NotHermitian when any |M_ij - conj(M_ji)| exceeds kHermitianTol.
template <int Dim>
HermitianEigen<Dim> hermitian_eig(const CMatrix<Dim>& m);

Matrix4 partial_transpose(const Matrix4& rho, Subsystem subsystem = Subsystem::Second);
/// Checked variant for matrices of runtime size; throws WrongDimension
/// unless the input is 4x4.
Eigen::MatrixXcd partial_transpose(const Eigen::MatrixXcd& rho,
                                   Subsystem subsystem = Subsystem::Second);

/// Von Neumann entropy in bits. Throws NotAState if the trace is off by more
/// than 1e-10 or an eigenvalue is below -kClipTol.
template <int Dim>
double von_neumann_entropy(const CMatrix<Dim>& rho);

/// S(rho || sigma) = Tr(rho log2 rho - rho log2 sigma) in bits. Throws
/// SupportViolation when rho has weight outside the support of sigma.
template <int Dim>
double relative_entropy(const CMatrix<Dim>& rho, const CMatrix<Dim>& sigma);

/// Frechet derivative of log2 at sigma along `direction`, computed with the
/// Daleckii-Krein divided differences in the eigenbasis of sigma.
/// Eigenvalues in [-kClipTol, kLogFloor) are clipped up to kLogFloor and the
/// spectrum renormalized to the original trace; more negative eigenvalues
/// raise SingularState.
template <int Dim>
CMatrix<Dim> log_frechet_derivative(const CMatrix<Dim>& sigma, const CMatrix<Dim>& direction);

/// First divided difference of the natural log, stable for a close to b.
double log_divided_difference(double a, double b);

/// Matrix log2 of a positive definite Hermitian matrix (eigenvalues are
/// floored at kLogFloor).
template <int Dim>
CMatrix<Dim> log2m(const CMatrix<Dim>& sigma);

/// Matrix square root of a PSD Hermitian matrix (negative round-off clipped).
template <int Dim>
CMatrix<Dim> sqrtm_psd(const CMatrix<Dim>& m);

Matrix2 pauli_x();
Matrix2 pauli_y();
Matrix2 pauli_z();
Matrix4 kron(const Matrix2& a, const Matrix2& b);

}  // namespace entpot::linalg
