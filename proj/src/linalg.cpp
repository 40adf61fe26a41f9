#include "entpot/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "entpot/error.hpp"

namespace entpot::linalg {

namespace {

constexpr double kLn2 = std::numbers::ln2;

template <int Dim>
void require_hermitian(const CMatrix<Dim>& m, const char* what) {
  if (!m.allFinite()) throw Error(ErrorCode::NotHermitian, std::string(what) + " has non-finite entries");
  const double defect = hermiticity_defect<Dim>(m);
  if (defect > kHermitianTol * std::max(1.0, m.cwiseAbs().maxCoeff())) {
    throw Error(ErrorCode::NotHermitian,
                std::string(what) + " violates Hermitian symmetry by " + std::to_string(defect));
  }
}

template <int Dim>
void require_state(const CMatrix<Dim>& rho, const RVector<Dim>& eigenvalues, const char* what) {
  const double trace = rho.trace().real();
  if (std::abs(trace - 1.0) > 1e-10) {
    throw Error(ErrorCode::NotAState, std::string(what) + " has trace " + std::to_string(trace));
  }
  if (eigenvalues.minCoeff() < -kClipTol) {
    throw Error(ErrorCode::NotAState,
                std::string(what) + " has eigenvalue " + std::to_string(eigenvalues.minCoeff()));
  }
}

double xlog2x(double x) { return x < kEntropyFloor ? 0.0 : x * std::log2(x); }

}  // namespace

template <int Dim>
HermitianEigen<Dim> hermitian_eig(const CMatrix<Dim>& m) {
  require_hermitian<Dim>(m, "matrix");
  const CMatrix<Dim> sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix<Dim>> solver(sym);
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Matrix4 partial_transpose(const Matrix4& rho, Subsystem subsystem) {
  Matrix4 out;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
          // rho^Gamma_{(ab),(cd)}
          out(2 * a + b, 2 * c + d) = subsystem == Subsystem::Second ? rho(2 * a + d, 2 * c + b)
                                                                     : rho(2 * c + b, 2 * a + d);
        }
  return out;
}

Eigen::MatrixXcd partial_transpose(const Eigen::MatrixXcd& rho, Subsystem subsystem) {
  if (rho.rows() != 4 || rho.cols() != 4) {
    throw Error(ErrorCode::WrongDimension, "partial transpose needs a 4x4 matrix, got " +
                                               std::to_string(rho.rows()) + "x" +
                                               std::to_string(rho.cols()));
  }
  return partial_transpose(Matrix4(rho), subsystem);
}

template <int Dim>
double von_neumann_entropy(const CMatrix<Dim>& rho) {
  const auto eig = hermitian_eig<Dim>(rho);
  require_state<Dim>(rho, eig.values, "state");
  double s = 0.0;
  for (int i = 0; i < Dim; ++i) s -= xlog2x(std::max(eig.values(i), 0.0));
  return std::max(s, 0.0);
}

template <int Dim>
double relative_entropy(const CMatrix<Dim>& rho, const CMatrix<Dim>& sigma) {
  const auto er = hermitian_eig<Dim>(rho);
  const auto es = hermitian_eig<Dim>(sigma);
  require_state<Dim>(rho, er.values, "rho");
  require_state<Dim>(sigma, es.values, "sigma");

  double s = 0.0;
  for (int i = 0; i < Dim; ++i) s += xlog2x(std::max(er.values(i), 0.0));
  for (int j = 0; j < Dim; ++j) {
    const auto v = es.vectors.col(j);
    const double weight = (v.adjoint() * rho * v)(0, 0).real();
    const double mu = es.values(j);
    if (mu < kEntropyFloor) {
      if (weight > 1e-12) {
        throw Error(ErrorCode::SupportViolation,
                    "rho has weight " + std::to_string(weight) + " outside the support of sigma");
      }
      continue;
    }
    s -= weight * std::log2(mu);
  }
  return std::max(s, 0.0);
}

double log_divided_difference(double a, double b) {
  const double d = a - b;
  const double scale = std::max(a, b);
  if (std::abs(d) <= 1e-12 * scale) return 2.0 / (a + b);
  return std::log1p(d / b) / d;
}

namespace {

template <int Dim>
RVector<Dim> floored_spectrum(const RVector<Dim>& values) {
  if (values.minCoeff() < -kClipTol) {
    throw Error(ErrorCode::SingularState,
                "eigenvalue " + std::to_string(values.minCoeff()) + " below the clipping window");
  }
  RVector<Dim> out = values;
  if (out.minCoeff() >= kLogFloor) return out;
  const double trace = values.sum();
  for (int i = 0; i < Dim; ++i) out(i) = std::max(out(i), kLogFloor);
  if (trace > 0.0) out *= trace / out.sum();
  return out.cwiseMax(kLogFloor);
}

}  // namespace

template <int Dim>
CMatrix<Dim> log_frechet_derivative(const CMatrix<Dim>& sigma, const CMatrix<Dim>& direction) {
  require_hermitian<Dim>(direction, "direction");
  const auto eig = hermitian_eig<Dim>(sigma);
  const RVector<Dim> lambda = floored_spectrum<Dim>(eig.values);

  CMatrix<Dim> h = eig.vectors.adjoint() * direction * eig.vectors;
  for (int i = 0; i < Dim; ++i)
    for (int j = 0; j < Dim; ++j) {
      const double coeff = std::abs(lambda(i) - lambda(j)) < 1e-12
                               ? 1.0 / lambda(i)
                               : log_divided_difference(lambda(i), lambda(j));
      h(i, j) *= coeff / kLn2;
    }
  return eig.vectors * h * eig.vectors.adjoint();
}

template <int Dim>
CMatrix<Dim> log2m(const CMatrix<Dim>& sigma) {
  const auto eig = hermitian_eig<Dim>(sigma);
  RVector<Dim> logs;
  for (int i = 0; i < Dim; ++i) logs(i) = std::log2(std::max(eig.values(i), kLogFloor));
  return eig.vectors * logs.template cast<cd>().asDiagonal() * eig.vectors.adjoint();
}

template <int Dim>
CMatrix<Dim> sqrtm_psd(const CMatrix<Dim>& m) {
  const auto eig = hermitian_eig<Dim>(m);
  RVector<Dim> roots;
  for (int i = 0; i < Dim; ++i) roots(i) = std::sqrt(std::max(eig.values(i), 0.0));
  return eig.vectors * roots.template cast<cd>().asDiagonal() * eig.vectors.adjoint();
}

Matrix2 pauli_x() {
  Matrix2 m;
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

Matrix2 pauli_y() {
  Matrix2 m;
  m << 0.0, cd(0.0, -1.0), cd(0.0, 1.0), 0.0;
  return m;
}

Matrix2 pauli_z() {
  Matrix2 m;
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

Matrix4 kron(const Matrix2& a, const Matrix2& b) {
  Matrix4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

template HermitianEigen<2> hermitian_eig<2>(const Matrix2&);
template HermitianEigen<4> hermitian_eig<4>(const Matrix4&);
template double von_neumann_entropy<2>(const Matrix2&);
template double von_neumann_entropy<4>(const Matrix4&);
template double relative_entropy<2>(const Matrix2&, const Matrix2&);
template double relative_entropy<4>(const Matrix4&, const Matrix4&);
template Matrix2 log_frechet_derivative<2>(const Matrix2&, const Matrix2&);
template Matrix4 log_frechet_derivative<4>(const Matrix4&, const Matrix4&);
template Matrix2 log2m<2>(const Matrix2&);
template Matrix4 log2m<4>(const Matrix4&);
template Matrix2 sqrtm_psd<2>(const Matrix2&);
template Matrix4 sqrtm_psd<4>(const Matrix4&);

}  // namespace entpot::linalg
