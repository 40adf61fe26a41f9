#include "entpot/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "entpot/detail/checks.hpp"
#include "entpot/error.hpp"

namespace entpot {

namespace {

// Eigenvalues of rho below this are dropped when building the square-root
// factor for the concurrence; keeping round-off eigenvalues would inject
// sqrt(eps) noise into the singular values.
constexpr double kRankCutoff = 1e-14;

Matrix4 spin_flip() { return linalg::kron(linalg::pauli_y(), linalg::pauli_y()); }

double xlog2x(double x) { return x <= 0.0 ? 0.0 : x * std::log2(x); }

}  // namespace

double negativity(const TwoQubitState& rho) {
  const auto eig = linalg::hermitian_eig<4>(linalg::partial_transpose(rho.matrix()));
  return std::clamp(-2.0 * eig.values(0), 0.0, 1.0);
}

double concurrence(const Matrix4& rho) {
  const auto eig = linalg::hermitian_eig<4>(rho);
  if (eig.values(0) < -1e-8) {
    throw Error(ErrorCode::NonPhysicalSpectrum,
                "eigenvalue " + std::to_string(eig.values(0)) + " of rho");
  }
  // rho = W W^dagger; the lambda_j are the singular values of the complex
  // symmetric matrix W^T (Y x Y) W.
  int rank = 0;
  Eigen::Matrix<cd, 4, Eigen::Dynamic, 0, 4, 4> w(4, 4);
  for (int j = 0; j < 4; ++j) {
    if (eig.values(j) > kRankCutoff) w.col(rank++) = eig.vectors.col(j) * std::sqrt(eig.values(j));
  }
  if (rank == 0) return 0.0;
  w.conservativeResize(4, rank);
  const Eigen::MatrixXcd tau = w.transpose() * spin_flip() * w;
  const Eigen::VectorXd s = Eigen::JacobiSVD<Eigen::MatrixXcd>(tau).singularValues();
  double c = s(0);
  for (int j = 1; j < s.size(); ++j) c -= s(j);
  return std::clamp(c, 0.0, 1.0);
}

double concurrence(const TwoQubitState& rho) { return concurrence(rho.matrix()); }

double binary_entropy(double y) {
  detail::require_unit_interval("y", y);
  return -xlog2x(y) - xlog2x(1.0 - y);
}

double eof(double concurrence) {
  detail::require_unit_interval("C", concurrence);
  return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - concurrence * concurrence)));
}

double ree_closed_form(ReeFamily family, double parameter) {
  detail::require_unit_interval("parameter", parameter);
  switch (family) {
    case ReeFamily::Pure:
      return eof(parameter);
    case ReeFamily::Horodecki: {
      const double p = parameter;
      return std::max(0.0, (p - 2.0) * std::log2(1.0 - p / 2.0) + xlog2x(1.0 - p));
    }
    case ReeFamily::BellDiagonal:
      return 1.0 - binary_entropy((1.0 + parameter) / 2.0);
  }
  throw Error(ErrorCode::OutOfDomain, "unknown family");
}

MomentResidual negativity_moment_residual(const TwoQubitState& rho) {
  const Matrix4 pt = linalg::partial_transpose(rho.matrix());
  const Matrix4 pt2 = pt * pt;
  MomentResidual out;
  out.negativity = negativity(rho);
  out.pi2 = pt2.trace().real() - 1.0;
  out.pi3 = (pt2 * pt).trace().real() - 1.0;
  out.det = pt.determinant().real();
  const double n = out.negativity;
  out.residual = std::abs(48.0 * out.det + 3.0 * std::pow(n, 4) + 6.0 * std::pow(n, 3) -
                          6.0 * n * n * out.pi2 - 4.0 * n * (3.0 * out.pi2 - 2.0 * out.pi3));
  return out;
}

}  // namespace entpot
