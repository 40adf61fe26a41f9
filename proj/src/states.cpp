#include "entpot/states.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "entpot/detail/checks.hpp"
#include "entpot/error.hpp"

namespace entpot {

using detail::require_unit_interval;

SingleQubitState::SingleQubitState(double p, cd x) : p_(p), x_(x) {
  require_unit_interval("p", p);
  if (!std::isfinite(x.real()) || !std::isfinite(x.imag()) ||
      std::norm(x) > p * (1.0 - p) + 1e-12) {
    throw Error(ErrorCode::OutOfDomain, "|x|^2 = " + std::to_string(std::norm(x)) +
                                            " exceeds p(1-p) = " + std::to_string(p * (1.0 - p)));
  }
}

Matrix2 SingleQubitState::matrix() const {
  Matrix2 m;
  m << 1.0 - p_, x_, std::conj(x_), p_;
  return m;
}

TwoQubitState::TwoQubitState(const Matrix4& m) {
  if (!m.allFinite()) throw Error(ErrorCode::NotAState, "non-finite entries");
  if (linalg::hermiticity_defect<4>(m) > linalg::kHermitianTol) {
    throw Error(ErrorCode::NotAState, "matrix is not Hermitian");
  }
  const double trace = m.trace().real();
  if (std::abs(trace - 1.0) > 1e-10) {
    throw Error(ErrorCode::NotAState, "trace " + std::to_string(trace) + " differs from 1");
  }
  m_ = 0.5 * (m + m.adjoint()) / trace;
  const double min_eig = linalg::hermitian_eig<4>(m_).values(0);
  if (min_eig < -linalg::kClipTol) {
    throw Error(ErrorCode::NotAState, "negative eigenvalue " + std::to_string(min_eig));
  }
}

BeamSplitterConfig BeamSplitterConfig::balanced() {
  return BeamSplitterConfig(std::numbers::pi / 2, std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2);
}

BeamSplitterConfig BeamSplitterConfig::from_theta(double theta) {
  detail::require_in_range("theta", theta, 0.0, std::numbers::pi);
  if (theta == std::numbers::pi / 2) return balanced();
  return BeamSplitterConfig(theta, std::cos(theta / 2), std::sin(theta / 2));
}

BeamSplitterConfig BeamSplitterConfig::from_reflectivity(double reflectivity) {
  require_unit_interval("reflectivity", reflectivity);
  const double r = std::sqrt(reflectivity);
  const double t = std::sqrt(1.0 - reflectivity);
  return BeamSplitterConfig(2.0 * std::atan2(r, t), t, r);
}

double BellDiagonalWeights::max_weight() const {
  double m = lambda[0];
  for (double l : lambda) m = std::max(m, l);
  return m;
}

SingleQubitState single_qubit(double p, cd x) { return SingleQubitState(p, x); }

SingleQubitState pure_qubit(double p, double phi) {
  require_unit_interval("p", p);
  if (!std::isfinite(phi)) throw Error(ErrorCode::OutOfDomain, "phase is not finite");
  return SingleQubitState(p, std::polar(std::sqrt(p * (1.0 - p)), phi));
}

TwoQubitState balanced_bs_output(const SingleQubitState& sigma) {
  const double p = sigma.p();
  const cd x = sigma.x() / std::numbers::sqrt2;
  const cd xc = std::conj(x);
  Matrix4 m;
  m << 1.0 - p, -x, x, 0.0,
       -xc, p / 2, -p / 2, 0.0,
       xc, -p / 2, p / 2, 0.0,
       0.0, 0.0, 0.0, 0.0;
  return TwoQubitState(m);
}

TwoQubitState tunable_bs_output(const SingleQubitState& sigma, const BeamSplitterConfig& bs) {
  const double p = sigma.p();
  const cd x = sigma.x();
  const cd xc = std::conj(x);
  const double t = bs.t();
  const double r = bs.r();
  Matrix4 m;
  m << 1.0 - p, -x * r, x * t, 0.0,
       -xc * r, p * r * r, -p * r * t, 0.0,
       xc * t, -p * r * t, p * t * t, 0.0,
       0.0, 0.0, 0.0, 0.0;
  return TwoQubitState(m);
}

TwoQubitState horodecki_state(double p) {
  require_unit_interval("p", p);
  return balanced_bs_output(SingleQubitState(p, 0.0));
}

TwoQubitState generalized_horodecki(const GeneralizedHorodeckiParams& params) {
  require_unit_interval("p", params.p);
  require_unit_interval("q", params.q);
  const Eigen::Vector4cd psi(0.0, std::sqrt(params.q), std::sqrt(1.0 - params.q), 0.0);
  Matrix4 m = params.p * psi * psi.adjoint();
  m(0, 0) += 1.0 - params.p;
  return TwoQubitState(m);
}

namespace bell {

Eigen::Vector4cd vector(int index) {
  const double s = std::numbers::sqrt2 / 2;
  switch (index) {
    case 0: return {0.0, -s, s, 0.0};  // psi-
    case 1: return {0.0, s, s, 0.0};   // psi+
    case 2: return {s, 0.0, 0.0, -s};  // phi-
    case 3: return {s, 0.0, 0.0, s};   // phi+
    default: throw Error(ErrorCode::OutOfDomain, "Bell index " + std::to_string(index));
  }
}

}  // namespace bell

TwoQubitState bell_diagonal(const BellDiagonalWeights& weights) {
  double sum = 0.0;
  for (double l : weights.lambda) {
    if (!std::isfinite(l) || l < 0.0) {
      throw Error(ErrorCode::OutOfDomain, "Bell weight " + std::to_string(l) + " is negative");
    }
    sum += l;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw Error(ErrorCode::OutOfDomain, "Bell weights sum to " + std::to_string(sum));
  }
  Matrix4 m = Matrix4::Zero();
  for (int i = 0; i < 4; ++i) {
    const Eigen::Vector4cd b = bell::vector(i);
    m += weights.lambda[i] * b * b.adjoint();
  }
  return TwoQubitState(m);
}

TwoQubitState werner(double negativity) {
  require_unit_interval("N", negativity);
  const Eigen::Vector4cd singlet = bell::vector(0);
  const Matrix4 m = (1.0 + 2.0 * negativity) / 3.0 * singlet * singlet.adjoint() +
                    (1.0 - negativity) / 6.0 * Matrix4::Identity();
  return TwoQubitState(m);
}

TwoQubitState pure_output(double p) {
  require_unit_interval("p", p);
  const double a = std::sqrt(p / 2);
  const Eigen::Vector4cd psi(std::sqrt(1.0 - p), -a, a, 0.0);
  return TwoQubitState(psi * psi.adjoint());
}

TwoQubitState psi_q_state(double q) { return generalized_horodecki({1.0, q}); }

}  // namespace entpot
