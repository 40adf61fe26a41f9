#pragma once

#include <array>
#include <complex>

#include "entpot/linalg.hpp"

namespace entpot {

using linalg::cd;
using linalg::Matrix2;
using linalg::Matrix4;

/// Photon-number qubit sigma(p, x) = [[1-p, x], [conj(x), p]] in the
/// {|0>, |1>} Fock basis. `p` is the single-photon probability and `x` the
/// coherence; admissible iff |x|^2 <= p(1-p).
class SingleQubitState {
 public:
  /// Throws OutOfDomain if p is outside [0, 1] or |x|^2 > p(1-p) + 1e-12.
  SingleQubitState(double p, cd x);

  double p() const noexcept { return p_; }
  cd x() const noexcept { return x_; }
  double phi() const noexcept { return std::arg(x_); }
  bool is_vacuum() const noexcept { return p_ == 0.0; }
  Matrix2 matrix() const;

 private:
  double p_;
  cd x_;
};

/// A 4x4 density matrix in the basis |00>, |01>, |10>, |11> (mode 1 is the
/// left tensor factor).
class TwoQubitState {
 public:
  /// Validates Hermiticity (1e-10), trace (1e-10) and positivity (min
  /// eigenvalue >= -1e-10), then divides by the computed trace. Throws
  /// NotAState.
  explicit TwoQubitState(const Matrix4& m);

  const Matrix4& matrix() const noexcept { return m_; }

 private:
  Matrix4 m_;
};

/// Lossless beam splitter with angle theta in [0, pi]; t = cos(theta/2),
/// r = sin(theta/2). theta = pi/2 is the balanced splitter.
class BeamSplitterConfig {
 public:
  static BeamSplitterConfig balanced();
  static BeamSplitterConfig from_theta(double theta);
  /// theta such that sin^2(theta/2) = reflectivity.
  static BeamSplitterConfig from_reflectivity(double reflectivity);

  double theta() const noexcept { return theta_; }
  double t() const noexcept { return t_; }
  double r() const noexcept { return r_; }
  double transmissivity() const noexcept { return t_ * t_; }
  double reflectivity() const noexcept { return r_ * r_; }

 private:
  BeamSplitterConfig(double theta, double t, double r) : theta_(theta), t_(t), r_(r) {}
  double theta_;
  double t_;
  double r_;
};

/// rho_GH(p, q) = p |psi_q><psi_q| + (1-p) |00><00|.
struct GeneralizedHorodeckiParams {
  double p;
  double q;
};

/// Weights on |psi->, |psi+>, |phi->, |phi+> (in that order).
struct BellDiagonalWeights {
  std::array<double, 4> lambda;

  double max_weight() const;
};

SingleQubitState single_qubit(double p, cd x);
/// sqrt(1-p)|0> + e^{i phi} sqrt(p)|1>.
SingleQubitState pure_qubit(double p, double phi);

/// Balanced lossless beam splitter with vacuum in the second port.
TwoQubitState balanced_bs_output(const SingleQubitState& sigma);
TwoQubitState tunable_bs_output(const SingleQubitState& sigma, const BeamSplitterConfig& bs);

/// p |psi-><psi-| + (1-p) |00><00| with |psi-> = (|10> - |01>)/sqrt(2).
TwoQubitState horodecki_state(double p);
TwoQubitState generalized_horodecki(const GeneralizedHorodeckiParams& params);
TwoQubitState bell_diagonal(const BellDiagonalWeights& weights);
/// (1+2N)/3 |psi-><psi-| + (1-N)/6 I, parametrized by its negativity N.
TwoQubitState werner(double negativity);
/// sqrt(1-p)|00> + sqrt(p/2)(|10> - |01>).
TwoQubitState pure_output(double p);
/// sqrt(q)|01> + sqrt(1-q)|10>.
TwoQubitState psi_q_state(double q);

namespace bell {
/// Basis vectors beta_1..beta_4 = psi-, psi+, phi-, phi+.
Eigen::Vector4cd vector(int index);
}  // namespace bell

}  // namespace entpot
