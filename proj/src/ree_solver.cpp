#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>

#include "entpot/linalg.hpp"
#include "entpot/measures.hpp"

namespace entpot {

namespace {

using linalg::cd;
using Coords = Eigen::Matrix<double, 15, 1>;
using Hessian = Eigen::Matrix<double, 15, 15>;

constexpr int kCoords = 15;
constexpr double kBarrierStart = 0.1;
constexpr double kBarrierShrink = 0.1;
// Number of eigenvalues fenced by the barrier (4 for sigma, 4 for sigma^Gamma).
constexpr double kBarrierDegree = 8.0;
constexpr double kArmijo = 0.25;
// Newton steps allowed per barrier stage before moving on.
constexpr int kStageSteps = 60;

/// Traceless orthonormal Pauli products (P_i x P_j) / 2 and the sign each
/// picks up under partial transposition of the second qubit.
struct PauliBasis {
  std::array<Matrix4, kCoords> element;
  std::array<double, kCoords> transpose_sign;

  PauliBasis() {
    const std::array<Matrix2, 4> paulis{Matrix2::Identity(), linalg::pauli_x(),
                                        linalg::pauli_y(), linalg::pauli_z()};
    int k = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        if (i == 0 && j == 0) continue;
        element[k] = linalg::kron(paulis[i], paulis[j]) / 2.0;
        transpose_sign[k] = j == 2 ? -1.0 : 1.0;
        ++k;
      }
  }
};

const PauliBasis& basis() {
  static const PauliBasis b;
  return b;
}

Matrix4 assemble(const Coords& a, bool transposed) {
  const auto& b = basis();
  Matrix4 m = Matrix4::Identity() / 4.0;
  for (int k = 0; k < kCoords; ++k) {
    m += (transposed ? b.transpose_sign[k] : 1.0) * a(k) * b.element[k];
  }
  return m;
}

Coords coordinates_of(const Matrix4& sigma) {
  const auto& b = basis();
  Coords a;
  for (int k = 0; k < kCoords; ++k) a(k) = (sigma * b.element[k]).trace().real();
  return a;
}

double second_divided_difference(double a, double b, double c) {
  const double lo = std::min({a, b, c});
  const double hi = std::max({a, b, c});
  const double mid = a + b + c - lo - hi;
  if (hi - lo <= 1e-6 * hi) return -0.5 / (mid * mid);
  return (linalg::log_divided_difference(hi, mid) - linalg::log_divided_difference(mid, lo)) /
         (hi - lo);
}

class BarrierProblem {
 public:
  explicit BarrierProblem(const Matrix4& rho) : rho_(rho) {}

  /// Barrier objective in nats, or nullopt outside the open feasible set.
  std::optional<double> value(const Coords& a, double mu) const {
    Eigen::SelfAdjointEigenSolver<Matrix4> es(assemble(a, false));
    Eigen::SelfAdjointEigenSolver<Matrix4> et(assemble(a, true));
    if (!(es.eigenvalues()(0) > 0.0) || !(et.eigenvalues()(0) > 0.0)) return std::nullopt;
    const Matrix4 r = es.eigenvectors().adjoint() * rho_ * es.eigenvectors();
    double f = 0.0;
    double logdet = 0.0;
    for (int i = 0; i < 4; ++i) {
      f -= r(i, i).real() * std::log(es.eigenvalues()(i));
      logdet += std::log(es.eigenvalues()(i)) + std::log(et.eigenvalues()(i));
    }
    return f - mu * logdet;
  }

  /// Gradient and Hessian of the barrier objective at a feasible point.
  void derivatives(const Coords& a, double mu, Coords& grad, Hessian& hess) const {
    const auto& b = basis();
    const Matrix4 sigma = assemble(a, false);
    const Matrix4 sigma_pt = assemble(a, true);
    Eigen::SelfAdjointEigenSolver<Matrix4> es(sigma);
    const Matrix4& v = es.eigenvectors();
    const Eigen::Vector4d& lam = es.eigenvalues();
    const Matrix4 inv = sigma.inverse();
    const Matrix4 inv_pt = sigma_pt.inverse();
    const Matrix4 r = v.adjoint() * rho_ * v;

    double f1[4][4];
    double f2[4][4][4];
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        f1[i][j] = linalg::log_divided_difference(lam(i), lam(j));
        for (int m = 0; m < 4; ++m) f2[i][m][j] = second_divided_difference(lam(i), lam(m), lam(j));
      }

    // Frechet derivative of ln at sigma along rho, in sigma's eigenbasis.
    Matrix4 dlog = r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) dlog(i, j) *= f1[i][j];

    std::array<Matrix4, kCoords> rotated;  // V^dagger B_k V
    std::array<Matrix4, kCoords> z;        // contraction of rho with f2 and B_k
    std::array<Matrix4, kCoords> inv_b;
    std::array<Matrix4, kCoords> inv_pt_b;
    for (int k = 0; k < kCoords; ++k) {
      rotated[k] = v.adjoint() * b.element[k] * v;
      inv_b[k] = inv * b.element[k];
      inv_pt_b[k] = b.transpose_sign[k] * (inv_pt * b.element[k]);
      for (int m = 0; m < 4; ++m)
        for (int j = 0; j < 4; ++j) {
          cd acc = 0.0;
          for (int i = 0; i < 4; ++i) acc += r(j, i) * f2[i][m][j] * rotated[k](i, m);
          z[k](m, j) = acc;
        }
      grad(k) = -(dlog.cwiseProduct(rotated[k].transpose())).sum().real() -
                mu * (inv_b[k].trace().real() + inv_pt_b[k].trace().real());
    }
    for (int k = 0; k < kCoords; ++k)
      for (int l = k; l < kCoords; ++l) {
        const double curvature =
            -(rotated[l].cwiseProduct(z[k]).sum() + rotated[k].cwiseProduct(z[l]).sum()).real();
        const double barrier = (inv_b[k].cwiseProduct(inv_b[l].transpose())).sum().real() +
                               (inv_pt_b[k].cwiseProduct(inv_pt_b[l].transpose())).sum().real();
        hess(k, l) = hess(l, k) = curvature + mu * barrier;
      }
  }

 private:
  Matrix4 rho_;
};

}  // namespace

ReeResult ree_numerical(const TwoQubitState& rho, const ReeOptions& options) {
  const auto pt_eig = linalg::hermitian_eig<4>(linalg::partial_transpose(rho.matrix()));
  if (pt_eig.values(0) >= -1e-12) return ReeResult{0.0, rho, 0, true, 0.0};

  const BarrierProblem problem(rho.matrix());
  const double tol = std::max(options.tol, 1e-13);
  const double mu_final = tol * std::numbers::ln2 / kBarrierDegree;

  Coords a = coordinates_of(Matrix4::Identity() / 4.0);
  double mu = kBarrierStart;
  int iterations = 0;
  double step_norm = 0.0;
  bool converged = false;
  Coords grad;
  Hessian hess;

  while (iterations < options.max_iter) {
    // Centering: damped Newton on the barrier objective at fixed mu.
    const double centering_tol = std::min(1e-2 * mu, 1e-6);
    bool centered = false;
    for (int stage_step = 0; iterations < options.max_iter; ++stage_step) {
      if (stage_step == kStageSteps) {
        centered = true;
        break;
      }
      ++iterations;
      problem.derivatives(a, mu, grad, hess);
      const Coords dir = hess.ldlt().solve(-grad);
      const double decrement = -grad.dot(dir);
      if (!std::isfinite(decrement) || decrement <= 0.0) {
        centered = true;
        break;
      }
      if (decrement / 2.0 <= centering_tol) {
        centered = true;
        break;
      }
      const double current = *problem.value(a, mu);
      double t = 1.0;
      bool accepted = false;
      double gain = 0.0;
      while (t > 1e-14) {
        const auto trial = problem.value(a + t * dir, mu);
        if (trial && *trial <= current - kArmijo * t * decrement) {
          accepted = true;
          gain = current - *trial;
          break;
        }
        t *= 0.5;
      }
      if (accepted && gain <= 1e-15 * std::max(1.0, std::abs(current))) {
        // Progress below rounding level: take the step and stop centering.
        a += t * dir;
        step_norm = t * dir.norm();
        centered = true;
        break;
      }
      if (!accepted) {
        // No progress possible at this precision; treat as centered.
        centered = true;
        break;
      }
      a += t * dir;
      step_norm = t * dir.norm();
    }
    if (!centered) break;
    if (mu <= mu_final) {
      converged = true;
      break;
    }
    mu = std::max(mu * kBarrierShrink, mu_final);
  }

  const TwoQubitState css(assemble(a, false));
  // Two-qubit REE never exceeds one bit, so clipping keeps an upper bound.
  const double value = std::min(1.0, linalg::relative_entropy<4>(rho.matrix(), css.matrix()));
  return ReeResult{value, css, iterations, converged, step_norm};
}

}  // namespace entpot
