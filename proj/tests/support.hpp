#pragma once

// Independent reference computations used as test oracles. They avoid the
// library's own kernels: partial transposes are done by index shuffling,
// spectra with Eigen's general complex solver, Kraus maps with explicit sums.

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "entpot/states.hpp"

namespace oracle {

using cd = std::complex<double>;
using M4 = Eigen::Matrix4cd;
using M2 = Eigen::Matrix2cd;

inline double log2_safe(double v) { return v > 0.0 ? std::log2(v) : 0.0; }

inline double h(double y) { return -y * log2_safe(y) - (1.0 - y) * log2_safe(1.0 - y); }

inline M4 partial_transpose_second(const M4& rho) {
  M4 out;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) out(2 * a + b, 2 * c + d) = rho(2 * a + d, 2 * c + b);
  return out;
}

inline std::vector<double> real_spectrum(const M4& m) {
  Eigen::ComplexEigenSolver<M4> es(m);
  std::vector<double> v;
  for (int i = 0; i < 4; ++i) v.push_back(es.eigenvalues()(i).real());
  std::sort(v.begin(), v.end());
  return v;
}

inline double negativity(const M4& rho) {
  return std::max(0.0, -2.0 * real_spectrum(partial_transpose_second(rho)).front());
}

// Wootters' definition through the non-Hermitian product rho Y rho* Y.
inline double concurrence(const M4& rho) {
  M4 yy = M4::Zero();
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  const M4 r = rho * yy * rho.conjugate() * yy;
  std::vector<double> lam = real_spectrum(r);
  for (double& l : lam) l = std::sqrt(std::max(0.0, l));
  std::sort(lam.rbegin(), lam.rend());
  return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

inline M2 kraus_pd(double kappa, int k) {
  M2 e = M2::Zero();
  if (k == 0) {
    e(0, 0) = 1.0;
    e(1, 1) = std::sqrt(1.0 - kappa);
  } else {
    e(1, 1) = std::sqrt(kappa);
  }
  return e;
}

inline M2 kraus_ad(double gamma, int k) {
  M2 e = M2::Zero();
  if (k == 0) {
    e(0, 0) = 1.0;
    e(1, 1) = std::sqrt(1.0 - gamma);
  } else {
    e(0, 1) = std::sqrt(gamma);
  }
  return e;
}

inline M4 tensor(const M2& a, const M2& b) {
  M4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

template <class Kraus>
M4 local_channel(const M4& rho, double c1, double c2, Kraus kraus) {
  M4 out = M4::Zero();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const M4 k = tensor(kraus(c1, i), kraus(c2, j));
      out += k * rho * k.adjoint();
    }
  return out;
}

inline M4 projector(const Eigen::Vector4cd& v) { return v * v.adjoint(); }

inline Eigen::Vector4cd psi_q(double q) {
  Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
  v(1) = std::sqrt(q);
  v(2) = std::sqrt(1.0 - q);
  return v;
}

// Ginibre-distributed full-rank density matrix.
inline M4 random_density(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  M4 a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a(i, j) = cd(g(rng), g(rng));
  M4 rho = a * a.adjoint();
  return rho / rho.trace().real();
}

inline M4 random_hermitian(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  M4 a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a(i, j) = cd(g(rng), g(rng));
  return 0.5 * (a + a.adjoint());
}

inline M2 random_unitary(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  cd a(g(rng), g(rng)), b(g(rng), g(rng));
  const double n = std::sqrt(std::norm(a) + std::norm(b));
  a /= n;
  b /= n;
  const cd phase = std::polar(1.0, std::uniform_real_distribution<double>(0, 6.283185307179586)(rng));
  M2 u;
  u << a, -std::conj(b), b, std::conj(a);
  return phase * u;
}

// Closed-form REE of the three solvable families.
inline double ree_pure(double n) { return h(0.5 * (1.0 + std::sqrt(1.0 - n * n))); }
inline double ree_horodecki(double p) {
  return (p - 2.0) * log2_safe(1.0 - p / 2.0) + (1.0 - p) * log2_safe(1.0 - p);
}
inline double ree_bell(double n) { return 1.0 - h(0.5 * (1.0 + n)); }

inline double max_abs(const M4& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace oracle
