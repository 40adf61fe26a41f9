#include <doctest.h>

#include <numbers>

#include "entpot/linalg.hpp"
#include "entpot/measures.hpp"
#include "entpot/states.hpp"
#include "support.hpp"

using namespace entpot;

namespace {

Matrix4 outer(const Eigen::Vector4cd& v) { return v * v.adjoint(); }

void check_valid(const TwoQubitState& s) {
  const Matrix4& m = s.matrix();
  CHECK(linalg::hermiticity_defect<4>(m) <= 1e-10);
  CHECK(std::abs(m.trace().real() - 1.0) <= 1e-10);
  CHECK(oracle::real_spectrum(m).front() >= -1e-10);
}

}  // namespace

TEST_SUITE("states") {

TEST_CASE("single_qubit validation") {
  CHECK(single_qubit(0.0, 0.0).is_vacuum());
  const auto photon = single_qubit(1.0, 0.0);
  CHECK(photon.p() == 1.0);
  CHECK(!photon.is_vacuum());
  try {
    single_qubit(0.5, 0.6);
    FAIL("expected OutOfDomain");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfDomain);
  }
  CHECK_THROWS_AS(single_qubit(1.2, 0.0), Error);
  CHECK_THROWS_AS(single_qubit(-0.1, 0.0), Error);
  // Stored exactly as given.
  const auto s = single_qubit(0.3, cd(0.1, -0.2));
  CHECK(s.x() == cd(0.1, -0.2));
  CHECK(s.matrix()(0, 1) == cd(0.1, -0.2));
  CHECK(s.matrix()(1, 0) == cd(0.1, 0.2));
}

TEST_CASE("pure_qubit") {
  CHECK(std::abs(pure_qubit(0.5, 0.0).x() - cd(0.5, 0.0)) < 1e-15);
  CHECK(std::abs(pure_qubit(1.0, 2.0).x()) < 1e-15);
  CHECK(std::abs(pure_qubit(0.3, std::numbers::pi).x() - cd(-std::sqrt(0.21), 0.0)) < 1e-15);
  CHECK(pure_qubit(0.3, std::numbers::pi).x().real() == doctest::Approx(-0.45826).epsilon(1e-4));
  CHECK_THROWS_AS(pure_qubit(1.5, 0.0), Error);
}

TEST_CASE("balanced_bs_output matches the explicit matrix") {
  const double p = 0.6;
  const cd x(0.2, 0.3);
  const double s = 1.0 / std::sqrt(2.0);
  Matrix4 expected;
  expected << 1.0 - p, -x * s, x * s, 0.0,
      -std::conj(x) * s, p / 2.0, -p / 2.0, 0.0,
      std::conj(x) * s, -p / 2.0, p / 2.0, 0.0,
      0.0, 0.0, 0.0, 0.0;
  CHECK(oracle::max_abs(balanced_bs_output(single_qubit(p, x)).matrix() - expected) < 1e-15);
}

TEST_CASE("balanced_bs_output examples") {
  CHECK(oracle::max_abs(balanced_bs_output(single_qubit(1.0, 0.0)).matrix() -
                        outer(bell::vector(0))) < 1e-15);
  Matrix4 vac = Matrix4::Zero();
  vac(0, 0) = 1.0;
  CHECK(oracle::max_abs(balanced_bs_output(single_qubit(0.0, 0.0)).matrix() - vac) == 0.0);

  const double p = 0.5;
  Eigen::Vector4cd psi(std::sqrt(1 - p), -std::sqrt(p / 2), std::sqrt(p / 2), 0.0);
  CHECK(oracle::max_abs(balanced_bs_output(single_qubit(0.5, 0.5)).matrix() - outer(psi)) < 1e-15);
}

TEST_CASE("beam splitter config") {
  const auto bal = BeamSplitterConfig::balanced();
  CHECK(bal.transmissivity() == doctest::Approx(0.5));
  CHECK(bal.reflectivity() == doctest::Approx(0.5));
  const auto half = BeamSplitterConfig::from_theta(std::numbers::pi / 2.0);
  CHECK(half.t() == bal.t());
  CHECK(half.r() == bal.r());
  for (double theta = 0.0; theta <= std::numbers::pi; theta += 0.1) {
    const auto bs = BeamSplitterConfig::from_theta(theta);
    CHECK(std::abs(bs.transmissivity() + bs.reflectivity() - 1.0) <= 1e-14);
  }
  CHECK(BeamSplitterConfig::from_reflectivity(0.3).reflectivity() == doctest::Approx(0.3));
  CHECK_THROWS_AS(BeamSplitterConfig::from_theta(4.0), Error);
}

TEST_CASE("tunable_bs_output") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const double p = u(rng);
    const auto s = single_qubit(p, std::polar(u(rng) * std::sqrt(p * (1 - p)), 6.28 * u(rng)));
    const Matrix4 a = tunable_bs_output(s, BeamSplitterConfig::from_theta(std::numbers::pi / 2)).matrix();
    CHECK(oracle::max_abs(a - balanced_bs_output(s).matrix()) <= 1e-14);
  }

  // At x = 0 the output is rho_GH(p, q = R) up to the local unitary I x Z.
  const auto bs = BeamSplitterConfig::from_reflectivity(0.3);
  const Matrix4 out = tunable_bs_output(single_qubit(0.8, 0.0), bs).matrix();
  const Matrix4 gh = generalized_horodecki({0.8, 0.3}).matrix();
  const Matrix4 u_local = linalg::kron(Matrix2::Identity(), linalg::pauli_z());
  CHECK(oracle::max_abs(u_local * out * u_local.adjoint() - gh) <= 1e-14);
  const auto out_state = tunable_bs_output(single_qubit(0.8, 0.0), bs);
  const auto gh_state = generalized_horodecki({0.8, 0.3});
  CHECK(negativity(out_state) == doctest::Approx(negativity(gh_state)).epsilon(1e-12));
  CHECK(concurrence(out_state) == doctest::Approx(concurrence(gh_state)).epsilon(1e-12));

  // Full transmission leaves the output separable.
  for (double p : {0.2, 0.7, 1.0}) {
    const auto s = single_qubit(p, std::sqrt(p * (1 - p)));
    CHECK(negativity(tunable_bs_output(s, BeamSplitterConfig::from_theta(0.0))) <= 1e-14);
  }
}

TEST_CASE("Horodecki family") {
  CHECK(oracle::max_abs(horodecki_state(1.0).matrix() - outer(bell::vector(0))) < 1e-15);
  CHECK(horodecki_state(0.0).matrix()(0, 0).real() == 1.0);
  const auto ev = oracle::real_spectrum(horodecki_state(0.5).matrix());
  CHECK(ev[0] == doctest::Approx(0.0));
  CHECK(ev[3] == doctest::Approx(0.5));
  CHECK(ev[2] == doctest::Approx(0.5));
  for (double p = 0.0; p <= 1.0; p += 0.1) {
    CHECK(oracle::max_abs(horodecki_state(p).matrix() -
                          balanced_bs_output(single_qubit(p, 0.0)).matrix()) < 1e-15);
  }
}

TEST_CASE("generalized Horodecki family") {
  for (double p : {0.3, 0.9}) {
    const auto gh = generalized_horodecki({p, 0.5});
    const auto h = horodecki_state(p);
    CHECK(negativity(gh) == doctest::Approx(negativity(h)).epsilon(1e-12));
    CHECK(concurrence(gh) == doctest::Approx(concurrence(h)).epsilon(1e-12));
    CHECK(ree_numerical(gh).value == doctest::Approx(ree_numerical(h).value).epsilon(1e-8));
  }
  CHECK(oracle::max_abs(generalized_horodecki({1.0, 0.3}).matrix() -
                        oracle::projector(oracle::psi_q(0.3))) < 1e-15);
  const double expected = std::sqrt(0.16 + 4 * 0.36 * 0.1875) - 0.4;
  const auto gh = generalized_horodecki({0.6, 0.25});
  CHECK(oracle::negativity(gh.matrix()) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(negativity(gh) == doctest::Approx(0.25574).epsilon(1e-4));
  CHECK_THROWS_AS(generalized_horodecki({1.1, 0.3}), Error);
}

TEST_CASE("Bell-diagonal and Werner states") {
  CHECK(oracle::max_abs(bell_diagonal({{1, 0, 0, 0}}).matrix() - outer(bell::vector(0))) < 1e-15);
  CHECK(oracle::max_abs(bell_diagonal({{0.25, 0.25, 0.25, 0.25}}).matrix() -
                        Matrix4::Identity() / 4.0) < 1e-15);
  CHECK_THROWS_AS(bell_diagonal({{0.5, 0.5, 0.1, 0.0}}), Error);
  CHECK_THROWS_AS(bell_diagonal({{1.2, -0.2, 0.0, 0.0}}), Error);

  for (double n : {0.0, 0.2, 0.5, 1.0}) {
    const double lam = (1.0 + n) / 2.0, rest = (1.0 - n) / 6.0;
    const auto w = werner(n);
    CHECK(oracle::max_abs(w.matrix() - bell_diagonal({{lam, rest, rest, rest}}).matrix()) < 1e-15);
    CHECK(oracle::negativity(w.matrix()) == doctest::Approx(n).epsilon(1e-12));
  }
  CHECK(oracle::max_abs(werner(1.0).matrix() - outer(bell::vector(0))) < 1e-15);
  CHECK(BellDiagonalWeights{{0.1, 0.6, 0.2, 0.1}}.max_weight() == 0.6);
}

TEST_CASE("pure output and psi_q") {
  CHECK(oracle::max_abs(pure_output(1.0).matrix() - outer(bell::vector(0))) < 1e-15);
  CHECK(pure_output(0.0).matrix()(0, 0).real() == doctest::Approx(1.0));
  CHECK(oracle::max_abs(pure_output(0.37).matrix() -
                        balanced_bs_output(pure_qubit(0.37, 0.0)).matrix()) <= 1e-12);

  for (double q : {0.1, 0.25, 0.4}) {
    const double p = 2.0 * std::sqrt(q * (1 - q));
    CHECK(negativity(pure_output(p)) == doctest::Approx(p).epsilon(1e-12));
    CHECK(negativity(psi_q_state(q)) == doctest::Approx(negativity(pure_output(p))).epsilon(1e-12));
    CHECK(concurrence(psi_q_state(q)) == doctest::Approx(concurrence(pure_output(p))).epsilon(1e-12));
  }
}

TEST_CASE("constructors yield valid states; pure in gives rank one out") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double p = u(rng), phi = 6.28 * u(rng);
    const auto s = single_qubit(p, std::polar(u(rng) * std::sqrt(p * (1 - p)), phi));
    check_valid(balanced_bs_output(s));
    check_valid(tunable_bs_output(s, BeamSplitterConfig::from_theta(3.14 * u(rng))));
    check_valid(generalized_horodecki({u(rng), u(rng)}));
    check_valid(werner(u(rng)));
    const auto pure = balanced_bs_output(pure_qubit(p, phi));
    CHECK(oracle::real_spectrum(pure.matrix()).back() == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("measures of BS outputs do not depend on the phase") {
  for (double p : {0.2, 0.5, 0.8}) {
    const double xa = 0.7 * std::sqrt(p * (1 - p));
    const auto ref = balanced_bs_output(single_qubit(p, xa));
    for (double phi = 0.0; phi < 6.28; phi += 0.5) {
      const auto s = balanced_bs_output(single_qubit(p, std::polar(xa, phi)));
      CHECK(std::abs(negativity(s) - negativity(ref)) <= 1e-10);
      CHECK(std::abs(concurrence(s) - concurrence(ref)) <= 1e-10);
    }
  }
}

TEST_CASE("TwoQubitState validation") {
  Matrix4 m = Matrix4::Identity() / 4.0;
  m(0, 1) = 0.1;
  CHECK_THROWS_AS(TwoQubitState{m}, Error);
  Matrix4 neg = Matrix4::Zero();
  neg(0, 0) = 1.1;
  neg(1, 1) = -0.1;
  try {
    TwoQubitState{neg};
    FAIL("expected NotAState");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAState);
  }
}

}  // TEST_SUITE
