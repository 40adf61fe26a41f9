#include <doctest.h>

#include "entpot/scan.hpp"
#include "support.hpp"

using namespace entpot;

TEST_SUITE("scan") {

TEST_CASE("streams are deterministic per seed and index") {
  auto a = scan_stream(42, 0);
  auto b = scan_stream(42, 0);
  const auto sa = sample_state(a);
  const auto sb = sample_state(b);
  CHECK(sa.p() == sb.p());
  CHECK(sa.x() == sb.x());
  auto c = scan_stream(42, 1);
  CHECK(sample_state(c).p() != sa.p());
  auto d = scan_stream(43, 0);
  CHECK(sample_state(d).p() != sa.p());
}

TEST_CASE("uniform draws") {
  auto rng = scan_stream(1, 0);
  double sum = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const double u = uniform01(rng);
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  CHECK(std::abs(sum / n - 0.5) <= 0.01);
}

TEST_CASE("sampled states are admissible") {
  double sum = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    auto rng = scan_stream(9, static_cast<std::uint64_t>(i));
    const auto s = sample_state(rng);
    REQUIRE(std::norm(s.x()) <= s.p() * (1.0 - s.p()) + 1e-15);
    REQUIRE(s.phi() >= -3.15);
    sum += s.p();
  }
  CHECK(std::abs(sum / n - 0.5) <= 0.01);
}

TEST_CASE("scan is reproducible and thread-count independent") {
  ScanConfig cfg;
  cfg.n_states = 100;
  cfg.seed = 42;
  cfg.threads = 1;
  const auto a = run_scan(cfg);
  cfg.threads = 4;
  const auto b = run_scan(cfg);
  REQUIRE(a.records.size() == 100);
  REQUIRE(b.records.size() == 100);
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].p == b.records[i].p);
    CHECK(a.records[i].x_abs == b.records[i].x_abs);
    CHECK(a.records[i].phi == b.records[i].phi);
    CHECK(a.records[i].potentials.np == b.records[i].potentials.np);
    CHECK(a.records[i].potentials.reep == b.records[i].potentials.reep);
  }
  CHECK(a.failures == 0);
  CHECK(a.phase_checks == 1);
  CHECK(a.phase_mismatches == 0);
}

TEST_CASE("scan records obey the potential relations") {
  ScanConfig cfg;
  cfg.n_states = 300;
  cfg.seed = 3;
  const auto r = run_scan(cfg);
  for (const auto& rec : r.records) {
    CHECK(std::abs(rec.potentials.cp - rec.p) <= 1e-12);
    CHECK(rec.potentials.np <= rec.potentials.cp + 1e-9);
    CHECK(eof(rec.potentials.cp) >= rec.potentials.reep - 1e-6);
    CHECK(rec.x_abs * rec.x_abs <= rec.p * (1 - rec.p) + 1e-15);
    // Records carry exactly what a direct evaluation gives.
    const auto t = standard_potentials(single_qubit(rec.p, std::polar(rec.x_abs, rec.phi)), {cfg.ree_tol});
    CHECK(t.np == doctest::Approx(rec.potentials.np).epsilon(1e-12));
  }
}

TEST_CASE("closed-form envelope inverses") {
  for (double e : {0.1, 0.4, 0.8}) {
    CHECK(eof(concurrence_of_pure_at_ree(e)) == doctest::Approx(e).epsilon(1e-10));
    CHECK(oracle::ree_horodecki(concurrence_of_horodecki_at_ree(e)) == doctest::Approx(e).epsilon(1e-10));
    CHECK(oracle::ree_bell(negativity_of_bell_at_ree(e)) == doctest::Approx(e).epsilon(1e-10));
  }
}

TEST_CASE("empty record set passes containment") {
  const auto z = boundary_curve(CurveKind::RhoZ, 5, MeasurePlane::ReeN);
  const auto rep = containment_report({}, z);
  CHECK(rep.ok());
  CHECK(rep.nc.violations.empty());
  CHECK_NOTHROW(require_containment(rep));
}

TEST_CASE("small scan stays inside the boundaries") {
  ScanConfig cfg;
  cfg.n_states = 200;
  const auto scan = run_scan(cfg);
  const auto z = boundary_curve(CurveKind::RhoZ, 41, MeasurePlane::ReeN);
  const auto rep = containment_report(scan.records, z);
  CHECK(rep.ok());
  CHECK(rep.nc.max_excess <= 1e-5);
  CHECK(rep.ree_c.max_excess <= 1e-5);
  CHECK(rep.ree_n.max_excess <= 1e-5);
  CHECK(rep.bell_gap < 0.0);
}

TEST_CASE("a record outside the envelope is reported") {
  ScanRecord bad{0.5, 0.0, 0.0, PotentialTriple{0.9, 0.5, 0.1, true}};
  const auto z = boundary_curve(CurveKind::RhoZ, 5, MeasurePlane::ReeN);
  const auto rep = containment_report({bad}, z);
  CHECK(!rep.ok());
  CHECK(rep.nc.violations.size() == 1);
  try {
    require_containment(rep);
    FAIL("expected ContainmentViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ContainmentViolation);
  }
}

}  // TEST_SUITE
