#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "entpot/boundaries.hpp"
#include "entpot/potentials.hpp"

namespace entpot {

/// Per-record random stream: std::mt19937_64 seeded through std::seed_seq
/// with the 32-bit halves of (seed, index). Both algorithms are fully
/// specified by the C++ standard, so a stream is reproducible anywhere.
using ScanRng = std::mt19937_64;
ScanRng scan_stream(std::uint64_t seed, std::uint64_t index);

/// Uniform double in [0, 1) from the top 53 bits of one draw.
double uniform01(ScanRng& rng);

/// p ~ U[0,1], |x| = u sqrt(p(1-p)) with u ~ U[0,1], phi ~ U[0, 2pi),
/// drawn in that order.
SingleQubitState sample_state(ScanRng& rng);

struct ScanConfig {
  std::size_t n_states = 1500;
  std::uint64_t seed = 7;
  double ree_tol = 1e-9;
  unsigned threads = 0;  // 0 = hardware concurrency
};

struct ScanRecord {
  double p;
  double x_abs;
  double phi;
  PotentialTriple potentials;
};

struct ScanResult {
  std::vector<ScanRecord> records;
  /// Records whose REE solve hit the iteration limit (kept, flagged).
  std::size_t failures = 0;
  /// Every 100th record is re-evaluated at phi = 0.
  std::size_t phase_checks = 0;
  std::size_t phase_mismatches = 0;  // deviation above 1e-8
  double phase_max_deviation = 0.0;
};

ScanResult run_scan(const ScanConfig& cfg);

struct PlaneContainment {
  MeasurePlane plane;
  /// Largest distance outside the envelope along the ordinate; negative
  /// when every record is strictly inside.
  double max_excess = -1.0;
  std::vector<std::size_t> violations;  // record indices beyond tolerance
};

struct ContainmentReport {
  double tolerance = 1e-5;
  PlaneContainment nc{MeasurePlane::NC, -1.0, {}};
  PlaneContainment ree_c{MeasurePlane::ReeC, -1.0, {}};
  PlaneContainment ree_n{MeasurePlane::ReeN, -1.0, {}};
  /// max over entangled records of N - N_bell(E_R); negative means the
  /// scatter stays strictly below the Bell-diagonal curve.
  double bell_gap = -1.0;
  /// Records near the interpolated optimally dephased envelope that were
  /// re-checked with a dedicated optimization at their own negativity.
  std::size_t exact_checks = 0;

  bool ok() const {
    return nc.violations.empty() && ree_c.violations.empty() && ree_n.violations.empty();
  }
};

/// Checks the scatter against the pure and Horodecki envelopes in the
/// (N, C) and (E_R, C) planes (closed forms) and against the optimally
/// dephased envelope in (E_R, N). `sigma_z` must be a rho_Z curve in the
/// ree-n plane; it is used to screen records, and every record within 1e-3
/// of it is re-checked exactly.
ContainmentReport containment_report(const std::vector<ScanRecord>& records,
                                     const BoundaryCurve& sigma_z, double tolerance = 1e-5,
                                     const ReeOptions& ree = {}, unsigned threads = 0);

/// Throws ContainmentViolation naming the offending records.
void require_containment(const ContainmentReport& report);

/// Inverses of the closed-form boundary curves, by bisection.
double concurrence_of_pure_at_ree(double ree);       // C with eof(C) = E
double concurrence_of_horodecki_at_ree(double ree);  // p with E_R(rho_H(p)) = E
double negativity_of_bell_at_ree(double ree);        // N with 1 - h((1+N)/2) = E

}  // namespace entpot
