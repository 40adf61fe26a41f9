#include "entpot/scan.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "entpot/detail/parallel.hpp"
#include "entpot/error.hpp"

namespace entpot {

namespace {

constexpr double kPhaseTol = 1e-8;
constexpr double kScreenMargin = 1e-3;

// Monotone increasing g on [0, 1]: smallest t with g(t) >= target.
template <class F>
double invert_increasing(F&& g, double target) {
  if (target <= g(0.0)) return 0.0;
  if (target >= g(1.0)) return 1.0;
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// E_R of the optimally dephased family as a function of N, from a sampled
// rho_Z curve: the ratio to the pure-state value is interpolated linearly.
class SigmaZEnvelope {
 public:
  explicit SigmaZEnvelope(const BoundaryCurve& curve) {
    if (curve.kind != CurveKind::RhoZ || curve.plane != MeasurePlane::ReeN) {
      throw Error(ErrorCode::UnsupportedPair, "containment needs a rho_Z curve in the ree-n plane");
    }
    for (const auto& s : curve.samples) {
      if (s.ordinate > 0.0) nodes_.push_back({s.ordinate, s.abscissa / reep_pure_at(s.ordinate)});
    }
    std::sort(nodes_.begin(), nodes_.end());
    if (nodes_.empty()) throw Error(ErrorCode::OutOfDomain, "empty rho_Z curve");
  }

  double ree(double n) const {
    n = std::clamp(n, 0.0, 1.0);
    if (n <= 0.0) return 0.0;
    auto hi = std::lower_bound(nodes_.begin(), nodes_.end(), std::pair{n, -1.0});
    double ratio;
    if (hi == nodes_.begin()) {
      ratio = hi->second;
    } else if (hi == nodes_.end()) {
      ratio = nodes_.back().second;
    } else {
      const auto lo = std::prev(hi);
      const double w = (n - lo->first) / (hi->first - lo->first);
      ratio = (1.0 - w) * lo->second + w * hi->second;
    }
    return ratio * reep_pure_at(n);
  }

  double slope(double n) const {
    const double h = 1e-4;
    const double a = std::max(0.0, n - h), b = std::min(1.0, n + h);
    return (ree(b) - ree(a)) / (b - a);
  }

 private:
  std::vector<std::pair<double, double>> nodes_;
};

void note_excess(PlaneContainment& plane, std::size_t index, double excess, double tol) {
  plane.max_excess = std::max(plane.max_excess, excess);
  if (excess > tol) plane.violations.push_back(index);
}

}  // namespace

ScanRng scan_stream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return ScanRng(seq);
}

double uniform01(ScanRng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

SingleQubitState sample_state(ScanRng& rng) {
  const double p = uniform01(rng);
  const double u = uniform01(rng);
  const double phi = 2.0 * std::numbers::pi * uniform01(rng);
  return SingleQubitState(p, std::polar(u * std::sqrt(p * (1.0 - p)), phi));
}

ScanResult run_scan(const ScanConfig& cfg) {
  if (cfg.n_states < 1) throw Error(ErrorCode::OutOfDomain, "n_states must be at least 1");
  ReeOptions ree;
  ree.tol = cfg.ree_tol;

  ScanResult result;
  result.records.resize(cfg.n_states);
  std::vector<double> phase_dev(cfg.n_states, -1.0);

  detail::parallel_for(cfg.n_states, cfg.threads, [&](std::size_t i) {
    ScanRng rng = scan_stream(cfg.seed, i);
    const SingleQubitState sigma = sample_state(rng);
    const PotentialTriple t = standard_potentials(sigma, ree);
    result.records[i] = {sigma.p(), std::abs(sigma.x()), sigma.phi(), t};
    if (i % 100 == 0) {
      const PotentialTriple t0 = standard_potentials(SingleQubitState(sigma.p(), std::abs(sigma.x())), ree);
      phase_dev[i] = std::max({std::abs(t.np - t0.np), std::abs(t.cp - t0.cp),
                               std::abs(t.reep - t0.reep)});
    }
  });

  for (std::size_t i = 0; i < cfg.n_states; ++i) {
    if (!result.records[i].potentials.converged) ++result.failures;
    if (phase_dev[i] >= 0.0) {
      ++result.phase_checks;
      result.phase_max_deviation = std::max(result.phase_max_deviation, phase_dev[i]);
      if (phase_dev[i] > kPhaseTol) ++result.phase_mismatches;
    }
  }
  return result;
}

double concurrence_of_pure_at_ree(double ree) {
  return invert_increasing([](double c) { return eof(c); }, ree);
}

double concurrence_of_horodecki_at_ree(double ree) {
  return invert_increasing([](double p) { return ree_closed_form(ReeFamily::Horodecki, p); }, ree);
}

double negativity_of_bell_at_ree(double ree) {
  return invert_increasing([](double n) { return ree_closed_form(ReeFamily::BellDiagonal, n); },
                           ree);
}

ContainmentReport containment_report(const std::vector<ScanRecord>& records,
                                     const BoundaryCurve& sigma_z, double tolerance,
                                     const ReeOptions& ree, unsigned threads) {
  const SigmaZEnvelope envelope(sigma_z);
  ContainmentReport report;
  report.tolerance = tolerance;

  std::vector<double> ree_n_excess(records.size(), -1.0);
  std::vector<std::size_t> candidates;

  for (std::size_t i = 0; i < records.size(); ++i) {
    const PotentialTriple& t = records[i].potentials;
    const double n = t.np, c = t.cp, e = std::clamp(t.reep, 0.0, 1.0);

    note_excess(report.nc, i, std::max(n - c, c - dephased_mixing(std::clamp(n, 0.0, 1.0))),
                tolerance);
    note_excess(report.ree_c, i,
                std::max(concurrence_of_pure_at_ree(e) - c,
                         c - concurrence_of_horodecki_at_ree(e)),
                tolerance);

    if (n > 1e-12) {
      report.bell_gap = std::max(report.bell_gap, n - negativity_of_bell_at_ree(e));
      const double excess = (envelope.ree(n) - e) / envelope.slope(n);
      ree_n_excess[i] = excess;
      if (excess > -kScreenMargin) candidates.push_back(i);
    }
  }

  detail::parallel_for(candidates.size(), threads, [&](std::size_t k) {
    const std::size_t i = candidates[k];
    const PotentialTriple& t = records[i].potentials;
    const double exact = optimal_sigma_Z(t.np, 1e-7, ree).reep;
    ree_n_excess[i] = (exact - t.reep) / envelope.slope(t.np);
  });
  report.exact_checks = candidates.size();

  for (std::size_t i = 0; i < records.size(); ++i) {
    if (records[i].potentials.np > 1e-12) note_excess(report.ree_n, i, ree_n_excess[i], tolerance);
  }
  return report;
}

void require_containment(const ContainmentReport& report) {
  if (report.ok()) return;
  std::string msg = "records outside the envelopes:";
  for (const auto* plane : {&report.nc, &report.ree_c, &report.ree_n}) {
    if (plane->violations.empty()) continue;
    msg += " " + to_string(plane->plane) + " [";
    for (std::size_t k = 0; k < plane->violations.size(); ++k) {
      if (k == 10) {
        msg += " ...";
        break;
      }
      msg += (k ? " " : "") + std::to_string(plane->violations[k]);
    }
    msg += "]";
  }
  throw Error(ErrorCode::ContainmentViolation, msg);
}

}  // namespace entpot
