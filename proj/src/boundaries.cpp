#include "entpot/boundaries.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <utility>

#include "entpot/detail/checks.hpp"
#include "entpot/detail/parallel.hpp"
#include "entpot/potentials.hpp"

namespace entpot {

namespace {

constexpr double kEndpointPredicate = 1e-4;

struct ScalarOptimum {
  double x;
  double f;
};

// Golden-section minimization on [lo, hi] with memoized evaluations, three
// parabolic refinements, and a final comparison with both ends of the
// interval (boundary minima are common here).
class CachedMinimizer {
 public:
  explicit CachedMinimizer(std::function<double(double)> f) : f_(std::move(f)) {}

  double operator()(double x) {
    auto it = cache_.find(x);
    if (it != cache_.end()) return it->second;
    const double v = f_(x);
    cache_.emplace(x, v);
    return v;
  }

  ScalarOptimum minimize(double lo, double hi, double tol) {
    auto& f = *this;
    ScalarOptimum best{lo, f(lo)};
    auto consider = [&](double x) {
      const double v = f(x);
      if (v < best.f) best = {x, v};
    };
    consider(hi);
    if (hi - lo <= tol) return best;

    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double c = b - g * (b - a), d = a + g * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
      if (fc <= fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - g * (b - a);
        fc = f(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + g * (b - a);
        fd = f(d);
      }
    }
    double x = fc <= fd ? c : d;
    double fx = std::min(fc, fd);

    for (int step = 0; step < 3; ++step) {
      const double fa = f(a), fb = f(b);
      const double r = (x - a) * (fx - fb);
      const double s = (x - b) * (fx - fa);
      const double den = 2.0 * (r - s);
      if (den == 0.0) break;
      const double u = x - ((x - a) * r - (x - b) * s) / den;
      if (!(u > a && u < b) || u == x) break;
      const double fu = f(u);
      if (fu < fx) {
        (u < x ? b : a) = x;
        x = u;
        fx = fu;
      } else {
        (u < x ? a : b) = u;
      }
    }
    consider(x);
    return best;
  }

 private:
  std::function<double(double)> f_;
  std::map<double, double> cache_;
};

void require_negativity(double n) { detail::require_unit_interval("N", n); }

double horodecki_negativity(double p) {
  return std::sqrt((1.0 - p) * (1.0 - p) + p * p) - (1.0 - p);
}

double gh_negativity(double p, double q) {
  return std::sqrt((1.0 - p) * (1.0 - p) + 4.0 * p * p * q * (1.0 - q)) - (1.0 - p);
}

template <class Predicate>
double bisect_predicate(const char* what, double lo, double hi, double tol, Predicate&& pred) {
  if (pred(lo) || !pred(hi)) {
    throw Error(ErrorCode::RootNotBracketed,
                std::string(what) + ": predicate does not change over [" + std::to_string(lo) +
                    ", " + std::to_string(hi) + "]");
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (pred(mid) ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace

double q_from_negativity(double p, double negativity, Branch branch) {
  require_negativity(negativity);
  detail::require_in_range("p", p, 0.0, 1.0);
  if (!(p > 0.0)) throw Error(ErrorCode::OutOfDomain, "p must be positive");
  const double n = negativity;
  const double disc = p * p - n * n - 2.0 * n * (1.0 - p);
  if (disc < -1e-12) {
    throw Error(ErrorCode::OutOfDomain, "no generalized Horodecki state with p = " +
                                            std::to_string(p) + " reaches N = " +
                                            std::to_string(n));
  }
  const double root = std::sqrt(std::max(0.0, disc));
  const double q = (p + (branch == Branch::Plus ? root : -root)) / (2.0 * p);
  return std::clamp(q, 0.0, 1.0);
}

double q_from_concurrence(double p, double concurrence, Branch branch) {
  detail::require_unit_interval("p", p);
  detail::require_unit_interval("C", concurrence);
  if (!(concurrence > 0.0) || concurrence > p) {
    throw Error(ErrorCode::OutOfDomain, "need p >= C > 0");
  }
  const double ratio = concurrence / p;
  const double root = std::sqrt(std::max(0.0, 1.0 - ratio * ratio));
  return 0.5 * (1.0 + (branch == Branch::Plus ? root : -root));
}

double reep_pure_at(double negativity) {
  return ree_closed_form(ReeFamily::Pure, negativity);
}

double reep_dephased_at(double negativity) {
  return ree_closed_form(ReeFamily::Horodecki, std::min(1.0, dephased_mixing(negativity)));
}

SigmaZResult optimal_sigma_Z(double negativity, double tol, const ReeOptions& ree) {
  require_negativity(negativity);
  const double n = negativity;
  if (n == 0.0) return {SingleQubitState(0.0, 0.0), 0.0, 0.0, 0.0, 0.0};
  const double upper = std::min(1.0, dephased_mixing(n));
  if (n == 1.0) return {SingleQubitState(1.0, 0.0), 1.0, 0.0, 1.0, upper};

  CachedMinimizer objective([&](double p) {
    return standard_potentials(sigma_prime(p, n, 0.0), ree).reep;
  });
  const ScalarOptimum opt = objective.minimize(n, upper, tol);
  const double x = coherence_from_negativity(opt.x, n);
  return {SingleQubitState(opt.x, x), opt.x, x, opt.f, upper};
}

RhoAResult optimal_rho_A(double negativity, double tol, const ReeOptions& ree) {
  require_negativity(negativity);
  const double n = negativity;
  if (n == 0.0) {
    const GeneralizedHorodeckiParams params{0.0, 0.0};
    return {generalized_horodecki(params), params, 0.0, 0.0};
  }
  const double lower = std::min(1.0, dephased_mixing(n));
  if (n == 1.0) {
    const GeneralizedHorodeckiParams params{1.0, 0.5};
    return {generalized_horodecki(params), params, 1.0, lower};
  }

  std::map<double, double> chosen_q;
  CachedMinimizer objective([&](double p) {
    double best_q = q_from_negativity(p, n, Branch::Minus);
    double best = ree_numerical(generalized_horodecki({p, best_q}), ree).value;
    const double q_plus = q_from_negativity(p, n, Branch::Plus);
    if (q_plus != best_q) {
      const double v = ree_numerical(generalized_horodecki({p, q_plus}), ree).value;
      if (v > best) {
        best = v;
        best_q = q_plus;
      }
    }
    chosen_q[p] = best_q;
    return -best;
  });
  const ScalarOptimum opt = objective.minimize(lower, 1.0, tol);
  const GeneralizedHorodeckiParams params{opt.x, chosen_q.at(opt.x)};
  return {generalized_horodecki(params), params, -opt.f, lower};
}

SpecialPoints special_points(double tol, const ReeOptions& ree) {
  if (!(tol > 0.0)) throw Error(ErrorCode::OutOfDomain, "tol must be positive");
  SpecialPoints sp{};

  auto pure_above = [](double n) { return reep_pure_at(n) - reep_dephased_at(n) >= 0.0; };
  sp.n1 = bisect_predicate("N1", 0.1, 0.9, std::min(tol, 1e-12), pure_above);
  sp.e1 = reep_pure_at(sp.n1);

  auto rho_a_pure = [&](double n) {
    return std::abs(optimal_rho_A(n, 1e-7, ree).params.p - 1.0) < kEndpointPredicate;
  };
  sp.n2 = bisect_predicate("N2", 0.1, 0.9, tol, rho_a_pure);
  sp.e2 = reep_pure_at(sp.n2);

  auto sigma_z_dephased = [&](double n) {
    const SigmaZResult r = optimal_sigma_Z(n, 1e-7, ree);
    return std::abs(r.p_opt - r.p_endpoint) < kEndpointPredicate;
  };
  sp.n3 = bisect_predicate("N3", 0.1, 0.9, tol, sigma_z_dephased);
  sp.e3 = reep_dephased_at(sp.n3);
  return sp;
}

std::string to_string(CurveKind kind) {
  switch (kind) {
    case CurveKind::Pure: return "pure";
    case CurveKind::Horodecki: return "horodecki";
    case CurveKind::BellDiagonal: return "bell_diagonal";
    case CurveKind::RhoA: return "rho_A";
    case CurveKind::RhoZ: return "rho_Z";
    case CurveKind::GhFixedP: return "gh_fixed_p";
  }
  return "?";
}

std::string to_string(MeasurePlane plane) {
  switch (plane) {
    case MeasurePlane::NC: return "n-c";
    case MeasurePlane::ReeC: return "ree-c";
    case MeasurePlane::ReeN: return "ree-n";
  }
  return "?";
}

CurveKind parse_curve_kind(const std::string& name) {
  for (auto k : {CurveKind::Pure, CurveKind::Horodecki, CurveKind::BellDiagonal, CurveKind::RhoA,
                 CurveKind::RhoZ, CurveKind::GhFixedP}) {
    if (to_string(k) == name) return k;
  }
  throw Error(ErrorCode::OutOfDomain, "unknown curve kind '" + name + "'");
}

MeasurePlane parse_measure_plane(const std::string& name) {
  for (auto m : {MeasurePlane::NC, MeasurePlane::ReeC, MeasurePlane::ReeN}) {
    if (to_string(m) == name) return m;
  }
  throw Error(ErrorCode::OutOfDomain, "unknown measure plane '" + name + "'");
}

BoundaryCurve boundary_curve(CurveKind kind, int n_samples, MeasurePlane plane, double family_p,
                             const ReeOptions& ree, unsigned threads) {
  if (n_samples < 2) throw Error(ErrorCode::OutOfDomain, "n_samples must be at least 2");
  if ((kind == CurveKind::RhoA || kind == CurveKind::RhoZ) && plane != MeasurePlane::ReeN) {
    throw Error(ErrorCode::UnsupportedPair,
                to_string(kind) + " is only defined in the ree-n plane");
  }
  if (kind == CurveKind::GhFixedP) {
    detail::require_unit_interval("p", family_p);
    if (!(family_p > 0.0)) throw Error(ErrorCode::OutOfDomain, "p must be positive");
  }

  BoundaryCurve curve{kind, plane, plane == MeasurePlane::NC ? "N" : "E_R",
                      plane == MeasurePlane::ReeN ? "N" : "C", {}};
  curve.samples.resize(static_cast<std::size_t>(n_samples));

  // Each family yields (N, C, E_R, param1, param2) at grid parameter t.
  struct Point {
    double n, c, e, a, b;
  };
  auto evaluate = [&](double t) -> Point {
    switch (kind) {
      case CurveKind::Pure:
        return {t, t, reep_pure_at(t), t, std::sqrt(t * (1.0 - t))};
      case CurveKind::Horodecki:
        return {horodecki_negativity(t), t, ree_closed_form(ReeFamily::Horodecki, t), t, 0.0};
      case CurveKind::BellDiagonal:
        return {t, t, ree_closed_form(ReeFamily::BellDiagonal, t), 0.5 * (1.0 + t), 0.0};
      case CurveKind::RhoA: {
        const RhoAResult r = optimal_rho_A(t, 1e-7, ree);
        return {t, 0.0, r.ree, r.params.p, r.params.q};
      }
      case CurveKind::RhoZ: {
        const SigmaZResult r = optimal_sigma_Z(t, 1e-7, ree);
        return {t, 0.0, r.reep, r.p_opt, r.x_abs};
      }
      case CurveKind::GhFixedP: {
        const double q = 0.5 * t;
        const double p = family_p;
        const double e =
            plane == MeasurePlane::NC ? 0.0 : ree_numerical(generalized_horodecki({p, q}), ree).value;
        return {gh_negativity(p, q), 2.0 * p * std::sqrt(q * (1.0 - q)), e, p, q};
      }
    }
    return {};
  };

  const bool heavy = kind == CurveKind::RhoA || kind == CurveKind::RhoZ ||
                     (kind == CurveKind::GhFixedP && plane != MeasurePlane::NC);
  const auto count = static_cast<std::size_t>(n_samples);
  detail::parallel_for(count, heavy ? threads : 1u, [&](std::size_t i) {
    const double t = static_cast<double>(i) / static_cast<double>(count - 1);
    const Point pt = evaluate(t);
    auto clamp01 = [](double v) { return std::clamp(v, 0.0, 1.0); };
    CurveSample& s = curve.samples[i];
    switch (plane) {
      case MeasurePlane::NC: s.abscissa = pt.n; s.ordinate = pt.c; break;
      case MeasurePlane::ReeC: s.abscissa = pt.e; s.ordinate = pt.c; break;
      case MeasurePlane::ReeN: s.abscissa = pt.e; s.ordinate = pt.n; break;
    }
    s.abscissa = clamp01(s.abscissa);
    s.ordinate = clamp01(s.ordinate);
    s.param1 = pt.a;
    s.param2 = pt.b;
  });
  return curve;
}

}  // namespace entpot
