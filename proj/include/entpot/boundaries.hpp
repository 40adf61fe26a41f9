#pragma once

#include <string>
#include <vector>

#include "entpot/measures.hpp"
#include "entpot/states.hpp"

namespace entpot {

enum class Branch { Minus, Plus };

/// q with negativity(rho_GH(p, q)) = N:
/// (1/2p)[p +- sqrt(p^2 - N^2 - 2N(1-p))].
/// Throws OutOfDomain when the discriminant is below -1e-12 or p <= 0.
double q_from_negativity(double p, double negativity, Branch branch);

/// q with concurrence(rho_GH(p, q)) = C: (1/2)(1 +- sqrt(1 - (C/p)^2)).
/// Requires p >= C > 0.
double q_from_concurrence(double p, double concurrence, Branch branch);

struct SigmaZResult {
  SingleQubitState state;  // phase 0
  double p_opt;
  double x_abs;
  double reep;
  /// Upper end of the search interval, the completely dephased state.
  double p_endpoint;
};

/// Minimizes REEP of sigma[p, f(p, N)] over p in [N, sqrt(2N(N+1)) - N]
/// by golden-section search to `tol` in p, then three parabolic steps.
/// N must lie in [0, 1]; the ends are handled in closed form.
SigmaZResult optimal_sigma_Z(double negativity, double tol = 1e-7, const ReeOptions& ree = {});

struct RhoAResult {
  TwoQubitState state;
  GeneralizedHorodeckiParams params;
  double ree;
  /// Lower end of the search interval, the Horodecki state.
  double p_horodecki;
};

/// Maximizes the REE of rho_GH(p, f1(p, N)) over p in
/// [sqrt(2N(1+N)) - N, 1]. Both branches of f1 are tried at each p and the
/// larger REE is kept, the minus branch on exact ties.
RhoAResult optimal_rho_A(double negativity, double tol = 1e-7, const ReeOptions& ree = {});

/// REE-versus-negativity of the pure and completely dephased boundary
/// states, both in closed form.
double reep_pure_at(double negativity);
double reep_dephased_at(double negativity);

struct SpecialPoints {
  double n1, e1;
  double n2, e2;
  double n3, e3;
};

/// tol is the final bracket width in N of each bisection. An optimizer
/// "reaches the endpoint" when its p lies within 1e-4 of it.
/// Throws RootNotBracketed.
SpecialPoints special_points(double tol = 1e-4, const ReeOptions& ree = {});

enum class CurveKind { Pure, Horodecki, BellDiagonal, RhoA, RhoZ, GhFixedP };
enum class MeasurePlane { NC, ReeC, ReeN };

std::string to_string(CurveKind kind);
std::string to_string(MeasurePlane plane);
/// Accepts the to_string names; throws OutOfDomain otherwise.
CurveKind parse_curve_kind(const std::string& name);
MeasurePlane parse_measure_plane(const std::string& name);

struct CurveSample {
  double abscissa;
  double ordinate;
  double param1;
  double param2;
};

/// Sample parameters per kind:
///   pure          N,         (p, |x|) of the pure input
///   horodecki     p,         (p, 0) of the dephased input
///   bell_diagonal N,         (largest Bell weight, 0)
///   rho_A         N,         (p, q) of rho_GH
///   rho_Z         N,         (p, |x|) of the optimally dephased input
///   gh_fixed_p    q in [0, 1/2] at fixed p = family_p, (p, q)
struct BoundaryCurve {
  CurveKind kind;
  MeasurePlane plane;
  std::string abscissa_label;
  std::string ordinate_label;
  std::vector<CurveSample> samples;
};

/// rho_A and rho_Z exist only in the (REE, N) plane; other combinations
/// throw UnsupportedPair. The parameter grid is uniform with both ends
/// included. Optimizer-backed kinds run on `threads` workers (0 = hardware).
BoundaryCurve boundary_curve(CurveKind kind, int n_samples, MeasurePlane plane,
                             double family_p = 0.8, const ReeOptions& ree = {},
                             unsigned threads = 0);

}  // namespace entpot
