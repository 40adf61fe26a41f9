#pragma once

#include <optional>

#include "entpot/states.hpp"

namespace entpot {

/// max(0, -2 min eig(rho^Gamma)).
double negativity(const TwoQubitState& rho);

/// Wootters concurrence max(0, 2 lambda_max - sum_j lambda_j), lambda_j^2
/// being the eigenvalues of rho (Y x Y) rho^* (Y x Y).
double concurrence(const TwoQubitState& rho);
/// Same, for an unvalidated matrix; throws NonPhysicalSpectrum when rho has
/// an eigenvalue below -1e-8.
double concurrence(const Matrix4& rho);

/// h(y) = -y log2 y - (1-y) log2(1-y); OutOfDomain outside [0, 1].
double binary_entropy(double y);

/// Entanglement of formation from concurrence, h((1 + sqrt(1 - C^2)) / 2).
double eof(double concurrence);

struct ReeOptions {
  /// Upper bound, in bits, on value - E_R at termination.
  double tol = 1e-9;
  /// Budget of Newton iterations across all barrier stages.
  int max_iter = 20000;
};

struct ReeResult {
  double value = 0.0;          // bits
  TwoQubitState css;           // closest separable state found
  int iterations = 0;
  bool converged = false;
  double final_step_norm = 0.0;
};

/// Relative entropy of entanglement min_{sigma PPT} S(rho || sigma).
///
/// For two qubits the PPT set equals the separable set. The minimization is
/// carried out with a log-barrier interior-point method: the 15 real
/// coordinates of a trace-one sigma in the Pauli basis are moved by damped
/// Newton steps on
///
///   -Tr(rho ln sigma) - mu (ln det sigma + ln det sigma^Gamma),
///
/// with mu decreased geometrically until the barrier bound 8 mu / ln 2 drops
/// below `tol`. Every iterate is strictly inside both PSD cones, so the
/// returned css is always PPT and `value` is an upper bound on E_R.
/// A PPT input is returned directly with value 0 and css = rho.
///
/// Never throws for numerical trouble: an exhausted iteration budget
/// yields the best iterate with converged = false.
ReeResult ree_numerical(const TwoQubitState& rho, const ReeOptions& options = {});

enum class ReeFamily { Pure, Horodecki, BellDiagonal };

/// Closed-form REE. The parameter is the negativity N for Pure and
/// BellDiagonal, and the mixing parameter p for Horodecki.
double ree_closed_form(ReeFamily family, double parameter);

struct MomentResidual {
  double negativity = 0.0;
  double pi2 = 0.0;  // Tr[(rho^Gamma)^2] - 1
  double pi3 = 0.0;  // Tr[(rho^Gamma)^3] - 1
  double det = 0.0;  // det rho^Gamma
  double residual = 0.0;
};

/// |48D + 3N^4 + 6N^3 - 6N^2 Pi'_2 - 4N(3 Pi'_2 - 2 Pi'_3)|, which vanishes
/// whenever rho^Gamma has the eigenvalue -N/2 (every entangled state).
MomentResidual negativity_moment_residual(const TwoQubitState& rho);

}  // namespace entpot
