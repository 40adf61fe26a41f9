#pragma once

#include <vector>

#include "entpot/states.hpp"

namespace entpot {

/// Single-qubit Kraus operators, checked for completeness
/// sum_i E_i^dagger E_i = I (within 1e-12) when built.
class KrausSet {
 public:
  /// Throws NotTracePreserving.
  explicit KrausSet(std::vector<Matrix2> operators);

  static KrausSet identity();
  /// E0 = |0><0| + sqrt(1-kappa)|1><1|, E1 = sqrt(kappa)|1><1|.
  static KrausSet phase_damping(double kappa);
  /// E0 = |0><0| + sqrt(1-gamma)|1><1|, E1 = sqrt(gamma)|0><1|.
  static KrausSet amplitude_damping(double gamma);

  const std::vector<Matrix2>& operators() const noexcept { return ops_; }

 private:
  std::vector<Matrix2> ops_;
};

struct PhaseDampingParams {
  double kappa1 = 0.0;
  double kappa2 = 0.0;
};

struct AmplitudeDampingParams {
  double gamma1 = 0.0;
  double gamma2 = 0.0;
};

/// sum_ij (E_i x F_j) rho (E_i x F_j)^dagger.
TwoQubitState apply_local_channel(const TwoQubitState& rho, const KrausSet& first,
                                  const KrausSet& second);
TwoQubitState apply_phase_damping(const TwoQubitState& rho, const PhaseDampingParams& params);
TwoQubitState apply_amplitude_damping(const TwoQubitState& rho,
                                      const AmplitudeDampingParams& params);

/// Phase-damped |psi_q> = sqrt(q)|01> + sqrt(1-q)|10> in closed form:
/// (1/2 - y)|b1><b1| + (1/2 + y)|b2><b2| + (1/2 - q)(|b1><b2| + h.c.) with
/// y = sqrt(q(1-q)(1-kappa1)(1-kappa2)), b1 = psi-, b2 = psi+.
TwoQubitState pdc_on_pure(double q, double kappa1, double kappa2);

struct AdcOutput {
  TwoQubitState state;
  /// state == rho_GH(params.p, params.q); params.p is the pure-state weight.
  GeneralizedHorodeckiParams params;
  /// Set when the pure-state weight is below 1e-12; then the state is
  /// |00><00| and params.q is 0 by convention.
  bool degenerate = false;
};

/// Amplitude-damped |psi_q>, which is the generalized Horodecki state with
/// weight w = q(1-gamma2) + (1-q)(1-gamma1) and balance q' = q(1-gamma2)/w.
AdcOutput adc_on_pure(double q, double gamma1, double gamma2);

}  // namespace entpot
