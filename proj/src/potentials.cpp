#include "entpot/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "entpot/detail/checks.hpp"

namespace entpot {

PotentialTriple measure_triple(const TwoQubitState& rho, const ReeOptions& ree) {
  const ReeResult r = ree_numerical(rho, ree);
  return {negativity(rho), concurrence(rho), r.value, r.converged};
}

PotentialTriple standard_potentials(const SingleQubitState& sigma, const ReeOptions& ree) {
  return measure_triple(balanced_bs_output(sigma), ree);
}

TwoQubitState pipeline_output(const SingleQubitState& sigma, const GeneralizedPipeline& pipe) {
  TwoQubitState out = tunable_bs_output(sigma, pipe.bs);
  if (pipe.adc) out = apply_amplitude_damping(out, *pipe.adc);
  if (pipe.pdc) out = apply_phase_damping(out, *pipe.pdc);
  return out;
}

PotentialTriple generalized_potentials(const SingleQubitState& sigma,
                                       const GeneralizedPipeline& pipe, const ReeOptions& ree) {
  return measure_triple(pipeline_output(sigma, pipe), ree);
}

double dephased_mixing(double negativity) {
  detail::require_unit_interval("N", negativity);
  return std::sqrt(2.0 * negativity * (negativity + 1.0)) - negativity;
}

double coherence_from_negativity(double p, double negativity) {
  const double n = negativity;
  if (!(n > 0.0) || n > 1.0) {
    throw Error(ErrorCode::OutOfDomain, "N = " + std::to_string(n) + " outside (0, 1]");
  }
  const double upper = dephased_mixing(n);
  detail::require_in_range("p", p, n, upper, 1e-12);
  p = std::clamp(p, n, upper);
  const double bracket = std::max(0.0, 2.0 * n * (n + 1.0) - (n + p) * (n + p));
  const double x = 0.5 * std::sqrt((1.0 + p / n) * bracket);
  // At p = N the value equals sqrt(p(1-p)); keep round-off from leaving the
  // admissible disc.
  return std::min(x, std::sqrt(p * (1.0 - p)));
}

SingleQubitState sigma_prime(double p, double negativity, double phi) {
  return SingleQubitState(p, std::polar(coherence_from_negativity(p, negativity), phi));
}

}  // namespace entpot
