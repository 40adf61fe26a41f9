#pragma once

#include <optional>

#include "entpot/channels.hpp"
#include "entpot/measures.hpp"
#include "entpot/states.hpp"

namespace entpot {

/// Negativity, concurrence and REE of a beam-splitter output, i.e. the
/// entanglement potentials of the input qubit.
struct PotentialTriple {
  double np = 0.0;
  double cp = 0.0;
  double reep = 0.0;
  /// False when the REE solver exhausted its iteration budget; reep then
  /// holds the best upper bound found.
  bool converged = true;
};

/// Tunable splitter followed by optional amplitude damping, then optional
/// phase damping, on the two output modes.
struct GeneralizedPipeline {
  BeamSplitterConfig bs = BeamSplitterConfig::balanced();
  std::optional<PhaseDampingParams> pdc;
  std::optional<AmplitudeDampingParams> adc;
};

PotentialTriple measure_triple(const TwoQubitState& rho, const ReeOptions& ree = {});

PotentialTriple standard_potentials(const SingleQubitState& sigma, const ReeOptions& ree = {});

TwoQubitState pipeline_output(const SingleQubitState& sigma, const GeneralizedPipeline& pipe);
PotentialTriple generalized_potentials(const SingleQubitState& sigma,
                                       const GeneralizedPipeline& pipe,
                                       const ReeOptions& ree = {});

/// Upper end sqrt(2N(N+1)) - N of the mixing-parameter range reachable at
/// negativity potential N; it is the completely dephased state.
double dephased_mixing(double negativity);

/// Coherence |x| giving negativity potential N at mixing parameter p:
/// (1/2) sqrt((1 + p/N) [2N(N+1) - (N+p)^2]), for p in
/// [N, sqrt(2N(N+1)) - N] (1e-12 slack at the ends). Throws OutOfDomain.
double coherence_from_negativity(double p, double negativity);

/// sigma[p, f(p, N) e^{i phi}].
SingleQubitState sigma_prime(double p, double negativity, double phi);

}  // namespace entpot
