#include "entpot/channels.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "entpot/detail/checks.hpp"
#include "entpot/error.hpp"

namespace entpot {

using detail::require_unit_interval;

KrausSet::KrausSet(std::vector<Matrix2> operators) : ops_(std::move(operators)) {
  if (ops_.empty()) throw Error(ErrorCode::NotTracePreserving, "empty Kraus set");
  Matrix2 sum = Matrix2::Zero();
  for (const auto& e : ops_) sum += e.adjoint() * e;
  const double defect = (sum - Matrix2::Identity()).cwiseAbs().maxCoeff();
  if (!(defect <= 1e-12)) {
    throw Error(ErrorCode::NotTracePreserving,
                "Kraus completeness violated by " + std::to_string(defect));
  }
}

KrausSet KrausSet::identity() { return KrausSet({Matrix2::Identity()}); }

KrausSet KrausSet::phase_damping(double kappa) {
  require_unit_interval("kappa", kappa);
  Matrix2 e0 = Matrix2::Zero();
  Matrix2 e1 = Matrix2::Zero();
  e0(0, 0) = 1.0;
  e0(1, 1) = std::sqrt(1.0 - kappa);
  e1(1, 1) = std::sqrt(kappa);
  return KrausSet({e0, e1});
}

KrausSet KrausSet::amplitude_damping(double gamma) {
  require_unit_interval("gamma", gamma);
  Matrix2 e0 = Matrix2::Zero();
  Matrix2 e1 = Matrix2::Zero();
  e0(0, 0) = 1.0;
  e0(1, 1) = std::sqrt(1.0 - gamma);
  e1(0, 1) = std::sqrt(gamma);
  return KrausSet({e0, e1});
}

TwoQubitState apply_local_channel(const TwoQubitState& rho, const KrausSet& first,
                                  const KrausSet& second) {
  Matrix4 out = Matrix4::Zero();
  for (const auto& e : first.operators())
    for (const auto& f : second.operators()) {
      const Matrix4 k = linalg::kron(e, f);
      out += k * rho.matrix() * k.adjoint();
    }
  return TwoQubitState(out);
}

TwoQubitState apply_phase_damping(const TwoQubitState& rho, const PhaseDampingParams& params) {
  return apply_local_channel(rho, KrausSet::phase_damping(params.kappa1),
                             KrausSet::phase_damping(params.kappa2));
}

TwoQubitState apply_amplitude_damping(const TwoQubitState& rho,
                                      const AmplitudeDampingParams& params) {
  return apply_local_channel(rho, KrausSet::amplitude_damping(params.gamma1),
                             KrausSet::amplitude_damping(params.gamma2));
}

TwoQubitState pdc_on_pure(double q, double kappa1, double kappa2) {
  require_unit_interval("q", q);
  require_unit_interval("kappa1", kappa1);
  require_unit_interval("kappa2", kappa2);
  const double y = std::sqrt(q * (1.0 - q) * (1.0 - kappa1) * (1.0 - kappa2));
  const Eigen::Vector4cd b1 = bell::vector(0);
  const Eigen::Vector4cd b2 = bell::vector(1);
  // The cross-term sign follows from b1 = (|10> - |01>)/sqrt(2).
  const Matrix4 cross = b1 * b2.adjoint() + b2 * b1.adjoint();
  const Matrix4 m = (0.5 - y) * b1 * b1.adjoint() + (0.5 + y) * b2 * b2.adjoint() +
                    (0.5 - q) * cross;
  return TwoQubitState(m);
}

AdcOutput adc_on_pure(double q, double gamma1, double gamma2) {
  require_unit_interval("q", q);
  require_unit_interval("gamma1", gamma1);
  require_unit_interval("gamma2", gamma2);
  const double excited_second = q * (1.0 - gamma2);
  const double excited_first = (1.0 - q) * (1.0 - gamma1);
  const double weight = excited_second + excited_first;
  if (weight < 1e-12) {
    return {generalized_horodecki({0.0, 0.0}), {0.0, 0.0}, true};
  }
  const GeneralizedHorodeckiParams params{weight, std::min(1.0, excited_second / weight)};
  return {generalized_horodecki(params), params, false};
}

}  // namespace entpot
