#pragma once

#include <cmath>
#include <string>

#include "entpot/error.hpp"

namespace entpot::detail {

inline void require_in_range(const char* name, double value, double lo, double hi,
                             double slack = 0.0) {
  if (!std::isfinite(value) || value < lo - slack || value > hi + slack) {
    throw Error(ErrorCode::OutOfDomain, std::string(name) + " = " + std::to_string(value) +
                                            " outside [" + std::to_string(lo) + ", " +
                                            std::to_string(hi) + "]");
  }
}

inline void require_unit_interval(const char* name, double value) {
  require_in_range(name, value, 0.0, 1.0);
}

}  // namespace entpot::detail
