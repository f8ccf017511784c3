#ifndef CALMKIT_PARTS_HPP
#define CALMKIT_PARTS_HPP

#include <cmath>

#include "calmkit/common.hpp"

namespace calmkit {

/// Positive/negative parts of a real: plus = d(a, R_-) = max(a, 0) and
/// minus = d(a, R_+) = max(-a, 0), so plus - minus == a exactly.
struct PartsPair {
  double plus;
  double minus;
};

inline PartsPair parts(double a) {
  if (!std::isfinite(a)) throw Error("parts: non-finite input");
  return {std::max(a, 0.0), std::max(-a, 0.0)};
}

}  // namespace calmkit

#endif  // CALMKIT_PARTS_HPP
