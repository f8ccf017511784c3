#ifndef CALMKIT_COMMON_HPP
#define CALMKIT_COMMON_HPP

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>

namespace calmkit {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Vec2 = Eigen::Vector2d;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Metric/vector operands live in different ambient spaces.
struct DimensionError : Error {
  using Error::Error;
};

/// The power-inequality inversion was requested outside its valid branches.
struct NotApplicableError : Error {
  using Error::Error;
};

/// Hypotheses of the Navier-Stokes calmness result fail for these inputs;
/// distinct from a valid "not calm" classification.
struct HypothesesFailError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

// Shared tolerance model for inequality checks: absolute 1e-9 plus
// relative 1e-9 * max(|lhs|, |rhs|).
inline bool leq_within(double lhs, double rhs, double abs_tol = 1e-9,
                       double rel_tol = 1e-9) {
  return lhs <=
         rhs + abs_tol + rel_tol * std::max(std::abs(lhs), std::abs(rhs));
}

inline bool eq_within(double a, double b, double abs_tol = 1e-9,
                      double rel_tol = 1e-9) {
  return std::abs(a - b) <=
         abs_tol + rel_tol * std::max(std::abs(a), std::abs(b));
}

inline Vector scalar_point(double x) {
  Vector v(1);
  v[0] = x;
  return v;
}

}  // namespace calmkit

#endif  // CALMKIT_COMMON_HPP
