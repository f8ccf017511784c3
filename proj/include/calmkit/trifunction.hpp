#ifndef CALMKIT_TRIFUNCTION_HPP
#define CALMKIT_TRIFUNCTION_HPP

#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "calmkit/feasible_set.hpp"
#include "calmkit/norm.hpp"

namespace calmkit {

using PointPair = std::pair<Vector, Vector>;

/// Parametric bifunction (u, v; mu) -> real. diagonal_zero asserts
/// eval(u, u, mu) == 0 for all u, mu; required wherever a bifunction is
/// lifted into a trifunction.
struct Bifunction {
  std::function<double(const Vector&, const Vector&, const Vector&)> eval;
  bool diagonal_zero = false;
};

/// Parametric trifunction (u, v, w; mu) -> real. Equilibrium solutions of
/// the induced problem satisfy eval(u, z, u, mu) >= 0 for all feasible z.
struct Trifunction {
  std::function<double(const Vector&, const Vector&, const Vector&,
                       const Vector&)>
      eval;
  std::shared_ptr<const FeasibleSet> feasible_set;  // optional
};

/// Monotone part f (diagonal_zero required) plus arbitrary part g of a
/// mixed equilibrium problem.
struct MixedPair {
  Bifunction f;
  Bifunction g;
};

/// F(u, v, w; mu) = f(w, v; mu) - f(w, u; mu). The lift is monotone as a
/// trifunction exactly when f is monotone as a bifunction.
Trifunction lift_bifunction(const Bifunction& f,
                            std::shared_ptr<const FeasibleSet> domain = {});

/// F(u, v, w; mu) = f(w, v; mu) - f(w, u; mu) + g(u, v; mu), so that
/// F(u, v, u; mu) = f(u, v; mu) + g(u, v; mu).
Trifunction mixed_trifunction(const MixedPair& pair,
                              std::shared_ptr<const FeasibleSet> domain = {});

struct MonotonicityReport {
  bool holds = false;
  double worst_violation = 0.0;
};

/// Sample-based check of F(u, v, u; mu) <= F(u, v, v; mu) over the given
/// pairs; worst_violation is the largest observed difference.
MonotonicityReport check_monotone(const Trifunction& f,
                                  const std::vector<PointPair>& pairs,
                                  const Vector& mu, double tol = 1e-9);

/// Sample-based check of modulus * d(u,v)^exponent <= F(u,v,v) - F(u,v,u).
MonotonicityReport check_strongly_monotone(const Trifunction& f,
                                           double modulus, double exponent,
                                           const std::vector<PointPair>& pairs,
                                           const Vector& mu, const Norm& norm,
                                           double tol = 1e-9);

}  // namespace calmkit

#endif  // CALMKIT_TRIFUNCTION_HPP
