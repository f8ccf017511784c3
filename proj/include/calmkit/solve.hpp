#ifndef CALMKIT_SOLVE_HPP
#define CALMKIT_SOLVE_HPP

#include <optional>
#include <string>

#include "calmkit/feasible_set.hpp"
#include "calmkit/pointset.hpp"
#include "calmkit/trifunction.hpp"

namespace calmkit {

/// Epsilon-solution set of an equilibrium problem at a fixed parameter.
/// Every returned point u satisfies min over tested z of F(u,z,u;mu) >=
/// -tolerance; residuals record that minimum per point.
struct SolutionSet {
  enum class Certification { exact, sampled };

  PointSet points;
  double tolerance = 0.0;
  Vector mu;
  std::vector<double> residuals;
  Certification certification = Certification::exact;
  std::string diagnostic;
};

/// Exact brute force on a finite grid: u belongs to the output iff
/// F(u, z, u; mu) >= -tol for every grid point z.
SolutionSet solve_grid(const Trifunction& f, const FeasibleSet& k,
                       const Vector& mu, double tol);

/// Map G for problems in variational form F(u, z, u; mu) = <G(u; mu), z-u>.
using VariationalMap = std::function<Vector(const Vector&, const Vector&)>;

struct ProjectedOptions {
  double step = 0.5;
  double tol = 1e-10;
  int max_iter = 10000;
  int cloud_samples = 256;  // z-samples certifying the returned residual
  std::uint64_t seed = 20240501;
  std::optional<Vector> start;  // defaults to the center of K
};

/// Projected fixed-point refinement u+ = project_K(u + step * G(u; mu)),
/// stopping when the update falls below tol * step. Success returns a
/// singleton whose residual is certified by sampling z on the boundary of K
/// plus a low-discrepancy interior cloud; a stall returns an empty set with
/// a diagnostic. Iterate norms above 1e6 raise an error.
SolutionSet solve_projected_iteration(const VariationalMap& g,
                                      const FeasibleSet& k, const Vector& mu,
                                      const ProjectedOptions& opts);

/// Restricts s_mu to the ball around v_center of radius v_radius (in the
/// solution-set norm) and returns the Pompeiu excess against s_ref.
ExtReal measure_excess(const SolutionSet& s_mu, const SolutionSet& s_ref,
                       const Vector& v_center, const ExtReal& v_radius);

}  // namespace calmkit

#endif  // CALMKIT_SOLVE_HPP
