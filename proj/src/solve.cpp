#include "calmkit/solve.hpp"

namespace calmkit {

SolutionSet solve_grid(const Trifunction& f, const FeasibleSet& k,
                       const Vector& mu, double tol) {
  if (k.kind() != FeasibleSet::Kind::finite_grid)
    throw Error("solve_grid: feasible set must be a finite grid");
  if (tol < 0.0) throw Error("solve_grid: tolerance must be nonnegative");
  const auto& grid = k.grid_points();

  std::vector<Vector> solutions;
  std::vector<double> residuals;
  for (const auto& u : grid) {
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& z : grid) worst = std::min(worst, f.eval(u, z, u, mu));
    if (worst >= -tol) {
      solutions.push_back(u);
      residuals.push_back(worst);
    }
  }

  SolutionSet s{PointSet(k.norm(), std::move(solutions)), tol, mu,
                std::move(residuals), SolutionSet::Certification::exact, ""};
  return s;
}

SolutionSet solve_projected_iteration(const VariationalMap& g,
                                      const FeasibleSet& k, const Vector& mu,
                                      const ProjectedOptions& opts) {
  if (!g) throw Error("solve_projected_iteration: missing variational map");
  if (k.kind() == FeasibleSet::Kind::finite_grid)
    throw Error("solve_projected_iteration: needs a box or ball feasible set");
  if (!(opts.step > 0.0)) throw Error("solve_projected_iteration: step <= 0");

  Vector u = opts.start.value_or(k.center());
  if (u.size() != k.dim())
    throw DimensionError("solve_projected_iteration: start dimension");
  u = k.project(u);

  bool converged = false;
  for (int it = 0; it < opts.max_iter; ++it) {
    Vector next = k.project(u + opts.step * g(u, mu));
    double moved = k.norm().distance(next, u);
    u = std::move(next);
    if (u.norm() > 1e6)
      throw Error("solve_projected_iteration: iterates diverge");
    if (moved <= opts.tol * opts.step) {
      converged = true;
      break;
    }
  }

  if (!converged) {
    SolutionSet empty{PointSet(k.norm()), opts.tol, mu, {},
                      SolutionSet::Certification::sampled,
                      "stalled before reaching the update tolerance"};
    return empty;
  }

  // Certify the residual by sampling the quantifier over z.
  double residual = std::numeric_limits<double>::infinity();
  auto probe = [&](const std::vector<Vector>& zs) {
    for (const auto& z : zs) residual = std::min(residual, g(u, mu).dot(z - u));
  };
  probe(k.sample_boundary(opts.cloud_samples / 2, opts.seed));
  probe(k.sample_interior(opts.cloud_samples - opts.cloud_samples / 2,
                          opts.seed + 1));

  SolutionSet s{PointSet(k.norm(), {u}),
                opts.tol,
                mu,
                {residual},
                SolutionSet::Certification::sampled,
                ""};
  return s;
}

ExtReal measure_excess(const SolutionSet& s_mu, const SolutionSet& s_ref,
                       const Vector& v_center, const ExtReal& v_radius) {
  const Norm& norm = s_mu.points.norm();
  if (!norm.compatible(s_ref.points.norm()))
    throw DimensionError("measure_excess: incompatible ambient norms");
  if (v_center.size() != norm.dim())
    throw DimensionError("measure_excess: center dimension mismatch");

  std::vector<Vector> kept;
  for (const auto& p : s_mu.points.points()) {
    if (v_radius.is_infinite() ||
        norm.distance(p, v_center) <= v_radius.value())
      kept.push_back(p);
  }
  return pompeiu_excess(PointSet(norm, std::move(kept)), s_ref.points);
}

}  // namespace calmkit
