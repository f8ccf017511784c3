#include "calmkit/ns_problem.hpp"

#include <random>

namespace calmkit {

namespace {

int time_blocks(const StokesModel& model) {
  return model.time_grid ? model.time_grid->steps + 1 : 1;
}

std::vector<double> block_time_weights(const StokesModel& model) {
  if (!model.time_grid) return {1.0};
  const auto& tg = *model.time_grid;
  double dt = (tg.t1 - tg.t0) / tg.steps;
  std::vector<double> w(static_cast<std::size_t>(tg.steps) + 1, dt);
  w.front() = 0.5 * dt;
  w.back() = 0.5 * dt;
  return w;
}

double block_time(const StokesModel& model, int k) {
  if (!model.time_grid) return 0.0;
  const auto& tg = *model.time_grid;
  return tg.t0 + (tg.t1 - tg.t0) * k / tg.steps;
}

Eigen::Ref<const Vector> block(const Vector& u, int k, int n) {
  return u.segment(static_cast<Eigen::Index>(k) * n, n);
}

double boundary_integral(const StokesModel& model, const BoundaryControl& ctrl,
                         const Vector& u, const Vector& v) {
  if (!ctrl.eval)
    throw Error("boundary_functional: unregistered control form");
  int n = model.basis.n;
  int blocks = time_blocks(model);
  if (u.size() != n * blocks || v.size() != n * blocks)
    throw DimensionError("boundary_functional: state dimension");
  auto wts = block_time_weights(model);

  double acc = 0.0;
  for (int k = 0; k < blocks; ++k) {
    double t = block_time(model, k);
    Vector uk = block(u, k, n);
    Vector vk = block(v, k, n);
    double slab = 0.0;
    for (std::size_t q = 0; q < model.basis.bnodes.size(); ++q) {
      const auto& bn = model.basis.bnodes[q];
      slab += bn.weight *
              ctrl.eval(bn.x, t, model.trace_at(uk, q), model.trace_at(vk, q));
    }
    acc += wts[static_cast<std::size_t>(k)] * slab;
  }
  return acc;
}

}  // namespace

ControlFamily linear_constant_family(const Vec2& kappa_ref) {
  ControlFamily f;
  f.reference = Vector(kappa_ref);
  f.at = [](const Vector& c) {
    if (c.size() != 2)
      throw Error("linear_constant_family: coefficients must be in R^2");
    return BoundaryControl::linear_constant(Vec2(c[0], c[1]));
  };
  return f;
}

ControlFamily scaled_norm_family(double kappa_ref) {
  ControlFamily f;
  f.reference = scalar_point(kappa_ref);
  f.at = [](const Vector& c) {
    if (c.size() != 1)
      throw Error("scaled_norm_family: one coefficient expected");
    return BoundaryControl::clarke(
        std::make_shared<Superpotential>(Superpotential::scaled_norm(c[0])));
  };
  return f;
}

ControlFamily bilinear_family(const Vec2& g, double kappa_ref) {
  ControlFamily f;
  f.reference = scalar_point(kappa_ref);
  f.at = [g](const Vector& c) {
    if (c.size() != 1)
      throw Error("bilinear_family: one coefficient expected");
    return BoundaryControl::bilinear(g, c[0]);
  };
  return f;
}

NsProblem make_ns_problem(StokesModel model, ControlFamily family,
                          FeasibleSet k) {
  if (!family.at) throw Error("make_ns_problem: missing control family");
  if (k.dim() != state_dimension(model))
    throw DimensionError("make_ns_problem: feasible set dimension mismatch");
  BoundaryControl mu = family.at(family.reference);
  return NsProblem{std::move(model), std::move(family), std::move(mu),
                   std::move(k)};
}

int state_dimension(const StokesModel& model) {
  return model.basis.n * time_blocks(model);
}

Norm energy_norm(const StokesModel& model) {
  if (!model.time_grid) return Norm::weighted(model.basis.gram);
  int n = model.basis.n;
  int blocks = time_blocks(model);
  auto wts = block_time_weights(model);
  Matrix w = Matrix::Zero(n * blocks, n * blocks);
  for (int k = 0; k < blocks; ++k)
    w.block(static_cast<Eigen::Index>(k) * n, static_cast<Eigen::Index>(k) * n,
            n, n) = wts[static_cast<std::size_t>(k)] * model.basis.gram;
  return Norm::weighted(std::move(w));
}

double time_derivative_pairing(const StokesModel& model, const Vector& u,
                               const Vector& v) {
  if (!model.time_grid) return 0.0;
  int n = model.basis.n;
  int blocks = time_blocks(model);
  if (u.size() != n * blocks || v.size() != n * blocks)
    throw DimensionError("time_derivative_pairing: stacked dimension");
  double acc = 0.0;
  for (int k = 0; k + 1 < blocks; ++k) {
    Vector du = block(u, k + 1, n) - block(u, k, n);
    Vector mv = 0.5 * (block(v, k + 1, n) + block(v, k, n));
    acc += du.dot(model.basis.mass * mv);
  }
  return acc;
}

double boundary_functional(const NsProblem& problem,
                           const BoundaryControl& ctrl, const Vector& u,
                           const Vector& v) {
  return boundary_integral(problem.model, ctrl, u, v);
}

double boundary_functional(const NsProblem& problem, const Vector& u,
                           const Vector& v) {
  return boundary_integral(problem.model, problem.mu, u, v);
}

MixedPair ns_mixed_pair(const NsProblem& problem) {
  // Captures copy the model and family: the pair may outlive the problem.
  StokesModel model = problem.model;
  ControlFamily family = problem.family;
  int n = model.basis.n;
  int blocks = time_blocks(model);
  auto wts = block_time_weights(model);

  MixedPair pair;
  pair.f.diagonal_zero = true;
  pair.f.eval = [model, n, blocks, wts](const Vector& u, const Vector& v,
                                        const Vector&) {
    double acc = 0.0;
    for (int k = 0; k < blocks; ++k) {
      Vector w = block(v, k, n) - block(u, k, n);
      acc += wts[static_cast<std::size_t>(k)] *
             w.dot(model.a * block(u, k, n));
    }
    if (model.time_grid) acc += time_derivative_pairing(model, u, v - u);
    return acc;
  };

  pair.g.eval = [model, family, n, blocks, wts](const Vector& u,
                                                const Vector& v,
                                                const Vector& mu_coeffs) {
    double acc = 0.0;
    for (int k = 0; k < blocks; ++k) {
      Vector uk = block(u, k, n);
      Vector w = block(v, k, n) - uk;
      acc += wts[static_cast<std::size_t>(k)] *
             (model.convection(uk, uk, w) - model.phi.dot(w));
    }
    BoundaryControl ctrl = family.at(mu_coeffs);
    acc += boundary_integral(model, ctrl, u, v - u);
    return acc;
  };
  return pair;
}

Trifunction ns_trifunction(const NsProblem& problem) {
  return mixed_trifunction(ns_mixed_pair(problem),
                           std::make_shared<FeasibleSet>(problem.k));
}

CZetaProfile c_zeta(const NsProblem& problem, const Vector& u_ref, double zeta,
                    const std::vector<double>& radii, int samples_per_radius,
                    std::uint64_t seed) {
  if (radii.size() < 2) throw Error("c_zeta: at least two radii required");
  for (std::size_t i = 1; i < radii.size(); ++i)
    if (!(radii[i] < radii[i - 1]))
      throw Error("c_zeta: radii must decrease strictly");
  if (samples_per_radius < 16)
    throw Error("c_zeta: at least 16 samples per radius");
  const Norm& norm = problem.k.norm();
  int dim = problem.k.dim();
  if (u_ref.size() != dim) throw DimensionError("c_zeta: state dimension");

  // Directions along degenerate box coordinates (pinned initial blocks)
  // leave the feasible affine subspace; mask them out.
  Vector free_mask = Vector::Ones(dim);
  if (problem.k.kind() == FeasibleSet::Kind::box) {
    for (int i = 0; i < dim; ++i)
      if (problem.k.box_hi()[i] - problem.k.box_lo()[i] <= 0.0)
        free_mask[i] = 0.0;
  }

  // Sphere directions: equally spaced on the circle in dimension two,
  // seeded Gaussian otherwise.
  std::vector<Vector> dirs;
  dirs.reserve(static_cast<std::size_t>(samples_per_radius));
  if (dim == 2 && free_mask.sum() == 2.0) {
    for (int i = 0; i < samples_per_radius; ++i) {
      double ang = 2.0 * M_PI * i / samples_per_radius;
      Vector d(2);
      d << std::cos(ang), std::sin(ang);
      dirs.push_back(std::move(d));
    }
  } else {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int i = 0; i < samples_per_radius; ++i) {
      Vector d(dim);
      for (int j = 0; j < dim; ++j) d[j] = gauss(rng) * free_mask[j];
      dirs.push_back(std::move(d));
    }
  }

  CZetaProfile profile;
  int populated = 0;
  for (double radius : radii) {
    double best = -std::numeric_limits<double>::infinity();
    bool any = false;
    for (const auto& d : dirs) {
      double dn = norm(d);
      if (dn == 0.0) continue;
      Vector v = u_ref + (radius / dn) * d;
      if (!problem.k.contains(v, 1e-9)) {
        ++profile.infeasible_skipped;
        continue;
      }
      double sum = boundary_functional(problem, u_ref, v - u_ref) +
                   boundary_functional(problem, v, u_ref - v);
      best = std::max(best, sum / std::pow(radius, zeta));
      any = true;
    }
    profile.radii.push_back(radius);
    profile.max_quotients.push_back(
        any ? best : std::numeric_limits<double>::quiet_NaN());
    if (any) ++populated;
  }
  if (populated == 0) throw Error("c_zeta: all samples infeasible");

  double estimate = -std::numeric_limits<double>::infinity();
  int taken = 0;
  for (auto it = profile.max_quotients.rbegin();
       it != profile.max_quotients.rend() && taken < 2; ++it) {
    if (std::isnan(*it)) continue;
    estimate = std::max(estimate, *it);
    ++taken;
  }
  profile.estimate = estimate;
  return profile;
}

NsCertificate ns_certificate(const NsProblem& problem, const Vector& u_ref,
                             double rho, double tau,
                             const NsCertOptions& opts) {
  const StokesModel& model = problem.model;
  double theta = problem.mu.theta;
  Norm norm = energy_norm(model);
  if (u_ref.size() != state_dimension(model))
    throw DimensionError("ns_certificate: state dimension");
  if (!(norm(u_ref) < rho))
    throw HypothesesFailError("ns_certificate: |u_ref| < rho fails");

  NsCertificate out;
  out.rho = rho;
  out.tau = tau;
  out.theta_zero = (theta == 0.0);

  out.c1 = estimate_c1(model, opts.c1_samples, opts.seed).value;
  if (!(rho * out.c1 < model.nu))
    throw HypothesesFailError("ns_certificate: rho * c1 < nu fails");
  out.c0 = estimate_trace_norm(model, theta);

  auto profile = c_zeta(problem, u_ref, tau, opts.radii,
                        opts.samples_per_radius, opts.seed);
  out.monotone_near = profile.estimate <= opts.monotone_tol;

  NsBranchInputs branch;
  branch.monotone_near = out.monotone_near;
  if (tau == 2.0) {
    branch.c2 = profile.estimate;
    out.c2 = profile.estimate;
  } else {
    branch.c_tau = profile.estimate;
    out.c_tau = profile.estimate;
  }

  auto h = ns_constants(model.nu, rho, out.c1, out.c0, theta, tau, branch);
  out.constants = h;
  out.case_label = classify_case(h);
  if (out.case_label != CalmnessCase::not_calm) out.cert = certificate(h);
  return out;
}

namespace {

// Kernel of the control in its direction slot, available when the control
// is linear or the Clarke derivative of a smooth quadratic.
std::function<Vec2(const Vec2&, double, const Vec2&)> smooth_kernel(
    const BoundaryControl& ctrl) {
  if (ctrl.form == BoundaryControl::Form::linear && ctrl.linear_kernel)
    return ctrl.linear_kernel;
  if (ctrl.form == BoundaryControl::Form::clarke_of_j && ctrl.potential &&
      ctrl.potential->kind == Superpotential::Kind::smooth_quadratic) {
    double kappa = ctrl.potential->coefficients[0];
    return [kappa](const Vec2&, double, const Vec2& r) {
      return Vec2(kappa * r);
    };
  }
  throw Error(
      "solve_ns: projected iteration needs a control smooth in its "
      "direction slot");
}

}  // namespace

SolutionSet solve_ns(const NsProblem& problem, const Vector& mu_coeffs,
                     double tol, NsStrategy strategy,
                     const NsSolveOptions& opts) {
  const StokesModel& model = problem.model;
  int n = model.basis.n;
  int blocks = time_blocks(model);
  auto wts = block_time_weights(model);

  if (strategy == NsStrategy::grid) {
    auto f = ns_trifunction(problem);
    return solve_grid(f, problem.k, mu_coeffs, tol);
  }

  BoundaryControl ctrl = problem.family.at(mu_coeffs);
  auto kernel = smooth_kernel(ctrl);

  VariationalMap g = [&model, kernel, n, blocks, wts](const Vector& u,
                                                      const Vector&) {
    Vector grad = Vector::Zero(u.size());
    for (int k = 0; k < blocks; ++k) {
      Vector uk = block(u, k, n);
      Vector gk = model.a * uk + model.convection_vector(uk) - model.phi;
      // boundary term: integral of kernel(x, t, trace u) . trace of basis
      double t = block_time(model, k);
      for (std::size_t q = 0; q < model.basis.bnodes.size(); ++q) {
        const auto& node = model.basis.bnodes[q];
        Vec2 kval = kernel(node.x, t, model.trace_at(uk, q));
        auto qe = static_cast<Eigen::Index>(q);
        gk += node.weight * (kval[0] * model.trace_x.col(qe) +
                             kval[1] * model.trace_y.col(qe));
      }
      grad.segment(static_cast<Eigen::Index>(k) * n, n) =
          wts[static_cast<std::size_t>(k)] * gk;
    }
    if (model.time_grid) {
      const Matrix& mass = model.basis.mass;
      for (int k = 0; k < blocks; ++k) {
        Vector contrib = Vector::Zero(n);
        if (k + 1 < blocks)
          contrib += 0.5 * (mass * (block(u, k + 1, n) - block(u, k, n)));
        if (k > 0)
          contrib += 0.5 * (mass * (block(u, k, n) - block(u, k - 1, n)));
        grad.segment(static_cast<Eigen::Index>(k) * n, n) += contrib;
      }
    }
    return Vector(-grad);
  };

  ProjectedOptions popts;
  popts.step = opts.step;
  popts.tol = tol;
  popts.max_iter = opts.max_iter;
  popts.cloud_samples = opts.cloud_samples;
  popts.seed = opts.seed;
  popts.start = opts.start;
  return solve_projected_iteration(g, problem.k, mu_coeffs, popts);
}

}  // namespace calmkit
