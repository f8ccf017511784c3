#ifndef CALMKIT_NS_PROBLEM_HPP
#define CALMKIT_NS_PROBLEM_HPP

#include "calmkit/boundary_control.hpp"
#include "calmkit/calmness.hpp"
#include "calmkit/solve.hpp"

namespace calmkit {

/// Parametrized family of boundary controls; the parameter rays of the
/// harness live in this coefficient space.
struct ControlFamily {
  std::function<BoundaryControl(const Vector&)> at;
  Vector reference;
};

/// mu = kappa . s with coefficients kappa in R^2.
ControlFamily linear_constant_family(const Vec2& kappa_ref);

/// mu = j0 of kappa |r| with the scalar kappa as coefficient.
ControlFamily scaled_norm_family(double kappa_ref);

/// mu = kappa (g.r)(g.s) with the scalar kappa as coefficient.
ControlFamily bilinear_family(const Vec2& g, double kappa_ref);

/// Discretized flow problem with boundary control. Stationary coefficient
/// vectors have basis dimension; evolution vectors stack one block per time
/// node with the initial block pinned by the feasible set.
struct NsProblem {
  StokesModel model;
  ControlFamily family;
  BoundaryControl mu;  // family.at(family.reference)
  FeasibleSet k;
};

NsProblem make_ns_problem(StokesModel model, ControlFamily family,
                          FeasibleSet k);

int state_dimension(const StokesModel& model);

/// Energy norm of the state space: the Gram-weighted norm, stacked with
/// trapezoid time weights for evolution models.
Norm energy_norm(const StokesModel& model);

/// Discrete time-derivative pairing over the stacked blocks; telescopes
/// exactly to (|u(t1)|_H^2 - |u(t0)|_H^2) / 2 on the diagonal.
double time_derivative_pairing(const StokesModel& model, const Vector& u,
                               const Vector& v);

/// Boundary functional of a control: the boundary-time integral of
/// mu(x, t, trace u; trace v).
double boundary_functional(const NsProblem& problem,
                           const BoundaryControl& ctrl, const Vector& u,
                           const Vector& v);
double boundary_functional(const NsProblem& problem, const Vector& u,
                           const Vector& v);

/// The mixed split of the flow problem: f collects the viscous (and time
/// derivative) terms, g the convective, boundary, and forcing terms.
MixedPair ns_mixed_pair(const NsProblem& problem);

/// mixed_trifunction of the pair, carrying the feasible set.
Trifunction ns_trifunction(const NsProblem& problem);

struct CZetaProfile {
  std::vector<double> radii;
  std::vector<double> max_quotients;
  double estimate = 0.0;  // max over the two smallest populated radii
  int infeasible_skipped = 0;
};

/// Relaxed-monotonicity limsup estimate: on spheres of shrinking radius
/// around the reference solution, the max of
/// (G_mu(u_ref; v-u_ref) + G_mu(v; u_ref-v)) / |v-u_ref|^zeta.
CZetaProfile c_zeta(const NsProblem& problem, const Vector& u_ref, double zeta,
                    const std::vector<double>& radii, int samples_per_radius,
                    std::uint64_t seed = 2024);

struct NsCertOptions {
  std::vector<double> radii = {1e-1, 3e-2, 1e-2, 3e-3, 1e-3, 3e-4, 1e-4};
  int samples_per_radius = 64;
  std::uint64_t seed = 2024;
  int c1_samples = 64;
  double monotone_tol = 1e-10;
};

/// Certificate plus the constants it was built from. A not_calm label with
/// no certificate is a valid outcome, distinct from failed hypotheses
/// (which throw HypothesesFailError).
struct NsCertificate {
  CalmnessCase case_label = CalmnessCase::not_calm;
  std::optional<CalmnessCertificate> cert;
  std::optional<HolderConstants> constants;
  double c1 = 0.0;
  double c0 = 0.0;
  double rho = 0.0;
  double tau = 0.0;
  std::optional<double> c2;
  std::optional<double> c_tau;
  bool monotone_near = false;
  bool theta_zero = false;
};

NsCertificate ns_certificate(const NsProblem& problem, const Vector& u_ref,
                             double rho, double tau,
                             const NsCertOptions& opts = {});

enum class NsStrategy { grid, projected_iteration };

struct NsSolveOptions {
  double step = 0.5;
  int max_iter = 20000;
  int cloud_samples = 256;
  std::uint64_t seed = 20240501;
  std::optional<Vector> start;
};

/// Solves the flow problem at the given control coefficients. The grid
/// strategy enumerates a finite feasible grid and admits any control; the
/// projected iteration needs the control smooth in its direction slot
/// (linear forms, or Clarke controls of smooth quadratics).
SolutionSet solve_ns(const NsProblem& problem, const Vector& mu_coeffs,
                     double tol, NsStrategy strategy,
                     const NsSolveOptions& opts = {});

}  // namespace calmkit

#endif  // CALMKIT_NS_PROBLEM_HPP
