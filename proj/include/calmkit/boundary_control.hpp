#ifndef CALMKIT_BOUNDARY_CONTROL_HPP
#define CALMKIT_BOUNDARY_CONTROL_HPP

#include <memory>

#include "calmkit/stokes.hpp"
#include "calmkit/superpotential.hpp"

namespace calmkit {

/// Boundary control mu(x, t, r; s): the parameter of the
/// hemivariational-like inequality. r is the boundary trace of the state,
/// s the trace of the test direction. The structural form drives both the
/// admissible solvers and the distance formula; theta is the exponent of
/// the |s|-weight in the parameter metric.
struct BoundaryControl {
  enum class Form { general, positively_homogeneous, linear, clarke_of_j };

  Form form = Form::general;
  double theta = 1.0;
  std::function<double(const Vec2&, double, const Vec2&, const Vec2&)> eval;

  // linear form only: mu(x,t,r;s) = kernel(x,t,r) . s
  std::function<Vec2(const Vec2&, double, const Vec2&)> linear_kernel;
  bool kernel_constant = false;  // kernel independent of (x, t)

  std::shared_ptr<const Superpotential> potential;  // clarke_of_j only

  /// mu = kappa . s, independent of (x, t, r).
  static BoundaryControl linear_constant(const Vec2& kappa);

  /// mu = kappa (g.r)(g.s): linear in s with an r-dependent kernel.
  static BoundaryControl bilinear(const Vec2& g, double kappa);

  /// mu = j0(r; s) of a registered superpotential (positively homogeneous
  /// in s by construction).
  static BoundaryControl clarke(std::shared_ptr<const Superpotential> j);

  static BoundaryControl general_form(
      double theta,
      std::function<double(const Vec2&, double, const Vec2&, const Vec2&)> eval);
};

/// Discretization grids for the inf-sup parameter distance.
struct DistanceGrids {
  std::vector<double> rho_grid;  // subset of (0, 1]
  std::vector<Vec2> r_grid;
  std::vector<Vec2> s_grid;  // magnitudes within (0, 1]

  static DistanceGrids defaults(int s_directions = 16);
};

/// Metric on the control space:
///   general: sqrt of the boundary-time integral of
///            inf over rho of sup over r, 0 < |s| <= rho of
///            |s|^{-2 theta} |mu - mu_ref|^2,
///   positively homogeneous (and Clarke) controls: the sup runs over
///            0 < |s| <= 1 only,
///   linear: pointwise kernel distance sup over r of |k - k_ref|,
///   linear with constant kernels: closed form
///            sqrt(mes(boundary x time)) * sup over r of |k - k_ref|.
double parameter_distance(const BoundaryControl& mu,
                          const BoundaryControl& mu_ref,
                          const DistanceGrids& grids,
                          const StokesModel& model);

struct M3Report {
  bool holds = true;
  double worst_gap = 0.0;  // max of |mu - mu_ref| - phi |s|^theta
};

/// Verifies the metric-compatibility bound |mu - mu_ref| <= phi(x,t) |s|^theta
/// at every boundary quadrature node for small s.
M3Report verify_m3(const BoundaryControl& mu, const BoundaryControl& mu_ref,
                   const std::function<double(const Vec2&, double)>& phi,
                   const StokesModel& model,
                   const std::vector<Vec2>& r_samples,
                   const std::vector<Vec2>& s_samples);

}  // namespace calmkit

#endif  // CALMKIT_BOUNDARY_CONTROL_HPP
