#ifndef CALMKIT_SUPERPOTENTIAL_HPP
#define CALMKIT_SUPERPOTENTIAL_HPP

#include <functional>
#include <string>

#include "calmkit/common.hpp"

namespace calmkit {

/// Locally Lipschitz boundary superpotential j on R^2 together with a
/// registered closed form of its generalized directional derivative
/// j0(r; s) = limsup_{w -> r, t -> 0+} (j(w + t s) - j(w)) / t.
///
/// Registered closed forms must agree with clarke_limsup before use; the
/// sampled limsup is the authority at kinks.
struct Superpotential {
  enum class Kind { smooth_quadratic, scaled_norm, custom };

  Kind kind = Kind::custom;
  Vector coefficients;
  std::function<double(const Vec2&, const Vec2&)> j0;  // closed form
  std::function<double(const Vec2&)> j_raw;            // underlying potential
  double lipschitz_rank = 0.0;

  /// j(r) = kappa/2 * |r|^2; j0(r; s) = kappa * r.s. Locally Lipschitz, so
  /// the stored rank is taken on |r| <= radius.
  static Superpotential smooth_quadratic(double kappa, double radius = 2.0);

  /// j(r) = kappa * |r|; j0(r; s) = kappa (r/|r|).s away from the kink and
  /// |kappa| |s| at r = 0 (both signs of kappa; value fixed by the limsup).
  static Superpotential scaled_norm(double kappa);

  static Superpotential custom(std::function<double(const Vec2&, const Vec2&)> j0,
                               std::function<double(const Vec2&)> j_raw,
                               double lipschitz_rank);
};

/// Closed-form evaluation; throws for kinds without a registered form.
double j0_eval(const Superpotential& j, const Vec2& r, const Vec2& s);

struct LimsupOptions {
  double t_max = 1e-6;
  double t_min = 1e-8;
  int t_count = 8;
  int direction_count = 8;  // probe directions for the w -> r sweep
};

/// Finite-difference limsup oracle: max over shrinking t and over w in a
/// ball of radius O(t) around r of the difference quotient, reported as the
/// max over the two smallest t levels.
double clarke_limsup(const std::function<double(const Vec2&)>& j, const Vec2& r,
                     const Vec2& s, const LimsupOptions& opts = {});

}  // namespace calmkit

#endif  // CALMKIT_SUPERPOTENTIAL_HPP
