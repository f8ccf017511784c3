#ifndef CALMKIT_FEASIBLE_SET_HPP
#define CALMKIT_FEASIBLE_SET_HPP

#include <cstdint>
#include <vector>

#include "calmkit/norm.hpp"

namespace calmkit {

/// Feasible set over coefficient vectors: an explicit finite grid, an
/// axis-aligned box (degenerate faces allowed, used to pin coordinates), or
/// a ball in the declared norm.
class FeasibleSet {
 public:
  enum class Kind { finite_grid, box, ball };

  static FeasibleSet finite_grid(std::vector<Vector> points, Norm norm);
  static FeasibleSet box(Vector lo, Vector hi, Norm norm);
  static FeasibleSet ball(Vector center, double radius, Norm norm);

  Kind kind() const { return kind_; }
  const Norm& norm() const { return norm_; }
  int dim() const { return norm_.dim(); }

  const std::vector<Vector>& grid_points() const;
  const Vector& box_lo() const;
  const Vector& box_hi() const;
  const Vector& ball_center() const;
  double ball_radius() const;

  bool contains(const Vector& x, double tol = 1e-12) const;
  Vector project(const Vector& x) const;
  Vector center() const;

  /// Deterministic boundary samples: grid sets return their points; boxes
  /// draw seeded uniform points on random faces; balls scale Halton cube
  /// points to the sphere.
  std::vector<Vector> sample_boundary(int count, std::uint64_t seed) const;

  /// Low-discrepancy interior cloud (Halton; rejection inside balls).
  std::vector<Vector> sample_interior(int count, std::uint64_t seed) const;

 private:
  FeasibleSet(Kind kind, Norm norm) : kind_(kind), norm_(std::move(norm)) {}

  Kind kind_;
  Norm norm_;
  std::vector<Vector> points_;
  Vector lo_, hi_;
  Vector center_;
  double radius_ = 0.0;
};

}  // namespace calmkit

#endif  // CALMKIT_FEASIBLE_SET_HPP
