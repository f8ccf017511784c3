#include "calmkit/pointset.hpp"

namespace calmkit {

PointSet::PointSet(Norm norm, std::vector<Vector> points)
    : norm_(std::move(norm)), points_(std::move(points)) {
  for (const auto& p : points_) {
    if (p.size() != norm_.dim())
      throw DimensionError("PointSet: point dimension mismatch");
  }
}

ExtReal point_to_set_distance(const Vector& a, const PointSet& b) {
  if (a.size() != b.norm().dim())
    throw DimensionError("point_to_set_distance: dimension mismatch");
  if (b.empty()) return ExtReal::infinity();
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : b.points()) best = std::min(best, b.norm().distance(a, p));
  return ExtReal::finite(best);
}

ExtReal pompeiu_excess(const PointSet& a, const PointSet& b) {
  if (!a.norm().compatible(b.norm()))
    throw DimensionError("pompeiu_excess: incompatible ambient norms");
  if (b.empty()) return ExtReal::infinity();
  if (a.empty()) return ExtReal::finite(0.0);
  double worst = 0.0;
  for (const auto& p : a.points())
    worst = std::max(worst, point_to_set_distance(p, b).value());
  return ExtReal::finite(worst);
}

ExtReal hausdorff_distance(const PointSet& a, const PointSet& b) {
  return max(pompeiu_excess(a, b), pompeiu_excess(b, a));
}

}  // namespace calmkit
