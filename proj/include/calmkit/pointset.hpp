#ifndef CALMKIT_POINTSET_HPP
#define CALMKIT_POINTSET_HPP

#include <vector>

#include "calmkit/extreal.hpp"
#include "calmkit/norm.hpp"

namespace calmkit {

/// Finite point sample in a metric space given by a declared norm. May be
/// empty; duplicates are allowed and do not affect any metric output.
class PointSet {
 public:
  explicit PointSet(Norm norm, std::vector<Vector> points = {});

  const Norm& norm() const { return norm_; }
  const std::vector<Vector>& points() const { return points_; }
  bool empty() const { return points_.empty(); }
  std::size_t size() const { return points_.size(); }

 private:
  Norm norm_;
  std::vector<Vector> points_;
};

/// d(a, B) = inf over b in B of d(a, b); +infinity for empty B.
ExtReal point_to_set_distance(const Vector& a, const PointSet& b);

/// Pompeiu excess e(A, B) = sup over a in A of d(a, B), with the
/// conventions e(empty, B) = 0 for nonempty B and e(A, empty) = +infinity
/// for every A, the empty set included.
ExtReal pompeiu_excess(const PointSet& a, const PointSet& b);

/// h(A, B) = max(e(A, B), e(B, A)).
ExtReal hausdorff_distance(const PointSet& a, const PointSet& b);

}  // namespace calmkit

#endif  // CALMKIT_POINTSET_HPP
