#ifndef CALMKIT_NORM_HPP
#define CALMKIT_NORM_HPP

#include <memory>

#include "calmkit/common.hpp"

namespace calmkit {

/// Declared norm for an ambient coefficient space: Euclidean, or weighted by
/// an SPD matrix (used for discrete energy norms). Mixing incompatible norms
/// is rejected at operation time.
class Norm {
 public:
  static Norm euclidean(int dim);
  static Norm weighted(Matrix w);  // SPD; dimension taken from w

  int dim() const { return dim_; }
  bool is_euclidean() const { return weight_ == nullptr; }
  const Matrix& weight() const;

  double operator()(const Vector& x) const;
  double distance(const Vector& a, const Vector& b) const;
  bool compatible(const Norm& other) const;

 private:
  int dim_ = 0;
  std::shared_ptr<const Matrix> weight_;  // null means Euclidean
};

}  // namespace calmkit

#endif  // CALMKIT_NORM_HPP
