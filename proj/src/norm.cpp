#include "calmkit/norm.hpp"

#include <Eigen/Cholesky>

namespace calmkit {

Norm Norm::euclidean(int dim) {
  if (dim <= 0) throw Error("Norm: dimension must be positive");
  Norm n;
  n.dim_ = dim;
  return n;
}

Norm Norm::weighted(Matrix w) {
  if (w.rows() != w.cols() || w.rows() == 0)
    throw Error("Norm: weight must be square and nonempty");
  if (!w.isApprox(w.transpose(), 1e-12))
    throw Error("Norm: weight must be symmetric");
  Eigen::LLT<Matrix> llt(w);
  if (llt.info() != Eigen::Success)
    throw Error("Norm: weight must be positive definite");
  Norm n;
  n.dim_ = static_cast<int>(w.rows());
  n.weight_ = std::make_shared<const Matrix>(std::move(w));
  return n;
}

const Matrix& Norm::weight() const {
  if (!weight_) throw Error("Norm: Euclidean norm has no weight matrix");
  return *weight_;
}

double Norm::operator()(const Vector& x) const {
  if (x.size() != dim_) throw DimensionError("Norm: dimension mismatch");
  if (!weight_) return x.norm();
  return std::sqrt(x.dot(*weight_ * x));
}

double Norm::distance(const Vector& a, const Vector& b) const {
  return (*this)(a - b);
}

bool Norm::compatible(const Norm& other) const {
  if (dim_ != other.dim_) return false;
  if (is_euclidean() != other.is_euclidean()) return false;
  if (is_euclidean()) return true;
  return weight_ == other.weight_ || weight_->isApprox(*other.weight_, 0.0);
}

}  // namespace calmkit
