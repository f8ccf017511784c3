#include "calmkit/quadrature.hpp"

#include <Eigen/Eigenvalues>

namespace calmkit {

Quadrature1D gauss_legendre_01(int n) {
  if (n < 1) throw Error("gauss_legendre_01: order must be >= 1");

  Matrix jacobi = Matrix::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    double b = k / std::sqrt(4.0 * k * k - 1.0);
    jacobi(k, k - 1) = b;
    jacobi(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(jacobi);
  if (es.info() != Eigen::Success)
    throw Error("gauss_legendre_01: eigensolver failed");

  Quadrature1D q;
  q.nodes.resize(n);
  q.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    // map [-1, 1] to [0, 1]
    q.nodes[i] = 0.5 * (es.eigenvalues()[i] + 1.0);
    double first = es.eigenvectors()(0, i);
    q.weights[i] = first * first;  // 2 * first^2, halved by the interval map
  }
  return q;
}

}  // namespace calmkit
