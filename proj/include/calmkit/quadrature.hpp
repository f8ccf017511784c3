#ifndef CALMKIT_QUADRATURE_HPP
#define CALMKIT_QUADRATURE_HPP

#include "calmkit/common.hpp"

namespace calmkit {

struct Quadrature1D {
  Vector nodes;
  Vector weights;
};

/// Gauss-Legendre rule on [0, 1] via the Golub-Welsch eigendecomposition of
/// the Jacobi matrix; exact for polynomials of degree 2n - 1.
Quadrature1D gauss_legendre_01(int n);

}  // namespace calmkit

#endif  // CALMKIT_QUADRATURE_HPP
