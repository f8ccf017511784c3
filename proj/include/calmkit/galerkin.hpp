#ifndef CALMKIT_GALERKIN_HPP
#define CALMKIT_GALERKIN_HPP

#include <functional>
#include <string>
#include <vector>

#include "calmkit/quadrature.hpp"

namespace calmkit {

/// Smooth stream function on the unit square with closed-form derivatives
/// up to second order. The induced velocity field u = (df/dy, -df/dx) is
/// divergence-free identically; catalogue entries vanish on the boundary so
/// the normal velocity is zero while tangential traces stay nonzero.
struct StreamFunction {
  std::string name;
  std::function<double(double, double)> f, fx, fy, fxx, fxy, fyy;
};

/// Fixed catalogue of stream functions with linearly independent gradients.
const std::vector<StreamFunction>& stream_catalogue();

struct BoundaryNode {
  Vec2 x;
  double weight;
  int edge;  // 0 bottom, 1 right, 2 top, 3 left
};

/// Divergence-free velocity basis on Omega = (0,1)^2 with tensor Gauss
/// quadrature inside and per-edge Gauss quadrature on the boundary.
/// gram holds the grad-grad (energy) inner products, mass the L2 ones.
struct GalerkinBasis {
  int n = 0;
  std::vector<StreamFunction> fields;
  std::vector<int> catalogue_indices;
  int quad_order = 0;
  int boundary_quad_order = 0;

  std::vector<Vec2> qnodes;
  Vector qweights;
  std::vector<BoundaryNode> bnodes;

  Matrix gram;
  Matrix mass;
  double gram_min_eig = 0.0;
  double gram_condition = 0.0;

  Vec2 velocity(int i, const Vec2& x) const;
  /// Velocity gradient: row i is the derivative along x_i of the field.
  Eigen::Matrix2d velocity_gradient(int i, const Vec2& x) const;
};

/// First n catalogue entries; throws when the energy Gram matrix is not
/// numerically SPD (condition number above 1e12).
GalerkinBasis build_basis(int n, int quad_order, int boundary_quad_order = 0);

/// Explicit catalogue selection; duplicate indices produce a singular Gram
/// matrix and are rejected the same way.
GalerkinBasis build_basis_from(const std::vector<int>& catalogue_indices,
                               int quad_order, int boundary_quad_order = 0);

}  // namespace calmkit

#endif  // CALMKIT_GALERKIN_HPP
