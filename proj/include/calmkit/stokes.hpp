#ifndef CALMKIT_STOKES_HPP
#define CALMKIT_STOKES_HPP

#include <optional>

#include "calmkit/galerkin.hpp"

namespace calmkit {

struct TimeGrid {
  double t0 = 0.0;
  double t1 = 1.0;
  int steps = 0;  // number of intervals; nodes = steps + 1
};

/// Assembled Galerkin model of the viscous + convective operator pair on
/// the divergence-free basis:
///   A_ij        = nu * integral of grad-grad products (viscous part),
///   btensor     = convective trilinear form <B(u_a, u_b), u_c>,
///   phi         = forcing load vector,
///   trace_x/y   = basis traces sampled at the boundary quadrature nodes.
struct StokesModel {
  GalerkinBasis basis;
  double nu = 1.0;
  Matrix a;
  std::vector<double> btensor;  // flat n^3, index via b(i, j, k)
  Vector phi;
  Matrix trace_x, trace_y;  // n x bnodes
  std::optional<TimeGrid> time_grid;
  double skew_residual = 0.0;  // max |b_ijk + b_ikj| relative to scale

  double b(int i, int j, int k) const {
    int n = basis.n;
    return btensor[static_cast<std::size_t>((i * n + j) * n + k)];
  }

  /// <B(u, v), w> for coefficient vectors.
  double convection(const Vector& u, const Vector& v, const Vector& w) const;

  /// <B(u, u), .> contracted against the basis: the load of the convective
  /// term at state u.
  Vector convection_vector(const Vector& u) const;

  /// Trace of the field with coefficients u at boundary node q.
  Vec2 trace_at(const Vector& u, std::size_t q) const;

  double vnorm(const Vector& u) const;  // energy norm through the Gram matrix
};

/// Assembles the model; rejects quadrature that fails to reproduce the skew
/// symmetry of the convective form to 1e-8.
StokesModel assemble(const GalerkinBasis& basis, double nu,
                     const std::function<Vec2(const Vec2&)>& forcing,
                     std::optional<TimeGrid> time_grid = {});

struct C1Estimate {
  double value = 0.0;
  Vector w, v;  // certificate pair, unit energy norm
  bool widened = false;
};

/// Lower bound on c1 = sup over unit w, v of <B(w, v), w> by multi-start
/// alternating ascent, cross-checked by random probes of the perturbation
/// bound; probe ratios feed back into the estimate.
C1Estimate estimate_c1(const StokesModel& model, int samples,
                       std::uint64_t seed = 42);

/// theta-th power of the discrete trace norm sup { |trace u|_L2(boundary) :
/// |u|_V = 1 }, from the generalized eigenproblem of the boundary Gram
/// against the energy Gram.
double estimate_trace_norm(const StokesModel& model, double theta);

/// Boundary Gram of the traces projected on a fixed direction g:
/// Q_ab = integral over the boundary of (g . trace_a)(g . trace_b).
Matrix boundary_gram_projected(const StokesModel& model, const Vec2& g);

/// Structured-text model export; floating-point payloads round-trip
/// bit-exact. load_model rebuilds the basis from its descriptors and then
/// restores the assembled arrays verbatim.
void save_model(const StokesModel& model, const std::string& path);
StokesModel load_model(const std::string& path);

}  // namespace calmkit

#endif  // CALMKIT_STOKES_HPP
