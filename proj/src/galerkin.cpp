#include "calmkit/galerkin.hpp"

#include <Eigen/Eigenvalues>

namespace calmkit {

namespace {

StreamFunction sine_mode(int kx, int ky) {
  const double pi = M_PI;
  double a = kx * pi, b = ky * pi;
  StreamFunction s;
  s.name = "sin(" + std::to_string(kx) + "pi x) sin(" + std::to_string(ky) +
           "pi y)";
  s.f = [a, b](double x, double y) { return std::sin(a * x) * std::sin(b * y); };
  s.fx = [a, b](double x, double y) {
    return a * std::cos(a * x) * std::sin(b * y);
  };
  s.fy = [a, b](double x, double y) {
    return b * std::sin(a * x) * std::cos(b * y);
  };
  s.fxx = [a, b](double x, double y) {
    return -a * a * std::sin(a * x) * std::sin(b * y);
  };
  s.fxy = [a, b](double x, double y) {
    return a * b * std::cos(a * x) * std::cos(b * y);
  };
  s.fyy = [a, b](double x, double y) {
    return -b * b * std::sin(a * x) * std::sin(b * y);
  };
  return s;
}

// Products p(x) q(y) of low-order polynomials vanishing at 0 and 1.
struct Poly1D {
  std::function<double(double)> f, d1, d2;
};

Poly1D bubble1d() {
  return {[](double t) { return t * (1.0 - t); },
          [](double t) { return 1.0 - 2.0 * t; }, [](double) { return -2.0; }};
}

Poly1D bubble1d_weighted() {  // t^2 (1 - t)
  return {[](double t) { return t * t * (1.0 - t); },
          [](double t) { return 2.0 * t - 3.0 * t * t; },
          [](double t) { return 2.0 - 6.0 * t; }};
}

Poly1D bubble1d_sine() {  // t (1 - t) sin(pi t)
  const double pi = M_PI;
  return {[pi](double t) { return t * (1.0 - t) * std::sin(pi * t); },
          [pi](double t) {
            return (1.0 - 2.0 * t) * std::sin(pi * t) +
                   pi * t * (1.0 - t) * std::cos(pi * t);
          },
          [pi](double t) {
            return -2.0 * std::sin(pi * t) +
                   2.0 * pi * (1.0 - 2.0 * t) * std::cos(pi * t) -
                   pi * pi * t * (1.0 - t) * std::sin(pi * t);
          }};
}

StreamFunction separable(std::string name, Poly1D p, Poly1D q) {
  StreamFunction s;
  s.name = std::move(name);
  s.f = [p, q](double x, double y) { return p.f(x) * q.f(y); };
  s.fx = [p, q](double x, double y) { return p.d1(x) * q.f(y); };
  s.fy = [p, q](double x, double y) { return p.f(x) * q.d1(y); };
  s.fxx = [p, q](double x, double y) { return p.d2(x) * q.f(y); };
  s.fxy = [p, q](double x, double y) { return p.d1(x) * q.d1(y); };
  s.fyy = [p, q](double x, double y) { return p.f(x) * q.d2(y); };
  return s;
}

}  // namespace

const std::vector<StreamFunction>& stream_catalogue() {
  // The first two entries are asymmetric, so their total boundary trace
  // integrals are nonzero and constant boundary kernels act on them.
  static const std::vector<StreamFunction> catalogue = [] {
    std::vector<StreamFunction> c;
    c.push_back(
        separable("x^2(1-x) y(1-y)", bubble1d_weighted(), bubble1d()));
    c.push_back(
        separable("x(1-x) y^2(1-y)", bubble1d(), bubble1d_weighted()));
    c.push_back(sine_mode(1, 1));
    c.push_back(separable("x(1-x) y(1-y)", bubble1d(), bubble1d()));
    c.push_back(sine_mode(2, 1));
    c.push_back(sine_mode(1, 2));
    c.push_back(sine_mode(2, 2));
    c.push_back(
        separable("x(1-x)sin(pi x) y(1-y)", bubble1d_sine(), bubble1d()));
    return c;
  }();
  return catalogue;
}

Vec2 GalerkinBasis::velocity(int i, const Vec2& x) const {
  const auto& s = fields[static_cast<std::size_t>(i)];
  return Vec2(s.fy(x[0], x[1]), -s.fx(x[0], x[1]));
}

Eigen::Matrix2d GalerkinBasis::velocity_gradient(int i, const Vec2& x) const {
  const auto& s = fields[static_cast<std::size_t>(i)];
  Eigen::Matrix2d g;
  // row = derivative direction, column = velocity component
  g(0, 0) = s.fxy(x[0], x[1]);
  g(0, 1) = -s.fxx(x[0], x[1]);
  g(1, 0) = s.fyy(x[0], x[1]);
  g(1, 1) = -s.fxy(x[0], x[1]);
  return g;
}

GalerkinBasis build_basis_from(const std::vector<int>& catalogue_indices,
                               int quad_order, int boundary_quad_order) {
  const auto& catalogue = stream_catalogue();
  if (catalogue_indices.empty())
    throw Error("build_basis: at least one stream function required");
  if (quad_order < 2) throw Error("build_basis: quadrature order too small");
  if (boundary_quad_order <= 0)
    boundary_quad_order = std::max(quad_order, 8);

  GalerkinBasis basis;
  basis.n = static_cast<int>(catalogue_indices.size());
  basis.catalogue_indices = catalogue_indices;
  basis.quad_order = quad_order;
  basis.boundary_quad_order = boundary_quad_order;
  for (int idx : catalogue_indices) {
    if (idx < 0 || idx >= static_cast<int>(catalogue.size()))
      throw Error("build_basis: catalogue index out of range");
    basis.fields.push_back(catalogue[static_cast<std::size_t>(idx)]);
  }

  auto q = gauss_legendre_01(quad_order);
  basis.qnodes.reserve(static_cast<std::size_t>(quad_order) * quad_order);
  basis.qweights.resize(quad_order * quad_order);
  int at = 0;
  for (int i = 0; i < quad_order; ++i)
    for (int j = 0; j < quad_order; ++j) {
      basis.qnodes.emplace_back(q.nodes[i], q.nodes[j]);
      basis.qweights[at++] = q.weights[i] * q.weights[j];
    }

  auto qb = gauss_legendre_01(boundary_quad_order);
  for (int i = 0; i < boundary_quad_order; ++i) {
    double t = qb.nodes[i], w = qb.weights[i];
    basis.bnodes.push_back({Vec2(t, 0.0), w, 0});
    basis.bnodes.push_back({Vec2(1.0, t), w, 1});
    basis.bnodes.push_back({Vec2(t, 1.0), w, 2});
    basis.bnodes.push_back({Vec2(0.0, t), w, 3});
  }

  const int n = basis.n;
  basis.gram = Matrix::Zero(n, n);
  basis.mass = Matrix::Zero(n, n);
  for (std::size_t qi = 0; qi < basis.qnodes.size(); ++qi) {
    const Vec2& x = basis.qnodes[qi];
    double w = basis.qweights[static_cast<Eigen::Index>(qi)];
    std::vector<Vec2> vel(static_cast<std::size_t>(n));
    std::vector<Eigen::Matrix2d> grad(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
      vel[static_cast<std::size_t>(a)] = basis.velocity(a, x);
      grad[static_cast<std::size_t>(a)] = basis.velocity_gradient(a, x);
    }
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b) {
        basis.gram(a, b) += w * grad[static_cast<std::size_t>(a)]
                                    .cwiseProduct(grad[static_cast<std::size_t>(b)])
                                    .sum();
        basis.mass(a, b) += w * vel[static_cast<std::size_t>(a)].dot(
                                    vel[static_cast<std::size_t>(b)]);
      }
  }
  basis.gram = basis.gram.selfadjointView<Eigen::Upper>();
  basis.mass = basis.mass.selfadjointView<Eigen::Upper>();

  Eigen::SelfAdjointEigenSolver<Matrix> es(basis.gram);
  if (es.info() != Eigen::Success)
    throw Error("build_basis: Gram eigendecomposition failed");
  basis.gram_min_eig = es.eigenvalues().minCoeff();
  double max_eig = es.eigenvalues().maxCoeff();
  if (!(basis.gram_min_eig > 0.0) ||
      max_eig / basis.gram_min_eig > 1e12)
    throw Error("build_basis: Gram matrix numerically singular");
  basis.gram_condition = max_eig / basis.gram_min_eig;
  return basis;
}

GalerkinBasis build_basis(int n, int quad_order, int boundary_quad_order) {
  if (n < 1) throw Error("build_basis: basis size must be >= 1");
  if (n > static_cast<int>(stream_catalogue().size()))
    throw Error("build_basis: catalogue exhausted");
  std::vector<int> indices(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) indices[static_cast<std::size_t>(i)] = i;
  return build_basis_from(indices, quad_order, boundary_quad_order);
}

}  // namespace calmkit
