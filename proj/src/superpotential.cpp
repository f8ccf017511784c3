#include "calmkit/superpotential.hpp"

#include <vector>

namespace calmkit {

Superpotential Superpotential::smooth_quadratic(double kappa, double radius) {
  Superpotential j;
  j.kind = Kind::smooth_quadratic;
  j.coefficients = scalar_point(kappa);
  j.j0 = [kappa](const Vec2& r, const Vec2& s) { return kappa * r.dot(s); };
  j.j_raw = [kappa](const Vec2& r) { return 0.5 * kappa * r.squaredNorm(); };
  j.lipschitz_rank = std::abs(kappa) * radius;
  return j;
}

Superpotential Superpotential::scaled_norm(double kappa) {
  Superpotential j;
  j.kind = Kind::scaled_norm;
  j.coefficients = scalar_point(kappa);
  j.j0 = [kappa](const Vec2& r, const Vec2& s) {
    double n = r.norm();
    // At the kink the limsup equals |kappa| |s| for either sign of kappa:
    // w -> 0 along -s realizes quotient -|s| when kappa < 0.
    if (n == 0.0) return std::abs(kappa) * s.norm();
    return kappa * r.dot(s) / n;
  };
  j.j_raw = [kappa](const Vec2& r) { return kappa * r.norm(); };
  j.lipschitz_rank = std::abs(kappa);
  return j;
}

Superpotential Superpotential::custom(
    std::function<double(const Vec2&, const Vec2&)> j0,
    std::function<double(const Vec2&)> j_raw, double lipschitz_rank) {
  Superpotential j;
  j.kind = Kind::custom;
  j.j0 = std::move(j0);
  j.j_raw = std::move(j_raw);
  j.lipschitz_rank = lipschitz_rank;
  return j;
}

double j0_eval(const Superpotential& j, const Vec2& r, const Vec2& s) {
  if (!j.j0)
    throw Error("j0_eval: no closed form registered for this superpotential");
  return j.j0(r, s);
}

double clarke_limsup(const std::function<double(const Vec2&)>& j, const Vec2& r,
                     const Vec2& s, const LimsupOptions& opts) {
  if (!j) throw Error("clarke_limsup: missing potential");
  if (opts.t_count < 2 || !(opts.t_min > 0.0) || !(opts.t_max > opts.t_min))
    throw Error("clarke_limsup: invalid options");

  std::vector<Vec2> dirs;
  dirs.reserve(static_cast<std::size_t>(opts.direction_count) + 2);
  double sn = s.norm();
  if (sn > 0.0) {
    dirs.push_back(s / sn);
    dirs.push_back(-s / sn);
  }
  for (int k = 0; k < opts.direction_count; ++k) {
    double ang = 2.0 * M_PI * k / opts.direction_count + 0.37;
    dirs.emplace_back(std::cos(ang), std::sin(ang));
  }
  const double mags[] = {0.5, 1.0, 2.0, 4.0};

  double level[2] = {-std::numeric_limits<double>::infinity(),
                     -std::numeric_limits<double>::infinity()};
  double ratio = std::pow(opts.t_min / opts.t_max,
                          1.0 / static_cast<double>(opts.t_count - 1));
  double t = opts.t_max;
  for (int it = 0; it < opts.t_count; ++it, t *= ratio) {
    double best = (j(r + t * s) - j(r)) / t;
    for (const auto& d : dirs) {
      for (double m : mags) {
        Vec2 w = r + (m * t) * d;
        best = std::max(best, (j(w + t * s) - j(w)) / t);
      }
    }
    level[0] = level[1];
    level[1] = best;
  }
  return std::max(level[0], level[1]);
}

}  // namespace calmkit
