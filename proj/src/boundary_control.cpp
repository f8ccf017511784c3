#include "calmkit/boundary_control.hpp"

namespace calmkit {

BoundaryControl BoundaryControl::linear_constant(const Vec2& kappa) {
  BoundaryControl c;
  c.form = Form::linear;
  c.theta = 1.0;
  c.kernel_constant = true;
  c.eval = [kappa](const Vec2&, double, const Vec2&, const Vec2& s) {
    return kappa.dot(s);
  };
  c.linear_kernel = [kappa](const Vec2&, double, const Vec2&) { return kappa; };
  return c;
}

BoundaryControl BoundaryControl::bilinear(const Vec2& g, double kappa) {
  BoundaryControl c;
  c.form = Form::linear;
  c.theta = 1.0;
  c.eval = [g, kappa](const Vec2&, double, const Vec2& r, const Vec2& s) {
    return kappa * g.dot(r) * g.dot(s);
  };
  c.linear_kernel = [g, kappa](const Vec2&, double, const Vec2& r) {
    return Vec2(kappa * g.dot(r) * g);
  };
  return c;
}

BoundaryControl BoundaryControl::clarke(
    std::shared_ptr<const Superpotential> j) {
  if (!j || !j->j0) throw Error("BoundaryControl: unregistered superpotential");
  BoundaryControl c;
  c.form = Form::clarke_of_j;
  c.theta = 1.0;
  c.potential = j;
  c.eval = [j](const Vec2&, double, const Vec2& r, const Vec2& s) {
    return j->j0(r, s);
  };
  return c;
}

BoundaryControl BoundaryControl::general_form(
    double theta,
    std::function<double(const Vec2&, double, const Vec2&, const Vec2&)>
        eval) {
  if (theta < 0.0 || theta > 1.0)
    throw Error("BoundaryControl: theta must lie in [0, 1]");
  if (!eval) throw Error("BoundaryControl: missing evaluator");
  BoundaryControl c;
  c.form = Form::general;
  c.theta = theta;
  c.eval = std::move(eval);
  return c;
}

DistanceGrids DistanceGrids::defaults(int s_directions) {
  DistanceGrids g;
  g.rho_grid = {1.0, 0.5, 0.25, 0.1, 0.05};
  const double mags[] = {0.5, 1.0};
  for (double m : mags) {
    g.r_grid.emplace_back(m, 0.0);
    g.r_grid.emplace_back(0.0, m);
    g.r_grid.emplace_back(-m, 0.0);
    g.r_grid.emplace_back(0.0, -m);
  }
  g.r_grid.emplace_back(0.0, 0.0);
  const double smags[] = {1.0, 0.5, 0.25, 0.1};
  for (int k = 0; k < s_directions; ++k) {
    double ang = 2.0 * M_PI * k / s_directions;
    Vec2 dir(std::cos(ang), std::sin(ang));
    for (double m : smags) g.s_grid.push_back(m * dir);
  }
  return g;
}

namespace {

// Time quadrature nodes for boundary-time integrals: stationary models span
// the unit interval with one node, evolution models use the trapezoid rule.
std::vector<std::pair<double, double>> time_nodes(const StokesModel& model) {
  if (!model.time_grid) return {{0.0, 1.0}};
  const auto& tg = *model.time_grid;
  double dt = (tg.t1 - tg.t0) / tg.steps;
  std::vector<std::pair<double, double>> nodes;
  for (int k = 0; k <= tg.steps; ++k) {
    double w = (k == 0 || k == tg.steps) ? 0.5 * dt : dt;
    nodes.emplace_back(tg.t0 + k * dt, w);
  }
  return nodes;
}

double time_span(const StokesModel& model) {
  if (!model.time_grid) return 1.0;
  return model.time_grid->t1 - model.time_grid->t0;
}

bool is_positively_homogeneous(const BoundaryControl& c) {
  return c.form == BoundaryControl::Form::positively_homogeneous ||
         c.form == BoundaryControl::Form::clarke_of_j;
}

}  // namespace

double parameter_distance(const BoundaryControl& mu,
                          const BoundaryControl& mu_ref,
                          const DistanceGrids& grids,
                          const StokesModel& model) {
  if (mu.theta != mu_ref.theta)
    throw Error("parameter_distance: controls disagree on theta");
  if (grids.r_grid.empty() || grids.s_grid.empty() || grids.rho_grid.empty())
    throw Error("parameter_distance: empty grids");
  double theta = mu.theta;

  bool both_linear = mu.form == BoundaryControl::Form::linear &&
                     mu_ref.form == BoundaryControl::Form::linear;

  if (both_linear && mu.kernel_constant && mu_ref.kernel_constant) {
    double sup = 0.0;
    for (const auto& r : grids.r_grid) {
      Vec2 diff = mu.linear_kernel(Vec2(0, 0), 0.0, r) -
                  mu_ref.linear_kernel(Vec2(0, 0), 0.0, r);
      sup = std::max(sup, diff.norm());
    }
    return std::sqrt(4.0 * time_span(model)) * sup;
  }

  auto tnodes = time_nodes(model);
  double integral = 0.0;

  if (both_linear) {
    for (const auto& bn : model.basis.bnodes) {
      for (const auto& [t, wt] : tnodes) {
        double sup = 0.0;
        for (const auto& r : grids.r_grid) {
          Vec2 diff =
              mu.linear_kernel(bn.x, t, r) - mu_ref.linear_kernel(bn.x, t, r);
          sup = std::max(sup, diff.norm());
        }
        integral += bn.weight * wt * sup * sup;
      }
    }
    return std::sqrt(integral);
  }

  bool homogeneous =
      is_positively_homogeneous(mu) && is_positively_homogeneous(mu_ref);

  for (const auto& bn : model.basis.bnodes) {
    for (const auto& [t, wt] : tnodes) {
      auto sup_within = [&](double rho) {
        double sup = 0.0;
        for (const auto& r : grids.r_grid) {
          for (const auto& s : grids.s_grid) {
            double sn = s.norm();
            if (sn == 0.0 || sn > rho) continue;
            double diff = mu.eval(bn.x, t, r, s) - mu_ref.eval(bn.x, t, r, s);
            sup = std::max(sup, std::pow(sn, -2.0 * theta) * diff * diff);
          }
        }
        return sup;
      };
      double value;
      if (homogeneous) {
        value = sup_within(1.0);
      } else {
        value = std::numeric_limits<double>::infinity();
        for (double rho : grids.rho_grid) value = std::min(value, sup_within(rho));
      }
      integral += bn.weight * wt * value;
    }
  }
  return std::sqrt(integral);
}

M3Report verify_m3(const BoundaryControl& mu, const BoundaryControl& mu_ref,
                   const std::function<double(const Vec2&, double)>& phi,
                   const StokesModel& model,
                   const std::vector<Vec2>& r_samples,
                   const std::vector<Vec2>& s_samples) {
  if (mu.theta != mu_ref.theta)
    throw Error("verify_m3: controls disagree on theta");
  M3Report report;
  report.worst_gap = -std::numeric_limits<double>::infinity();
  for (const auto& bn : model.basis.bnodes) {
    for (const auto& [t, wt] : time_nodes(model)) {
      (void)wt;
      double bound_scale = phi(bn.x, t);
      for (const auto& r : r_samples) {
        for (const auto& s : s_samples) {
          if (s.norm() == 0.0) continue;
          double diff =
              std::abs(mu.eval(bn.x, t, r, s) - mu_ref.eval(bn.x, t, r, s));
          double gap = diff - bound_scale * std::pow(s.norm(), mu.theta);
          report.worst_gap = std::max(report.worst_gap, gap);
        }
      }
    }
  }
  report.holds = report.worst_gap <= 1e-12;
  return report;
}

}  // namespace calmkit
