#include "calmkit/calmness.hpp"

#include "calmkit/parts.hpp"

namespace calmkit {

void HolderConstants::validate() const {
  if (!(m > 0.0) || !(b > 0.0) || !(alpha > 0.0) || !(beta > 0.0) ||
      !(xi > 0.0))
    throw Error("HolderConstants: m, b, alpha, beta, xi must be positive");
  if (a < 0.0 || c < 0.0 || theta < 0.0)
    throw Error("HolderConstants: a, c, theta must be nonnegative");
  if (!(theta < beta)) throw Error("HolderConstants: theta < beta required");
  if (!(c < m)) throw Error("HolderConstants: c < m required");
}

std::string to_string(CalmnessCase c) {
  switch (c) {
    case CalmnessCase::case1:
      return "case1";
    case CalmnessCase::case2:
      return "case2";
    case CalmnessCase::case3:
      return "case3";
    case CalmnessCase::not_calm:
      return "not_calm";
  }
  return "not_calm";
}

CalmnessCase calmness_case_from_string(const std::string& s) {
  if (s == "case1") return CalmnessCase::case1;
  if (s == "case2") return CalmnessCase::case2;
  if (s == "case3") return CalmnessCase::case3;
  if (s == "not_calm") return CalmnessCase::not_calm;
  throw Error("unknown calmness case label: " + s);
}

PowerBound power_bound(double p, double q, double l,
                       std::optional<double> eps) {
  if (!(p > 0.0) || !(q > 0.0) || l < 0.0)
    throw Error("power_bound: require p > 0, q > 0, l >= 0");

  PowerBound bound;
  bound.delta = 1.0 / p;

  if (l == 0.0) {
    bound.k = 1.0;
    return bound;
  }
  if (p < q) {
    double eps0 = std::pow(l, 1.0 / (p - q));
    bound.eps0 = ExtReal::finite(eps0);
    double e = eps.value_or(0.5 * eps0);
    if (!(e > 0.0) || e >= eps0)
      throw Error("power_bound: eps must lie in (0, eps0)");
    double phi = std::pow(e, p) - l * std::pow(e, q);
    bound.k = e * std::pow(phi, -1.0 / p);
    return bound;
  }
  if (p == q && l < 1.0) {
    bound.k = std::pow(1.0 - l, -1.0 / p);
    return bound;
  }
  throw NotApplicableError(
      "power_bound: no bound exists for p > q (or p = q, l >= 1) with l > 0");
}

PowerBoundCheck power_bound_brute_force(double p, double q, double l,
                                        const PowerBound& bound, double eps,
                                        int points) {
  PowerBoundCheck check;
  check.points = points;
  double hi = std::min(eps, bound.eps0.value_or(eps));
  check.worst_violation = -std::numeric_limits<double>::infinity();
  for (int i = 1; i <= points; ++i) {
    double x = hi * static_cast<double>(i) / static_cast<double>(points + 1);
    double y = std::pow(x, p) - l * std::pow(x, q);
    if (!(y > 0.0)) continue;
    double rhs = bound.k * std::pow(y, bound.delta);
    check.worst_violation = std::max(check.worst_violation, x - rhs);
  }
  check.ok = check.worst_violation <= 1e-12;
  return check;
}

std::optional<NecessityWitness> power_bound_necessity_witness(double p,
                                                              double q,
                                                              double l,
                                                              double k,
                                                              double delta) {
  if (!(p > q) || !(l > 0.0)) return std::nullopt;
  if (!(k > 0.0) || !(delta > 0.0)) return std::nullopt;
  double eps0 = std::pow(l, 1.0 / (p - q));
  // For x below eps0 the left side x^p - l x^q is negative, so any y > 0
  // satisfies the premise; shrink y on a grid until x > k y^delta.
  for (int i = 1; i <= 64; ++i) {
    double x = eps0 * static_cast<double>(i) / 65.0;
    if (!(std::pow(x, p) - l * std::pow(x, q) < 0.0)) continue;
    double y = std::pow(x / (2.0 * k), 1.0 / delta);
    y = std::min(y, 1e-12);
    if (!(y > 0.0)) y = std::numeric_limits<double>::min();
    if (x > k * std::pow(y, delta)) return NecessityWitness{x, y};
  }
  return std::nullopt;
}

CalmnessCase classify_case(const HolderConstants& h) {
  h.validate();
  if (h.a == 0.0) return CalmnessCase::case3;
  double sum = h.alpha + h.theta;
  if (eq_within(h.beta, sum)) {
    if (h.a + h.c < h.m) return CalmnessCase::case2;
    return CalmnessCase::not_calm;
  }
  if (h.beta < sum) return CalmnessCase::case1;
  return CalmnessCase::not_calm;
}

double case1_radius_bound(const HolderConstants& h) {
  return std::pow((h.m - h.c) / h.a, 1.0 / (h.alpha + h.theta - h.beta));
}

CalmnessCertificate certificate(const HolderConstants& h,
                                std::optional<double> radius) {
  CalmnessCase label = classify_case(h);
  if (label == CalmnessCase::not_calm)
    throw Error("certificate: constants classify as not calm");

  CalmnessCertificate cert;
  cert.case_label = label;
  double pexp = h.beta - h.theta;
  cert.delta = h.xi / pexp;

  switch (label) {
    case CalmnessCase::case3:
      cert.k = std::pow(h.b / (h.m - h.c), 1.0 / pexp);
      cert.unique_local_solution = true;
      break;
    case CalmnessCase::case2:
      cert.k = std::pow(h.b / (h.m - h.c - h.a), 1.0 / pexp);
      cert.unique_local_solution = true;
      break;
    case CalmnessCase::case1: {
      double bound = case1_radius_bound(h);
      double r = radius.value_or(0.5 * bound);
      if (!(r > 0.0) || !(r < bound))
        throw Error("certificate: locality radius out of range");
      double l = h.a / (h.m - h.c);
      double phi = std::pow(r, pexp) - l * std::pow(r, h.alpha);
      cert.k = r * std::pow(phi, -1.0 / pexp) *
               std::pow(h.b / (h.m - h.c), 1.0 / pexp);
      cert.radius = r;
      cert.unique_local_solution = false;
      break;
    }
    case CalmnessCase::not_calm:
      break;
  }
  return cert;
}

std::vector<double> case1_rank_profile(const HolderConstants& h,
                                       const std::vector<double>& radii) {
  std::vector<double> ranks;
  ranks.reserve(radii.size());
  for (double r : radii) ranks.push_back(certificate(h, r).k);
  return ranks;
}

bool check_base_inequality(double d_vu, double d_mu,
                           const HolderConstants& h) {
  h.validate();
  if (d_vu < 0.0 || d_mu < 0.0)
    throw Error("check_base_inequality: distances must be nonnegative");
  double lhs = std::pow(d_vu, h.beta - h.theta);
  double rhs = (h.a / (h.m - h.c)) * std::pow(d_vu, h.alpha) +
               (h.b / (h.m - h.c)) * std::pow(d_mu, h.xi);
  return leq_within(lhs, rhs);
}

ParamDistance euclidean_param_distance() {
  return [](const Vector& mu, const Vector& nu) { return (mu - nu).norm(); };
}

namespace {

void fold(ConditionReport& report, const CandidateCheck& row) {
  report.all_hold_i = report.all_hold_i && row.cond_i;
  report.all_hold_ii = report.all_hold_ii && row.cond_ii;
  report.all_hold_iii = report.all_hold_iii && row.cond_iii;
  report.worst_margin_i = std::min(report.worst_margin_i, row.margin_i);
  report.worst_margin_ii = std::min(report.worst_margin_ii, row.margin_ii);
  report.worst_margin_iii = std::min(report.worst_margin_iii, row.margin_iii);
  report.rows.push_back(row);
}

double estimate_rhs(const HolderConstants& h, double d, double b,
                    double d_param) {
  return h.c * std::pow(d, h.beta) +
         std::pow(d, h.theta) *
             (h.a * std::pow(d, h.alpha) + b * std::pow(d_param, h.xi));
}

}  // namespace

ConditionReport check_calmness_conditions(
    const Trifunction& f, const Vector& u_ref, const Vector& mu_ref,
    const std::vector<PointPair>& candidates, const HolderConstants& h,
    const Norm& state_norm, const ParamDistance& param_distance) {
  if (candidates.empty())
    throw Error("check_calmness_conditions: empty candidate list");
  h.validate();
  ParamDistance pd = param_distance ? param_distance : euclidean_param_distance();

  ConditionReport report;
  report.theta_zero = (h.theta == 0.0);
  for (const auto& [v, mu] : candidates) {
    CandidateCheck row;
    row.d_state = state_norm.distance(u_ref, v);
    row.d_param = pd(mu, mu_ref);

    double f_uvu = f.eval(u_ref, v, u_ref, mu_ref);
    double f_uvv = f.eval(u_ref, v, v, mu_ref);

    double lhs_i = h.m * std::pow(row.d_state, h.beta);
    double rhs_i = parts(f_uvu).minus + parts(f_uvv).plus;
    row.margin_i = rhs_i - lhs_i;
    row.cond_i = leq_within(lhs_i, rhs_i);

    if (row.d_state == 0.0) {
      // The estimate (ii) is quantified over v distinct from the reference.
      row.margin_ii = 0.0;
      row.cond_ii = true;
    } else {
      double rhs_ii = estimate_rhs(h, row.d_state, h.b, row.d_param);
      row.margin_ii = rhs_ii - f_uvv;
      row.cond_ii = leq_within(f_uvv, rhs_ii);
    }
    fold(report, row);
  }
  return report;
}

ConditionReport check_mixed_conditions(
    const MixedPair& pair, const Vector& u_ref, const Vector& mu_ref,
    const std::vector<PointPair>& candidates, const HolderConstants& h,
    double b1, double b2, const Norm& state_norm,
    const ParamDistance& param_distance) {
  if (candidates.empty())
    throw Error("check_mixed_conditions: empty candidate list");
  if (b1 < 0.0 || b2 < 0.0)
    throw Error("check_mixed_conditions: b1, b2 must be nonnegative");
  if (!eq_within(b1 + b2, h.b))
    throw Error("check_mixed_conditions: b1 + b2 must equal h.b");
  h.validate();
  if (!pair.f.diagonal_zero)
    throw Error("check_mixed_conditions: monotone part must be diagonal_zero");
  ParamDistance pd = param_distance ? param_distance : euclidean_param_distance();

  ConditionReport report;
  report.theta_zero = (h.theta == 0.0);
  for (const auto& [v, mu] : candidates) {
    CandidateCheck row;
    row.d_state = state_norm.distance(u_ref, v);
    row.d_param = pd(mu, mu_ref);

    double f_uv = pair.f.eval(u_ref, v, mu_ref);
    double f_vu_ref = pair.f.eval(v, u_ref, mu_ref);
    double f_vu_mu = pair.f.eval(v, u_ref, mu);
    double g_uv_ref = pair.g.eval(u_ref, v, mu_ref);
    double g_vu_mu = pair.g.eval(v, u_ref, mu);

    double lhs_i = h.m * std::pow(row.d_state, h.beta);
    double rhs_i = parts(f_uv + g_uv_ref).minus + parts(f_vu_ref - g_uv_ref).minus;
    row.margin_i = rhs_i - lhs_i;
    row.cond_i = leq_within(lhs_i, rhs_i);

    if (row.d_state == 0.0) {
      row.margin_ii = row.margin_iii = 0.0;
      row.cond_ii = row.cond_iii = true;
    } else {
      double lhs_ii = f_vu_mu - f_vu_ref;
      double rhs_ii = b1 * std::pow(row.d_state, h.theta) *
                      std::pow(row.d_param, h.xi);
      row.margin_ii = rhs_ii - lhs_ii;
      row.cond_ii = leq_within(lhs_ii, rhs_ii);

      double lhs_iii = g_uv_ref + g_vu_mu;
      double rhs_iii = estimate_rhs(h, row.d_state, b2, row.d_param);
      row.margin_iii = rhs_iii - lhs_iii;
      row.cond_iii = leq_within(lhs_iii, rhs_iii);

      // Reduction to the trifunction-form estimate with b = b1 + b2:
      // F(u_ref,v,v;mu_ref) = -f(v,u_ref;mu_ref) + g(u_ref,v;mu_ref).
      double f_uvv = -f_vu_ref + g_uv_ref;
      double rhs_red = estimate_rhs(h, row.d_state, h.b, row.d_param);
      row.cond_ii = row.cond_ii && leq_within(f_uvv, rhs_red);
      row.margin_ii = std::min(row.margin_ii, rhs_red - f_uvv);
    }
    fold(report, row);
  }
  return report;
}

HolderConstants ns_constants(double nu, double rho, double c1, double c0,
                             double theta, double tau,
                             const NsBranchInputs& branch) {
  if (!(nu > 0.0) || !(rho > 0.0) || c1 < 0.0 || !(c0 > 0.0))
    throw Error("ns_constants: invalid operator constants");
  if (theta < 0.0 || theta > 1.0)
    throw Error("ns_constants: theta must lie in [0, 1]");
  if (!(rho * c1 < nu))
    throw HypothesesFailError("ns_constants: rho * c1 < nu required");
  if (!(tau > theta)) throw Error("ns_constants: tau > theta required");

  HolderConstants h;
  h.m = nu;
  h.c = rho * c1;
  h.b = c0;
  h.alpha = tau - theta;
  h.beta = 2.0;
  h.theta = theta;
  h.xi = 1.0;

  if (branch.monotone_near) {
    h.a = 0.0;
  } else if (tau == 2.0 && branch.c2 && *branch.c2 > 0.0 &&
             *branch.c2 < nu - rho * c1) {
    h.a = 0.5 * (nu - rho * c1 + *branch.c2);
  } else if (tau == 2.0) {
    if (!branch.c2)
      throw Error("ns_constants: c2 required when tau = 2");
    h.a = 1.0 + *branch.c2;
  } else {
    if (!branch.c_tau)
      throw Error("ns_constants: c_tau required when tau != 2");
    h.a = 1.0 + *branch.c_tau;
  }
  h.validate();
  return h;
}

}  // namespace calmkit
