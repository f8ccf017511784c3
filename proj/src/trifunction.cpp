#include "calmkit/trifunction.hpp"

namespace calmkit {

Trifunction lift_bifunction(const Bifunction& f,
                            std::shared_ptr<const FeasibleSet> domain) {
  if (!f.eval) throw Error("lift_bifunction: missing evaluator");
  if (!f.diagonal_zero)
    throw Error("lift_bifunction: bifunction must assert diagonal_zero");
  Trifunction t;
  auto eval = f.eval;
  t.eval = [eval](const Vector& u, const Vector& v, const Vector& w,
                  const Vector& mu) { return eval(w, v, mu) - eval(w, u, mu); };
  t.feasible_set = std::move(domain);
  return t;
}

Trifunction mixed_trifunction(const MixedPair& pair,
                              std::shared_ptr<const FeasibleSet> domain) {
  if (!pair.f.eval || !pair.g.eval)
    throw Error("mixed_trifunction: missing evaluator");
  if (!pair.f.diagonal_zero)
    throw Error("mixed_trifunction: monotone part must assert diagonal_zero");
  Trifunction t;
  auto feval = pair.f.eval;
  auto geval = pair.g.eval;
  t.eval = [feval, geval](const Vector& u, const Vector& v, const Vector& w,
                          const Vector& mu) {
    return feval(w, v, mu) - feval(w, u, mu) + geval(u, v, mu);
  };
  t.feasible_set = std::move(domain);
  return t;
}

MonotonicityReport check_monotone(const Trifunction& f,
                                  const std::vector<PointPair>& pairs,
                                  const Vector& mu, double tol) {
  if (pairs.empty()) throw Error("check_monotone: empty pair list");
  MonotonicityReport report;
  report.worst_violation = -std::numeric_limits<double>::infinity();
  for (const auto& [u, v] : pairs) {
    double diff = f.eval(u, v, u, mu) - f.eval(u, v, v, mu);
    report.worst_violation = std::max(report.worst_violation, diff);
  }
  report.holds = report.worst_violation <= tol;
  return report;
}

MonotonicityReport check_strongly_monotone(const Trifunction& f,
                                           double modulus, double exponent,
                                           const std::vector<PointPair>& pairs,
                                           const Vector& mu, const Norm& norm,
                                           double tol) {
  if (pairs.empty()) throw Error("check_strongly_monotone: empty pair list");
  if (!(modulus > 0.0) || !(exponent > 0.0))
    throw Error("check_strongly_monotone: modulus and exponent must be > 0");
  MonotonicityReport report;
  report.worst_violation = -std::numeric_limits<double>::infinity();
  for (const auto& [u, v] : pairs) {
    double lhs = modulus * std::pow(norm.distance(u, v), exponent);
    double rhs = f.eval(u, v, v, mu) - f.eval(u, v, u, mu);
    report.worst_violation = std::max(report.worst_violation, lhs - rhs);
  }
  report.holds = report.worst_violation <= tol;
  return report;
}

}  // namespace calmkit
