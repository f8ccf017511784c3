#ifndef CALMKIT_CALMNESS_HPP
#define CALMKIT_CALMNESS_HPP

#include <optional>
#include <string>
#include <vector>

#include "calmkit/extreal.hpp"
#include "calmkit/norm.hpp"
#include "calmkit/trifunction.hpp"

namespace calmkit {

/// Constant tuple driving the calmness certificate. Validity requires
/// m, b, alpha, beta, xi > 0, a, c, theta >= 0, theta < beta and c < m.
struct HolderConstants {
  double m = 1.0;      // strong-monotonicity modulus
  double c = 0.0;      // state-quadratic perturbation coefficient
  double a = 0.0;      // higher-order state coefficient
  double b = 1.0;      // parameter-coupling coefficient
  double alpha = 1.0;  // higher-order state exponent
  double beta = 2.0;   // monotonicity exponent
  double theta = 0.0;  // mixed state exponent
  double xi = 1.0;     // parameter exponent

  void validate() const;
};

enum class CalmnessCase { case1, case2, case3, not_calm };

std::string to_string(CalmnessCase c);
CalmnessCase calmness_case_from_string(const std::string& s);

/// Hoelder calmness certificate: the perturbed solutions v in V(u_ref)
/// satisfy d(v, u_ref) <= k * d(mu, mu_ref)^delta. The locality radius is
/// present only in case 1; uniqueness of the local solution holds in cases
/// 2 and 3.
struct CalmnessCertificate {
  CalmnessCase case_label = CalmnessCase::not_calm;
  double delta = 0.0;
  double k = 0.0;
  std::optional<double> radius;
  bool unique_local_solution = false;
};

/// Inversion of x^p - l x^q <= y into x <= k y^delta, valid for x in
/// (0, eps0); delta = 1/p in every branch.
struct PowerBound {
  double k = 1.0;
  double delta = 1.0;
  ExtReal eps0 = ExtReal::infinity();
};

/// Branches: p < q with l > 0 gives eps0 = l^{1/(p-q)} and
/// k = eps (eps^p - l eps^q)^{-1/p} for a chosen eps < eps0 (default
/// eps0 / 2); p = q with l < 1 gives k = (1-l)^{-1/p}; l = 0 gives k = 1.
/// Any other combination throws NotApplicableError: no such bound exists.
PowerBound power_bound(double p, double q, double l,
                       std::optional<double> eps = {});

struct PowerBoundCheck {
  bool ok = true;
  double worst_violation = 0.0;  // max of x - k y^delta over the grid
  int points = 0;
};

/// Brute-force verification of a PowerBound on a uniform x-grid inside
/// (0, min(eps, eps0)), with y = x^p - l x^q.
PowerBoundCheck power_bound_brute_force(double p, double q, double l,
                                        const PowerBound& bound, double eps,
                                        int points = 10000);

struct NecessityWitness {
  double x = 0.0;
  double y = 0.0;  // x^p - l x^q <= y yet x > k y^delta
};

/// For p > q, l > 0 no (k, delta) bound can exist: searches a grid for a
/// witness x in (0, l^{1/(p-q)}) defeating the candidate pair.
std::optional<NecessityWitness> power_bound_necessity_witness(double p,
                                                              double q,
                                                              double l,
                                                              double k,
                                                              double delta);

/// Case 3 takes precedence when a = 0; case 1 when beta < alpha + theta and
/// a > 0; case 2 when beta = alpha + theta, a > 0 and a + c < m.
CalmnessCase classify_case(const HolderConstants& h);

/// In case 1 the admissible locality radius satisfies
/// 0 < r < ((m-c)/a)^{1/(alpha+theta-beta)}; default is half that bound.
double case1_radius_bound(const HolderConstants& h);

CalmnessCertificate certificate(const HolderConstants& h,
                                std::optional<double> radius = {});

/// Rank of the case-1 certificate as a function of the locality radius,
/// for 1-D exploration of the radius/rank trade-off.
std::vector<double> case1_rank_profile(const HolderConstants& h,
                                       const std::vector<double>& radii);

/// d_vu^{beta-theta} <= (a/(m-c)) d_vu^alpha + (b/(m-c)) d_mu^xi within the
/// shared tolerance; the reduction step the certificate rests on.
bool check_base_inequality(double d_vu, double d_mu, const HolderConstants& h);

using ParamDistance = std::function<double(const Vector&, const Vector&)>;

ParamDistance euclidean_param_distance();

struct CandidateCheck {
  double d_state = 0.0;
  double d_param = 0.0;
  bool cond_i = false;
  bool cond_ii = false;
  bool cond_iii = true;     // mixed form only
  double margin_i = 0.0;    // rhs - lhs; negative = violated
  double margin_ii = 0.0;
  double margin_iii = 0.0;  // mixed form only
};

struct ConditionReport {
  bool all_hold_i = true;
  bool all_hold_ii = true;
  bool all_hold_iii = true;  // mixed form only
  double worst_margin_i = std::numeric_limits<double>::infinity();
  double worst_margin_ii = std::numeric_limits<double>::infinity();
  double worst_margin_iii = std::numeric_limits<double>::infinity();
  bool theta_zero = false;  // flagged: theta = 0 admitted but boundary-case
  std::vector<CandidateCheck> rows;
};

/// Per-candidate check of the two calmness hypotheses on solved instances:
/// (i)  m d^beta(u_ref, v) <= F(u_ref,v,u_ref;mu_ref)_- +
///      F(u_ref,v,v;mu_ref)_+,
/// (ii) F(u_ref,v,v;mu_ref) <= c d^beta + d^theta (a d^alpha + b
///      d_param^xi), skipped on the diagonal v = u_ref.
ConditionReport check_calmness_conditions(
    const Trifunction& f, const Vector& u_ref, const Vector& mu_ref,
    const std::vector<PointPair>& candidates, const HolderConstants& h,
    const Norm& state_norm, const ParamDistance& param_distance = {});

/// Mixed-form hypotheses with the parameter coupling split b = b1 + b2:
/// (i)   m d^beta <= [f(u_ref,v;mu_ref)+g(u_ref,v;mu_ref)]_- +
///       [f(v,u_ref;mu_ref)-g(u_ref,v;mu_ref)]_-,
/// (ii)  f(v,u_ref;mu) - f(v,u_ref;mu_ref) <= b1 d^theta d_param^xi,
/// (iii) g(u_ref,v;mu_ref) + g(v,u_ref;mu) <= c d^beta + d^theta
///       (a d^alpha + b2 d_param^xi).
/// Also confirms the reduction to the trifunction-form estimate with b.
ConditionReport check_mixed_conditions(
    const MixedPair& pair, const Vector& u_ref, const Vector& mu_ref,
    const std::vector<PointPair>& candidates, const HolderConstants& h,
    double b1, double b2, const Norm& state_norm,
    const ParamDistance& param_distance = {});

/// Branch data for the Navier-Stokes constant mapping; c2 and c_tau are the
/// relaxed-monotonicity limsup estimates at exponents 2 and tau.
struct NsBranchInputs {
  bool monotone_near = false;
  std::optional<double> c2;
  std::optional<double> c_tau;
};

/// Maps the Navier-Stokes data onto the certificate constants:
/// m = nu, c = rho c1, b = c0, alpha = tau - theta, beta = 2, xi = 1, and
/// a = 0 when the boundary functional is monotone near the solution,
/// a = (nu - rho c1 + c2) / 2 when tau = 2 and 0 < c2 < nu - rho c1,
/// a = 1 + c_tau otherwise.
HolderConstants ns_constants(double nu, double rho, double c1, double c0,
                             double theta, double tau,
                             const NsBranchInputs& branch);

}  // namespace calmkit

#endif  // CALMKIT_CALMNESS_HPP
