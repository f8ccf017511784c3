#include "calmkit/holder_fit.hpp"

#include <Eigen/QR>

namespace calmkit {

HolderFit fit_holder_exponent(const std::vector<HolderSample>& samples) {
  HolderFit fit;
  fit.sample_count = static_cast<int>(samples.size());

  std::vector<double> lx, ly;
  for (const auto& s : samples) {
    if (!(s.distance_in > 0.0) || !std::isfinite(s.distance_in))
      throw Error("fit_holder_exponent: distance_in must be positive");
    if (s.distance_out < 0.0 || !std::isfinite(s.distance_out))
      throw Error("fit_holder_exponent: distance_out must be nonnegative");
    if (s.distance_out == 0.0) {
      ++fit.discarded_count;
      continue;
    }
    lx.push_back(std::log(s.distance_in));
    ly.push_back(std::log(s.distance_out));
  }
  fit.used_count = static_cast<int>(lx.size());
  if (fit.used_count < 2)
    throw Error("fit_holder_exponent: fewer than 2 usable samples");

  Matrix design(fit.used_count, 2);
  Vector rhs(fit.used_count);
  for (int i = 0; i < fit.used_count; ++i) {
    design(i, 0) = 1.0;
    design(i, 1) = lx[i];
    rhs[i] = ly[i];
  }
  Vector coef = design.colPivHouseholderQr().solve(rhs);
  fit.rank_estimate = std::exp(coef[0]);
  fit.exponent_estimate = coef[1];

  Vector pred = design * coef;
  fit.residual = (pred - rhs).cwiseAbs().maxCoeff();
  return fit;
}

}  // namespace calmkit
