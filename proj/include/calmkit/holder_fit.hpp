#ifndef CALMKIT_HOLDER_FIT_HPP
#define CALMKIT_HOLDER_FIT_HPP

#include <vector>

#include "calmkit/common.hpp"

namespace calmkit {

struct HolderSample {
  double distance_in;   // parameter distance, must be > 0
  double distance_out;  // solution-set excess, >= 0
};

/// Empirical estimate of rank and exponent in
/// distance_out <= rank * distance_in^exponent.
struct HolderFit {
  double exponent_estimate = 0.0;
  double rank_estimate = 0.0;
  double residual = 0.0;  // max absolute log-log deviation over used samples
  int sample_count = 0;   // samples supplied
  int used_count = 0;     // samples entering the regression
  int discarded_count = 0;  // zero-output samples (log undefined)
};

/// Least-squares fit of log(distance_out) = log(rank) + exponent *
/// log(distance_in). Samples with distance_out = 0 are excluded from the
/// regression but counted; exact solutions at the reference parameter are
/// expected to produce them.
HolderFit fit_holder_exponent(const std::vector<HolderSample>& samples);

}  // namespace calmkit

#endif  // CALMKIT_HOLDER_FIT_HPP
