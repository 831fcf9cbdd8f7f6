#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace collabnet {

inline constexpr std::size_t kMinTailSize = 10;

struct PowerLawFit {
  double alpha = 0.0;
  std::uint64_t xmin = 1;
  double ks_statistic = 0.0;
  std::size_t n_tail = 0;
};

/// Discrete power-law fit. For each candidate xmin the exponent is the
/// approximate discrete MLE
///
///   alpha = 1 + n / sum(ln(x_i / (xmin - 0.5)))
///
/// and the candidate with the smallest Kolmogorov-Smirnov distance between
/// the empirical tail CDF and the exact discrete power-law CDF wins (ties go
/// to the smaller xmin). Zero values are ignored.
///
/// Throws DegenerateSequence when all values are equal and InsufficientTail
/// when no candidate keeps at least kMinTailSize observations.
PowerLawFit fit_power_law(std::span<const std::uint64_t> values);

/// P(X <= x) for a discrete power law with the given exponent and cutoff.
double power_law_cdf(std::uint64_t x, double alpha, std::uint64_t xmin);

}  // namespace collabnet
