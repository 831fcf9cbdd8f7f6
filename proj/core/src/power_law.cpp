#include "collabnet/power_law.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_zeta.h>

#include "collabnet/error.hpp"

namespace collabnet {

namespace {

double hurwitz_zeta(double s, double q) {
  static const bool handler_off = [] {
    gsl_set_error_handler_off();
    return true;
  }();
  (void)handler_off;
  gsl_sf_result result;
  const int status = gsl_sf_hzeta_e(s, q, &result);
  if (status != GSL_SUCCESS && status != GSL_EUNDRFLW) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return result.val;
}

}  // namespace

double power_law_cdf(std::uint64_t x, double alpha, std::uint64_t xmin) {
  if (x < xmin) return 0.0;
  const double norm = hurwitz_zeta(alpha, static_cast<double>(xmin));
  return 1.0 - hurwitz_zeta(alpha, static_cast<double>(x + 1)) / norm;
}

PowerLawFit fit_power_law(std::span<const std::uint64_t> values) {
  if (!values.empty() &&
      std::all_of(values.begin(), values.end(),
                  [&](std::uint64_t v) { return v == values.front(); })) {
    throw Error(ErrorCode::DegenerateSequence, "all values are equal");
  }
  std::vector<std::uint64_t> xs;
  xs.reserve(values.size());
  for (std::uint64_t v : values) {
    if (v > 0) xs.push_back(v);
  }
  std::sort(xs.begin(), xs.end());
  if (xs.size() < kMinTailSize) {
    throw Error(ErrorCode::InsufficientTail,
                "fewer than " + std::to_string(kMinTailSize) +
                    " positive observations");
  }
  if (xs.front() == xs.back()) {
    throw Error(ErrorCode::DegenerateSequence,
                "all positive values are equal");
  }

  // Distinct values with the index of their first occurrence in xs.
  std::vector<std::pair<std::uint64_t, std::size_t>> distinct;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (distinct.empty() || distinct.back().first != xs[i]) {
      distinct.emplace_back(xs[i], i);
    }
  }

  std::optional<PowerLawFit> best;
  for (std::size_t c = 0; c < distinct.size(); ++c) {
    const auto [xmin, first] = distinct[c];
    const std::size_t n_tail = xs.size() - first;
    if (n_tail < kMinTailSize) break;

    const double shift = static_cast<double>(xmin) - 0.5;
    double log_sum = 0.0;
    for (std::size_t i = first; i < xs.size(); ++i) {
      log_sum += std::log(static_cast<double>(xs[i]) / shift);
    }
    const double alpha = 1.0 + static_cast<double>(n_tail) / log_sum;
    if (!std::isfinite(alpha)) continue;

    const double norm = hurwitz_zeta(alpha, static_cast<double>(xmin));
    if (!std::isfinite(norm) || norm <= 0.0) continue;
    double ks = 0.0;
    for (std::size_t d = c; d < distinct.size(); ++d) {
      const std::size_t upto =
          d + 1 < distinct.size() ? distinct[d + 1].second : xs.size();
      const double empirical =
          static_cast<double>(upto - first) / static_cast<double>(n_tail);
      const double model =
          1.0 -
          hurwitz_zeta(alpha, static_cast<double>(distinct[d].first + 1)) /
              norm;
      ks = std::max(ks, std::abs(empirical - model));
    }
    if (!best || ks < best->ks_statistic) {
      best = PowerLawFit{alpha, xmin, ks, n_tail};
    }
  }
  if (!best) {
    throw Error(ErrorCode::InsufficientTail, "no admissible xmin");
  }
  return *best;
}

}  // namespace collabnet
