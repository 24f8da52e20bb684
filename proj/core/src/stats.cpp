#include "tol/stats.hpp"

#include <cmath>

#include "tol/errors.hpp"

namespace tol {

KhinchineResult khinchine_exact(int k) {
  TOL_REQUIRE(k >= 1, "khinchine_exact needs k >= 1");
  TOL_REQUIRE(k <= 24, "khinchine_exact supports k <= 24; use Monte Carlo beyond that");
  // E|S_k| = k * C(k-1, floor((k-1)/2)) / 2^(k-1)
  const int n = k - 1;
  const int r = n / 2;
  double binom = 1.0;
  for (int i = 1; i <= r; ++i) binom = binom * (n - r + i) / i;
  KhinchineResult result;
  result.expected_abs_sum = k * binom / std::ldexp(1.0, n);
  result.bound = std::sqrt(k / 2.0);
  return result;
}

SummaryStats summarize(const double* values, long long count) {
  TOL_REQUIRE(count >= 1, "summarize needs at least one value");
  SummaryStats s;
  s.count = count;
  double sum = 0;
  for (long long i = 0; i < count; ++i) sum += values[i];
  s.mean = sum / static_cast<double>(count);
  double var = 0;
  for (long long i = 0; i < count; ++i) var += (values[i] - s.mean) * (values[i] - s.mean);
  s.stddev = (count > 1) ? std::sqrt(var / static_cast<double>(count - 1)) : 0.0;
  s.halfwidth_3sigma = 3.0 * s.stddev / std::sqrt(static_cast<double>(count));
  return s;
}

}  // namespace tol
