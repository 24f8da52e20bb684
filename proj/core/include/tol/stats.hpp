#pragma once

#include <cstdint>

namespace tol {

struct KhinchineResult {
  double expected_abs_sum = 0;  // E|sigma_1 + ... + sigma_k|, exact
  double bound = 0;             // sqrt(k / 2)
};

// Exact expectation of |sum of k independent uniform signs| via the closed
// form k * C(k-1, floor((k-1)/2)) / 2^(k-1); k <= 24 so every intermediate
// is exactly representable.  Larger k should be estimated by Monte Carlo.
KhinchineResult khinchine_exact(int k);

struct SummaryStats {
  long long count = 0;
  double mean = 0;
  double stddev = 0;           // sample standard deviation
  double halfwidth_3sigma = 0;  // 3 * stddev / sqrt(count)
};

SummaryStats summarize(const double* values, long long count);

}  // namespace tol
