#include "doctest.h"
#include "tol/errors.hpp"
#include "tol/stats.hpp"

#include <cmath>

using namespace tol;

namespace {

// Independent oracle: enumerate all 2^k sign vectors.
double enumerated_expectation(int k) {
  double total = 0;
  for (unsigned bits = 0; bits < (1u << k); ++bits) {
    int sum = 0;
    for (int i = 0; i < k; ++i) sum += ((bits >> i) & 1) ? 1 : -1;
    total += std::abs(sum);
  }
  return total / std::ldexp(1.0, k);
}

}  // namespace

TEST_CASE("khinchine closed form matches full enumeration") {
  for (int k = 1; k <= 16; ++k) {
    const auto result = khinchine_exact(k);
    CHECK(result.expected_abs_sum == doctest::Approx(enumerated_expectation(k)).epsilon(1e-12));
    CHECK(result.bound == doctest::Approx(std::sqrt(k / 2.0)));
  }
}

TEST_CASE("khinchine known values") {
  CHECK(khinchine_exact(1).expected_abs_sum == doctest::Approx(1.0));
  CHECK(khinchine_exact(2).expected_abs_sum == doctest::Approx(1.0));
  CHECK(khinchine_exact(2).bound == doctest::Approx(1.0));
  CHECK(khinchine_exact(4).expected_abs_sum == doctest::Approx(1.5));
  CHECK(khinchine_exact(8).expected_abs_sum == doctest::Approx(2.1875));
}

TEST_CASE("khinchine bound holds for every supported k") {
  for (int k = 1; k <= 24; ++k) {
    const auto result = khinchine_exact(k);
    CHECK(result.expected_abs_sum >= result.bound - 1e-12);
  }
  // equality is attained exactly at k = 2
  CHECK(khinchine_exact(2).expected_abs_sum == doctest::Approx(khinchine_exact(2).bound));
  CHECK(khinchine_exact(1).expected_abs_sum > khinchine_exact(1).bound + 0.25);
}

TEST_CASE("khinchine rejects out-of-range k") {
  CHECK_THROWS_AS(khinchine_exact(0), ContractViolation);
  CHECK_THROWS_AS(khinchine_exact(25), ContractViolation);
}

TEST_CASE("summary statistics") {
  const double values[] = {1.0, 2.0, 3.0, 4.0};
  const auto s = summarize(values, 4);
  CHECK(s.mean == doctest::Approx(2.5));
  CHECK(s.stddev == doctest::Approx(std::sqrt(5.0 / 3.0)));
  CHECK(s.halfwidth_3sigma == doctest::Approx(3.0 * s.stddev / 2.0));
}
