#include "doctest.h"
#include "tol/experiments.hpp"
#include "tol/zoo.hpp"

#include <cmath>
#include <regex>

using namespace tol;

namespace {

std::string mask_seconds_column(const std::string& csv) {
  // the timing column is the one part of a sweep that is not a pure
  // function of (config, seed)
  return std::regex_replace(csv, std::regex(",[0-9]+\\.[0-9]{3}\n"), ",X\n");
}

}  // namespace

TEST_CASE("trichotomy sweep: cube rows are exactly min(d, n)") {
  const auto rows = trichotomy_sweep("cube", 3, 3, 1, 6);
  REQUIRE(rows.size() == 6);
  const long long expected[] = {1, 2, 3, 3, 3, 3};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    REQUIRE(rows[i].m_exact.has_value());
    CHECK(*rows[i].m_exact == expected[i]);
  }
  assert_trichotomy_shape(rows);
}

TEST_CASE("trichotomy sweep: thresholds stay inside the log window") {
  const auto rows = trichotomy_sweep("thresholds", 7, 7, 1, 7);
  long long prev = 0;
  for (const auto& row : rows) {
    REQUIRE(row.m_exact.has_value());
    CHECK(*row.m_exact >= prev);
    prev = *row.m_exact;
  }
  CHECK((prev == 2 || prev == 3));
  assert_trichotomy_shape(rows);
}

TEST_CASE("trichotomy sweep: singleton rows are all zero") {
  const auto rows = trichotomy_sweep("singleton", 2, 3, 1, 4);
  for (const auto& row : rows) CHECK(*row.m_exact == 0);
  assert_trichotomy_shape(rows);
}

TEST_CASE("trichotomy sweep: ds-claim rows grow linearly to the ceiling") {
  const auto rows = trichotomy_sweep("ds-claim", 2, 2, 1, 4);
  const long long expected[] = {1, 2, 3, 3};
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(*rows[i].m_exact == expected[i]);
  assert_trichotomy_shape(rows);
}

TEST_CASE("oversized rows fall back to brackets and still assert") {
  const auto rows = trichotomy_sweep("thresholds", 64, 64, 8, 16);
  for (const auto& row : rows) {
    CHECK_FALSE(row.m_exact.has_value());
    CHECK(row.m_lower >= 3);  // floor(log2 8)
    CHECK(row.m_upper <= 6);  // floor(log2 65)
  }
  assert_trichotomy_shape(rows);
}

TEST_CASE("shape assertions reject a doctored row") {
  auto rows = trichotomy_sweep("cube", 2, 2, 1, 3);
  rows[1].m_exact = 7;
  rows[1].m_upper = 7;
  CHECK_THROWS_AS(assert_trichotomy_shape(rows), SweepAssertionError);
}

TEST_CASE("trichotomy csv bodies are reproducible up to timing") {
  const auto a = trichotomy_csv(trichotomy_sweep("cube", 2, 2, 1, 4), {"config: demo"});
  const auto b = trichotomy_csv(trichotomy_sweep("cube", 2, 2, 1, 4), {"config: demo"});
  CHECK(mask_seconds_column(a) == mask_seconds_column(b));
  CHECK(a.find("family,param,n,vc,ld,td,M_exact_or_lower,M_upper,seconds\n") != std::string::npos);
  CHECK(a.find("# config: demo\n") == 0);
}

TEST_CASE("agnostic row on a thresholds class") {
  // small pilot run; the acceptance suite runs the full-size experiments
  const auto row = agnostic_row(thresholds(7), "thresholds(7)", 50, 300, 1234);
  CHECK(row.lower_bound == doctest::Approx(std::sqrt(50.0) / (2 * std::sqrt(2.0))));
  CHECK(row.upper_bound == doctest::Approx(std::sqrt(25.0 * std::log(8.0))));
  assert_agnostic_row(row);

  const auto again = agnostic_row(thresholds(7), "thresholds(7)", 50, 300, 1234);
  CHECK(row.mean_regret == again.mean_regret);
}

TEST_CASE("agnostic row on a singleton class has regret exactly zero") {
  const auto row = agnostic_row(singleton(3), "singleton(3)", 20, 120, 5);
  CHECK(row.mean_regret == 0.0);
  CHECK(row.lower_bound == 0.0);
  CHECK(row.upper_bound == 0.0);
  assert_agnostic_row(row);
}

TEST_CASE("agnostic csv layout") {
  const std::vector<AgnosticRow> rows{{"demo", 10, 5, 1.25, 1.0, 3.0, 0.5}};
  const auto csv = agnostic_csv(rows, {"seed 7"});
  CHECK(csv.find("class,n,trials,mean_regret,lower_bound_value,upper_bound_value\n") !=
        std::string::npos);
  CHECK(csv.find("demo,10,5,1.250000,1.000000,3.000000\n") != std::string::npos);
  CHECK(csv.find("# halfwidth demo n=10: 0.500000\n") != std::string::npos);
}

TEST_CASE("agnostic assertions flag violations") {
  AgnosticRow row{"demo", 10, 5, 0.0, 2.0, 3.0, 0.1};
  CHECK_THROWS_AS(assert_agnostic_row(row), SweepAssertionError);
  row.mean_regret = 5.0;
  CHECK_THROWS_AS(assert_agnostic_row(row), SweepAssertionError);
  row.mean_regret = 2.5;
  assert_agnostic_row(row);
}
