#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tol/dimensions.hpp"
#include "tol/engine.hpp"
#include "tol/minimax.hpp"

namespace tol {

struct SweepBudgets {
  DimensionBudget dims;
  GameBudget game;
};

struct TrichotomyRow {
  std::string family;
  long long param = 0;
  int n = 0;
  std::optional<int> vc, ld, td;
  bool dims_analytic = false;  // family formulas used past the exact-search budget
  std::optional<long long> m_exact;
  long long m_lower = 0;
  long long m_upper = 0;
  double seconds = 0;
};

// One row per (param, n): dimensions plus the exact game value when it fits
// the budget, otherwise the forcing lower bound and the halving/Littlestone
// upper bound.  Families: thresholds, cube, tree-cube, ds-claim, singleton.
std::vector<TrichotomyRow> trichotomy_sweep(const std::string& family, long long param_lo,
                                            long long param_hi, int n_lo, int n_hi,
                                            const SweepBudgets& budgets = {});

// Regime-shape assertions per family; throws SweepAssertionError naming the
// violated inequality.
void assert_trichotomy_shape(const std::vector<TrichotomyRow>& rows);

// Header: family,param,n,vc,ld,td,M_exact_or_lower,M_upper,seconds.
// Bracketed (non-exact) rows are listed in trailing comment lines.
std::string trichotomy_csv(const std::vector<TrichotomyRow>& rows,
                           const std::vector<std::string>& config_comments);

struct AgnosticRow {
  std::string class_name;
  int n = 0;
  long long trials = 0;
  double mean_regret = 0;
  double lower_bound = 0;  // d * sqrt(floor(n/d)) / (2 sqrt 2)
  double upper_bound = 0;  // sqrt((n/2) * ln |H|)
  double halfwidth = 0;    // 3-sigma over trials
};

// Uniform-random-label adversary on the shattered-block sequence against
// the multiplicative-weights learner.
AgnosticRow agnostic_row(const HypothesisClass& cls, const std::string& class_name, int n,
                         long long trials, std::uint64_t seed,
                         std::optional<double> eta = std::nullopt,
                         const SweepBudgets& budgets = {});

// lower - halfwidth*scale <= mean_regret <= upper + halfwidth*scale.
void assert_agnostic_row(const AgnosticRow& row, double tolerance_scale = 1.0);

// Header: class,n,trials,mean_regret,lower_bound_value,upper_bound_value.
std::string agnostic_csv(const std::vector<AgnosticRow>& rows,
                         const std::vector<std::string>& config_comments);

}  // namespace tol
