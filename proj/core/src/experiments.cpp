#include "tol/experiments.hpp"

#include <chrono>
#include <future>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "tol/zoo.hpp"

namespace tol {

namespace {

int floor_log2_ll(long long v) {
  int r = -1;
  while (v > 0) {
    v >>= 1;
    ++r;
  }
  return r;
}

struct AnalyticDims {
  std::optional<int> vc, ld, td;
};

AnalyticDims analytic_dims(const std::string& family, long long param) {
  AnalyticDims dims;
  if (family == "thresholds") {
    dims.vc = 1;
    dims.ld = floor_log2_ll(param + 1);
    dims.td = static_cast<int>(param);
  } else if (family == "cube") {
    dims.vc = dims.ld = dims.td = static_cast<int>(param);
  } else if (family == "tree-cube") {
    dims.ld = static_cast<int>(param) + 1;
  } else if (family == "ds-claim") {
    dims.ld = static_cast<int>(param) + 1;
  } else if (family == "singleton") {
    dims.vc = dims.ld = dims.td = 0;
  }
  return dims;
}

std::string opt_to_string(const std::optional<int>& v) {
  return v ? std::to_string(*v) : "-";
}

}  // namespace

std::vector<TrichotomyRow> trichotomy_sweep(const std::string& family, long long param_lo,
                                            long long param_hi, int n_lo, int n_hi,
                                            const SweepBudgets& budgets) {
  TOL_REQUIRE(param_lo >= 1 && param_lo <= param_hi, "bad parameter range");
  TOL_REQUIRE(n_lo >= 1 && n_lo <= n_hi, "bad n range");

  // one block of rows per parameter; dimensions are computed once per class
  auto sweep_param = [&](long long param) {
    const HypothesisClass cls = make_class_from_spec(family, {param}, /*seed=*/0);
    std::optional<int> vc, ld, td;
    bool analytic = false;
    try {
      if (cls.label_count() == 2) vc = vc_dim(cls, nullptr, budgets.dims);
      ld = littlestone_dim(cls, budgets.dims);
      td = threshold_dim(cls, nullptr, budgets.dims);
    } catch (const BudgetExceeded&) {
      const AnalyticDims a = analytic_dims(family, param);
      vc = a.vc;
      ld = a.ld;
      td = a.td;
      analytic = true;
    }

    std::vector<TrichotomyRow> block;
    for (int n = n_lo; n <= n_hi; ++n) {
      TrichotomyRow row;
      row.family = family;
      row.param = param;
      row.n = n;
      row.vc = vc;
      row.ld = ld;
      row.td = td;
      row.dims_analytic = analytic;

      const auto start = std::chrono::steady_clock::now();
      try {
        const long long value = transductive_value(cls, n, budgets.game);
        row.m_exact = value;
        row.m_lower = row.m_upper = value;
      } catch (const BudgetExceeded&) {
        long long lower = vc ? std::min<long long>(*vc, n) : 0;
        if (td && *td >= 2 && n >= 2)
          lower = std::max(lower,
                           static_cast<long long>(std::min(floor_log2_ll(*td), floor_log2_ll(n))));
        long long upper = n;
        if (ld) upper = std::min(upper, static_cast<long long>(*ld));
        upper = std::min(upper, static_cast<long long>(floor_log2_ll(cls.size())));
        row.m_lower = lower;
        row.m_upper = upper;
      }
      row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      block.push_back(std::move(row));
    }
    return block;
  };

  // parameter blocks are independent; futures are collected in parameter
  // order so the row order never depends on scheduling
  std::vector<std::future<std::vector<TrichotomyRow>>> futures;
  for (long long param = param_lo; param <= param_hi; ++param)
    futures.push_back(std::async(param_hi > param_lo ? std::launch::async : std::launch::deferred,
                                 sweep_param, param));
  std::vector<TrichotomyRow> rows;
  for (auto& future : futures)
    for (auto& row : future.get()) rows.push_back(std::move(row));
  return rows;
}

void assert_trichotomy_shape(const std::vector<TrichotomyRow>& rows) {
  auto fail = [](const TrichotomyRow& row, const std::string& what) {
    std::ostringstream out;
    out << "trichotomy shape violated: family=" << row.family << " param=" << row.param
        << " n=" << row.n << ": " << what;
    throw SweepAssertionError(out.str());
  };

  for (const auto& row : rows) {
    if (row.m_lower > row.m_upper) fail(row, "lower > upper");
    if (row.m_exact && (*row.m_exact < row.m_lower || *row.m_exact > row.m_upper))
      fail(row, "exact value outside its own bracket");

    if (row.family == "cube") {
      if (!row.m_exact) fail(row, "cube rows must be exact");
      const long long want = std::min<long long>(row.param, row.n);
      if (*row.m_exact != want)
        fail(row, "M = " + std::to_string(*row.m_exact) + ", expected min(d, n) = " +
                      std::to_string(want));
    } else if (row.family == "thresholds") {
      const long long log_n = floor_log2_ll(row.n);
      const long long log_p = floor_log2_ll(row.param);
      if (row.m_lower < std::min(log_p, log_n))
        fail(row, "lower bound below min(floor log2 td, floor log2 n)");
      if (row.param >= row.n && row.m_upper > 3 * log_n + 3)
        fail(row, "upper bound above 3*floor(log2 n) + 3");
    } else if (row.family == "ds-claim") {
      if (!row.m_exact) fail(row, "ds-claim rows must be exact");
      const long long want = std::min<long long>(row.n, row.param + 1);
      if (*row.m_exact != want) fail(row, "M != min(n, param + 1)");
    } else if (row.family == "singleton") {
      if (!row.m_exact || *row.m_exact != 0) fail(row, "singleton M must be 0");
    }
  }

  // within each (family, param): exact values nondecreasing in n, constant
  // once n reaches the domain size
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& prev = rows[i - 1];
    const auto& row = rows[i];
    if (prev.family != row.family || prev.param != row.param || prev.n + 1 != row.n) continue;
    if (prev.m_exact && row.m_exact && *row.m_exact < *prev.m_exact)
      fail(row, "exact M decreased with n");
  }
}

std::string trichotomy_csv(const std::vector<TrichotomyRow>& rows,
                           const std::vector<std::string>& config_comments) {
  std::ostringstream out;
  for (const auto& comment : config_comments) out << "# " << comment << '\n';
  out << "family,param,n,vc,ld,td,M_exact_or_lower,M_upper,seconds\n";
  char buffer[64];
  for (const auto& row : rows) {
    std::snprintf(buffer, sizeof buffer, "%.3f", row.seconds);
    out << row.family << ',' << row.param << ',' << row.n << ',' << opt_to_string(row.vc) << ','
        << opt_to_string(row.ld) << ',' << opt_to_string(row.td) << ','
        << (row.m_exact ? std::to_string(*row.m_exact) : std::to_string(row.m_lower)) << ','
        << row.m_upper << ',' << buffer << '\n';
  }
  for (const auto& row : rows)
    if (!row.m_exact)
      out << "# bracket family=" << row.family << " param=" << row.param << " n=" << row.n
          << " (game value beyond the exact budget)\n";
  for (const auto& row : rows)
    if (row.dims_analytic) {
      out << "# analytic-dims family=" << row.family << " param=" << row.param
          << " (dimension columns from family formulas beyond the exact budget)\n";
      break;
    }
  return out.str();
}

namespace {

// Degenerate agnostic adversary for single-hypothesis classes: uniform
// labels over a constant sequence (there is nothing to shatter).
class UniformPointAdversary : public ObliviousAdversary {
 public:
  explicit UniformPointAdversary(Rng rng) : rng_(rng) {}
  std::vector<int> choose_sequence(const HypothesisClass& cls, int n) override {
    label_count_ = cls.label_count();
    return std::vector<int>(static_cast<std::size_t>(n), 0);
  }
  Label label_at(int) override {
    return static_cast<Label>(rng_.below(static_cast<std::uint64_t>(label_count_)));
  }
  std::string name() const override { return "uniform-point"; }

 private:
  Rng rng_;
  int label_count_ = 2;
};

}  // namespace

AgnosticRow agnostic_row(const HypothesisClass& cls, const std::string& class_name, int n,
                         long long trials, std::uint64_t seed, std::optional<double> eta,
                         const SweepBudgets& budgets) {
  const DimensionBudget dims = budgets.dims;
  const int d = (cls.size() == 1) ? 0 : vc_dim(cls, nullptr, budgets.dims);
  const long long copies = (d >= 1) ? n / d : 0;

  const ObliviousAdversaryFactory adversary =
      (d >= 1) ? ObliviousAdversaryFactory([dims](Rng rng) {
        return make_random_label_adversary(rng, dims);
      })
               : ObliviousAdversaryFactory([](Rng rng) {
                   return std::unique_ptr<ObliviousAdversary>(new UniformPointAdversary(rng));
                 });
  const RegretReport report = run_agnostic(
      cls, adversary, [dims, eta](Rng rng) { return make_mw_learner(rng, eta, dims); }, n, trials,
      seed);

  AgnosticRow row;
  row.class_name = class_name;
  row.n = n;
  row.trials = trials;
  row.mean_regret = report.mean_regret;
  row.lower_bound = d * std::sqrt(static_cast<double>(copies)) / (2.0 * std::sqrt(2.0));
  row.upper_bound = std::sqrt((n / 2.0) * std::log(static_cast<double>(cls.size())));
  row.halfwidth = report.confidence_halfwidth;
  return row;
}

void assert_agnostic_row(const AgnosticRow& row, double tolerance_scale) {
  const double slack = row.halfwidth * tolerance_scale;
  if (row.mean_regret < row.lower_bound - slack) {
    std::ostringstream out;
    out << "agnostic lower bound violated: mean_regret " << row.mean_regret << " < "
        << row.lower_bound << " - " << slack << " (class " << row.class_name << ", n=" << row.n
        << ")";
    throw SweepAssertionError(out.str());
  }
  if (row.mean_regret > row.upper_bound + slack) {
    std::ostringstream out;
    out << "agnostic upper bound violated: mean_regret " << row.mean_regret << " > "
        << row.upper_bound << " + " << slack << " (class " << row.class_name << ", n=" << row.n
        << ")";
    throw SweepAssertionError(out.str());
  }
}

std::string agnostic_csv(const std::vector<AgnosticRow>& rows,
                         const std::vector<std::string>& config_comments) {
  std::ostringstream out;
  for (const auto& comment : config_comments) out << "# " << comment << '\n';
  out << "class,n,trials,mean_regret,lower_bound_value,upper_bound_value\n";
  char buffer[160];
  for (const auto& row : rows) {
    std::snprintf(buffer, sizeof buffer, "%s,%d,%lld,%.6f,%.6f,%.6f", row.class_name.c_str(),
                  row.n, row.trials, row.mean_regret, row.lower_bound, row.upper_bound);
    out << buffer << '\n';
  }
  for (const auto& row : rows) {
    std::snprintf(buffer, sizeof buffer, "# halfwidth %s n=%d: %.6f", row.class_name.c_str(),
                  row.n, row.halfwidth);
    out << buffer << '\n';
  }
  return out.str();
}

}  // namespace tol
