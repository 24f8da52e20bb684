#include "tol/minimax.hpp"

#include <algorithm>

namespace tol {

MinimaxOracle::MinimaxOracle(const HypothesisClass& cls, std::vector<int> sequence,
                             const GameBudget& budget)
    : cls_(cls.materialized(budget.max_hypotheses_fixed)),
      sequence_(std::move(sequence)),
      budget_(budget) {
  if (cls_.size() > budget_.max_hypotheses_fixed)
    throw BudgetExceeded("fixed_sequence_value: class exceeds the hypothesis budget",
                         static_cast<std::uint64_t>(cls_.size()));
  for (int x : sequence_)
    TOL_REQUIRE(x >= 0 && x < cls_.domain_size(), "sequence instance out of range");

  const auto& rows = cls_.table();
  const int m = cls_.domain_size();
  const int k = cls_.label_count();
  value_masks_.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(k),
                      Bitset(rows.size()));
  for (std::size_t h = 0; h < rows.size(); ++h)
    for (int x = 0; x < m; ++x)
      value_masks_[static_cast<std::size_t>(x) * static_cast<std::size_t>(k) +
                   static_cast<std::size_t>(rows[h][static_cast<std::size_t>(x)])]
          .set(h);
  memo_.resize(sequence_.size() + 1);
}

Bitset MinimaxOracle::initial_mask() const {
  return Bitset(static_cast<std::size_t>(cls_.size()), true);
}

Bitset MinimaxOracle::filtered(const Bitset& mask, int t, Label y) const {
  const int x = sequence_[static_cast<std::size_t>(t)];
  return mask & value_masks_[static_cast<std::size_t>(x) * static_cast<std::size_t>(cls_.label_count()) +
                             static_cast<std::size_t>(y)];
}

std::vector<Label> MinimaxOracle::realizable_labels(const Bitset& mask, int t) const {
  const int x = sequence_[static_cast<std::size_t>(t)];
  std::vector<Label> out;
  for (Label y = 0; y < cls_.label_count(); ++y) {
    if (mask.count_and(value_masks_[static_cast<std::size_t>(x) * static_cast<std::size_t>(cls_.label_count()) +
                                    static_cast<std::size_t>(y)]) > 0)
      out.push_back(y);
  }
  return out;
}

int MinimaxOracle::state_value(const Bitset& mask, int t) {
  if (t >= static_cast<int>(sequence_.size())) return 0;
  auto& memo = memo_[static_cast<std::size_t>(t)];
  if (auto it = memo.find(mask); it != memo.end()) return it->second;
  if (++states_ > budget_.max_states)
    throw BudgetExceeded("fixed_sequence_value: state budget exhausted", states_);

  const auto labels = realizable_labels(mask, t);
  std::vector<int> child(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i)
    child[i] = state_value(filtered(mask, t, labels[i]), t + 1);

  int best = INT32_MAX;
  for (Label prediction = 0; prediction < cls_.label_count(); ++prediction) {
    int worst = 0;
    for (std::size_t i = 0; i < labels.size(); ++i)
      worst = std::max(worst, (labels[i] != prediction ? 1 : 0) + child[i]);
    best = std::min(best, worst);
  }
  memo.emplace(mask, best);
  return best;
}

int MinimaxOracle::value() { return state_value(initial_mask(), 0); }

Label MinimaxOracle::best_prediction(const Bitset& mask, int t) {
  const auto labels = realizable_labels(mask, t);
  std::vector<int> child(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i)
    child[i] = state_value(filtered(mask, t, labels[i]), t + 1);
  Label best_label = 0;
  int best = INT32_MAX;
  for (Label prediction = 0; prediction < cls_.label_count(); ++prediction) {
    int worst = 0;
    for (std::size_t i = 0; i < labels.size(); ++i)
      worst = std::max(worst, (labels[i] != prediction ? 1 : 0) + child[i]);
    if (worst < best) {
      best = worst;
      best_label = prediction;
    }
  }
  return best_label;
}

Label MinimaxOracle::worst_label(const Bitset& mask, int t, Label prediction) {
  const auto labels = realizable_labels(mask, t);
  TOL_REQUIRE(!labels.empty(), "no realizable label: empty version space");
  Label best_label = labels[0];
  int best = -1;
  for (Label y : labels) {
    const int cost = (y != prediction ? 1 : 0) + state_value(filtered(mask, t, y), t + 1);
    if (cost > best) {
      best = cost;
      best_label = y;
    }
  }
  return best_label;
}

long long fixed_sequence_value(const HypothesisClass& cls, const std::vector<int>& sequence,
                               const GameBudget& budget, std::uint64_t* states_used) {
  if (sequence.empty()) return 0;
  MinimaxOracle oracle(cls, sequence, budget);
  const long long v = oracle.value();
  if (states_used) *states_used = oracle.states_used();
  return v;
}

bool fully_symmetric(const HypothesisClass& cls) {
  if (!cls.is_explicit()) return false;
  auto sorted_rows = cls.table();
  std::sort(sorted_rows.begin(), sorted_rows.end());
  const int m = cls.domain_size();
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      auto swapped = cls.table();
      for (auto& row : swapped)
        std::swap(row[static_cast<std::size_t>(i)], row[static_cast<std::size_t>(j)]);
      std::sort(swapped.begin(), swapped.end());
      if (swapped != sorted_rows) return false;
    }
  }
  return true;
}

namespace {

long long max_over_sequences(const HypothesisClass& cls, int length, const GameBudget& budget) {
  std::vector<int> sequence;
  std::vector<char> used(static_cast<std::size_t>(cls.domain_size()), 0);
  long long best = 0;

  auto dfs = [&](auto&& self) -> void {
    if (static_cast<int>(sequence.size()) == length) {
      best = std::max(best, fixed_sequence_value(cls, sequence, budget));
      return;
    }
    for (int x = 0; x < cls.domain_size(); ++x) {
      if (used[static_cast<std::size_t>(x)]) continue;
      used[static_cast<std::size_t>(x)] = 1;
      sequence.push_back(x);
      self(self);
      sequence.pop_back();
      used[static_cast<std::size_t>(x)] = 0;
    }
  };
  dfs(dfs);
  return best;
}

}  // namespace

long long transductive_value(const HypothesisClass& cls, int n, const GameBudget& budget) {
  TOL_REQUIRE(n >= 0, "transductive_value needs n >= 0");
  if (n == 0) return 0;
  const HypothesisClass ex = cls.materialized(budget.max_hypotheses);
  if (ex.domain_size() > budget.max_domain || ex.size() > budget.max_hypotheses ||
      std::min(n, ex.domain_size()) > budget.max_sequence)
    throw BudgetExceeded("transductive_value: class or horizon exceeds the game budget",
                         static_cast<std::uint64_t>(ex.size()));

  const int length = std::min(n, ex.domain_size());
  if (fully_symmetric(ex)) {
    std::vector<int> sequence(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i) sequence[static_cast<std::size_t>(i)] = i;
    return fixed_sequence_value(ex, sequence, budget);
  }
  return max_over_sequences(ex, length, budget);
}

}  // namespace tol
