#pragma once

#include <unordered_map>
#include <vector>

#include "tol/bitset.hpp"
#include "tol/hypothesis.hpp"

namespace tol {

struct GameBudget {
  // transductive_value enumerates distinct-instance sequences within these.
  int max_domain = 7;
  int max_sequence = 7;
  std::int64_t max_hypotheses = 64;
  // fixed_sequence_value caps (the per-sequence minimax itself).
  std::int64_t max_hypotheses_fixed = 4096;
  std::uint64_t max_states = 2'000'000;
};

// Exact minimax mistake count for the game on a fixed revealed sequence:
//   V(vs, t) = min over predictions of the max over realizable labels of
//              mistake-indicator + V(filtered vs, t+1),
// memoized on (version-space mask, position).
class MinimaxOracle {
 public:
  MinimaxOracle(const HypothesisClass& cls, std::vector<int> sequence,
                const GameBudget& budget = {});

  int value();
  const std::vector<int>& sequence() const { return sequence_; }
  const HypothesisClass& cls() const { return cls_; }
  Bitset initial_mask() const;

  int state_value(const Bitset& mask, int t);
  // Optimal prediction at (mask, t); ties break to the lowest label.
  Label best_prediction(const Bitset& mask, int t);
  // Value-maximizing realizable label given the prediction; ties to lowest.
  Label worst_label(const Bitset& mask, int t, Label prediction);
  Bitset filtered(const Bitset& mask, int t, Label y) const;

  std::uint64_t states_used() const { return states_; }

 private:
  std::vector<Label> realizable_labels(const Bitset& mask, int t) const;

  HypothesisClass cls_;
  std::vector<int> sequence_;
  GameBudget budget_;
  std::vector<Bitset> value_masks_;  // x * k + y
  std::vector<std::unordered_map<Bitset, int, BitsetHash>> memo_;  // per position
  std::uint64_t states_ = 0;
};

long long fixed_sequence_value(const HypothesisClass& cls, const std::vector<int>& sequence,
                               const GameBudget& budget = {},
                               std::uint64_t* states_used = nullptr);

// Exact M(cls, n): max of fixed_sequence_value over distinct-instance
// candidate sequences of length min(n, m).  A repeated instance's label is
// forced by the surviving version space, so repeats never increase the
// value; classes invariant under every instance transposition are evaluated
// on a single representative sequence.
long long transductive_value(const HypothesisClass& cls, int n, const GameBudget& budget = {});

// True iff the class's table is invariant under every instance transposition.
bool fully_symmetric(const HypothesisClass& cls);

}  // namespace tol
