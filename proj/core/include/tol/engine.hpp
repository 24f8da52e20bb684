#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tol/minimax.hpp"
#include "tol/rng.hpp"
#include "tol/strategies.hpp"

namespace tol {

// One full play of the transductive game.
struct Transcript {
  std::vector<int> sequence;
  std::vector<Label> predictions;
  std::vector<Label> labels;
  std::vector<char> mistakes;                     // mistakes[t] = predictions[t] != labels[t]
  std::vector<std::uint64_t> version_space_sizes;  // after filtering round t

  int mistake_count() const;
};

// Columns: t, x, prediction, label, mistake, version_space_size.
std::string transcript_csv(const Transcript& transcript);

// Plays the realizable protocol: the adversary commits the sequence, then
// per round the learner predicts and the adversary labels.  Realizability
// is validated against the full class every round; a violating label
// raises ProtocolViolation naming the round (1-based).
Transcript run_realizable(const HypothesisClass& cls, Adversary& adversary, Learner& learner,
                          int n, const DimensionBudget& budget = {});

struct RegretReport {
  long long trials = 0;
  double mean_learner_mistakes = 0;
  double mean_best_hypothesis_mistakes = 0;
  double mean_regret = 0;
  double confidence_halfwidth = 0;  // 3-sigma normal approximation
};

using LearnerFactory = std::function<std::unique_ptr<Learner>(Rng)>;
using ObliviousAdversaryFactory = std::function<std::unique_ptr<ObliviousAdversary>(Rng)>;

// Agnostic protocol: per round the adversary commits its label (the engine
// hashes it) before the learner's prediction is revealed, then the label is
// disclosed and checked against the commitment.  Per-trial RNG streams are
// derived from (seed, trial); trial results are reduced in trial order so
// the report does not depend on scheduling.
RegretReport run_agnostic(const HypothesisClass& cls, const ObliviousAdversaryFactory& adversary,
                          const LearnerFactory& learner, int n, long long trials,
                          std::uint64_t seed);

// Worst case over all realizable label choices against a deterministic
// learner on a fixed sequence (exhaustive adversary search).
int worst_case_mistakes(const HypothesisClass& cls, const std::vector<int>& sequence,
                        const Learner& prototype, const DimensionBudget& budget = {});

// Fewest mistakes any fixed hypothesis makes on the labeled sequence.
long long best_hypothesis_mistakes(const HypothesisClass& cls, const std::vector<int>& sequence,
                                   const std::vector<Label>& labels);

}  // namespace tol
