#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tol/dimensions.hpp"
#include "tol/minimax.hpp"
#include "tol/rng.hpp"
#include "tol/trees.hpp"

namespace tol {

// Sequential-prediction learner.  predict(t) is called exactly once before
// observe(t, y); deterministic learners are pure functions of the class,
// the revealed sequence, and the observed history.  A learner instance is
// single-threaded; clone() supports branching searches over label choices.
class Learner {
 public:
  virtual ~Learner() = default;
  virtual void init(const HypothesisClass& cls, const std::vector<int>& sequence) = 0;
  virtual Label predict(int t) = 0;
  virtual void observe(int t, Label y) = 0;
  virtual std::unique_ptr<Learner> clone() const = 0;
  virtual std::string name() const = 0;
};

class Adversary {
 public:
  virtual ~Adversary() = default;
  virtual bool realizable() const = 0;
  virtual std::vector<int> choose_sequence(const HypothesisClass& cls, int n) = 0;
  virtual Label label(int t, Label prediction) = 0;
  virtual std::string name() const = 0;
};

// Agnostic adversaries here are oblivious label processes: the label at
// round t never depends on the prediction, which lets the engine take a
// commitment before revealing the learner's prediction.
class ObliviousAdversary : public Adversary {
 public:
  bool realizable() const final { return false; }
  Label label(int t, Label) final { return label_at(t); }
  virtual Label label_at(int t) = 0;
};

// Majority vote over the version space of the class restricted to the
// sequence; mistakes at most floor(log2 |H|x|).
std::unique_ptr<Learner> make_halving_learner(const DimensionBudget& budget = {});

// Predicts the label whose version-space restriction has maximal
// Littlestone dimension (ties to the lowest label); mistakes <= LD.
std::unique_ptr<Learner> make_soa_learner(const DimensionBudget& budget = {});

// Multiplicative weights over the restricted class: each erring hypothesis
// is scaled by exp(-eta); predictions are randomized weighted majority.
// Default learning rate: sqrt(8 ln|H|x| / n).
std::unique_ptr<Learner> make_mw_learner(Rng rng, std::optional<double> eta = std::nullopt,
                                         const DimensionBudget& budget = {});

// Plays the exact minimax policy for the revealed sequence; never exceeds
// fixed_sequence_value mistakes against any realizable adversary.
std::unique_ptr<Learner> make_best_response_learner(const GameBudget& budget = {});

// Uniform random predictions (baseline for adversary lower bounds).
std::unique_ptr<Learner> make_random_learner(Rng rng);

// Presents a maximum VC-shattered set (truncated to n) and flips every
// prediction on it; repeats of the last point past the set are forced.
std::unique_ptr<Adversary> make_vc_adversary(const DimensionBudget& budget = {});

// Presents a threshold-shattered chain in dyadic (binary-search) order and
// forces one mistake per level: min(floor log2 TD, floor log2 n) in total.
// With TD < 2 it degenerates to a single forceable point.
std::unique_ptr<Adversary> make_dyadic_adversary(const DimensionBudget& budget = {});

enum class BfsThresholdSchedule {
  kStandard,    // t*_k = 2^(2^(2k)); carries the mistake-bound guarantee
  kCompressed,  // t*_k = 2^(2k); exploratory only, no guarantee
};

// Breadth-first shattered-tree adversary: walks the tree in BFS order and
// forces a mistake whenever the branch-witness version space is balanced at
// the current node (ratio within [tau, 1-tau]); otherwise emits the
// majority value.  `tree` defaults to the class's own tree for tree-cube
// classes and to a reconstructed Littlestone witness tree otherwise.
std::unique_ptr<Adversary> make_bfs_tree_adversary(
    std::optional<LittlestoneTree> tree = std::nullopt,
    BfsThresholdSchedule schedule = BfsThresholdSchedule::kStandard,
    const DimensionBudget& budget = {});

// Optimal adversary: value-achieving sequence plus value-maximizing labels.
std::unique_ptr<Adversary> make_minimax_adversary(const GameBudget& budget = {});

// Agnostic: a maximum VC-shattered set presented in blocks of floor(n/d)
// repeats, labels i.i.d. uniform; trailing rounds repeat the first point.
std::unique_ptr<ObliviousAdversary> make_random_label_adversary(Rng rng,
                                                                const DimensionBudget& budget = {});

// Per-round diagnostics exposed by the BFS tree adversary for invariant
// checks: the balance ratio, the forcing threshold, and the phase counter.
struct BfsRoundInfo {
  double ratio = 0;
  int phase = 0;  // k before processing the round
  bool forced = false;
};
const std::vector<BfsRoundInfo>* bfs_round_info(const Adversary& adversary);

}  // namespace tol
