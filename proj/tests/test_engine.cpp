#include "doctest.h"
#include "tol/engine.hpp"
#include "tol/strategies.hpp"
#include "tol/zoo.hpp"

#include <algorithm>

using namespace tol;

namespace {

// Test double: claims realizability but emits a label that empties the
// version space as soon as it can.
class CheatingAdversary : public Adversary {
 public:
  bool realizable() const override { return true; }
  std::vector<int> choose_sequence(const HypothesisClass&, int n) override {
    return std::vector<int>(static_cast<std::size_t>(n), 0);
  }
  Label label(int t, Label) override { return t == 0 ? 1 : 0; }
  std::string name() const override { return "cheater"; }
};

class FixedSequenceUniformAdversary : public ObliviousAdversary {
 public:
  explicit FixedSequenceUniformAdversary(Rng rng) : rng_(rng) {}
  std::vector<int> choose_sequence(const HypothesisClass& cls, int n) override {
    std::vector<int> seq;
    for (int t = 0; t < n; ++t) seq.push_back(t % cls.domain_size());
    label_count_ = cls.label_count();
    return seq;
  }
  Label label_at(int) override { return static_cast<Label>(rng_.below(static_cast<std::uint64_t>(label_count_))); }
  std::string name() const override { return "uniform"; }

 private:
  Rng rng_;
  int label_count_ = 2;
};

}  // namespace

TEST_CASE("realizable runs record full transcripts") {
  auto adversary = make_vc_adversary();
  auto learner = make_halving_learner();
  const auto t = run_realizable(full_cube(3), *adversary, *learner, 3);
  CHECK(t.mistake_count() == 3);
  CHECK(t.sequence.size() == 3);
  CHECK(t.version_space_sizes.back() >= 1);
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(static_cast<bool>(t.mistakes[i]) == (t.predictions[i] != t.labels[i]));

  const std::string csv = transcript_csv(t);
  CHECK(csv.rfind("t,x,prediction,label,mistake,version_space_size\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
}

TEST_CASE("transcript bytes are frozen for a deterministic run") {
  auto adversary = make_vc_adversary();
  auto learner = make_halving_learner();
  const auto t = run_realizable(full_cube(2), *adversary, *learner, 2);
  // halving breaks ties toward 0, the adversary flips on the shattered set
  CHECK(transcript_csv(t) ==
        "t,x,prediction,label,mistake,version_space_size\n"
        "1,0,0,1,1,2\n"
        "2,1,0,1,1,1\n");
}

TEST_CASE("dyadic versus soa on thresholds stays inside the proved window") {
  auto adversary = make_dyadic_adversary();
  auto learner = make_soa_learner();
  const auto t = run_realizable(thresholds(7), *adversary, *learner, 7);
  CHECK(t.mistake_count() >= 2);
  CHECK(t.mistake_count() <= 3);
}

TEST_CASE("singleton games never produce mistakes") {
  auto adversary = make_minimax_adversary();
  auto learner = make_halving_learner();
  CHECK(run_realizable(singleton(3), *adversary, *learner, 3).mistake_count() == 0);
}

TEST_CASE("protocol violations name the round") {
  CheatingAdversary cheater;
  auto learner = make_best_response_learner();
  try {
    run_realizable(singleton(2), cheater, *learner, 2);
    FAIL("expected a protocol violation");
  } catch (const ProtocolViolation& e) {
    CHECK(e.round == 1);
  }
}

TEST_CASE("agnostic runs are reproducible and singleton regret is exactly zero") {
  const auto cls = singleton(3);
  const auto report = run_agnostic(
      cls, [](Rng rng) { return std::make_unique<FixedSequenceUniformAdversary>(rng); },
      [](Rng rng) { return make_mw_learner(rng); }, 12, 50, 99);
  CHECK(report.mean_regret == 0.0);
  CHECK(report.mean_learner_mistakes == report.mean_best_hypothesis_mistakes);

  const auto again = run_agnostic(
      cls, [](Rng rng) { return std::make_unique<FixedSequenceUniformAdversary>(rng); },
      [](Rng rng) { return make_mw_learner(rng); }, 12, 50, 99);
  CHECK(report.mean_learner_mistakes == again.mean_learner_mistakes);
  CHECK(report.confidence_halfwidth == again.confidence_halfwidth);
}

TEST_CASE("best hypothesis mistakes") {
  const auto t3 = thresholds(3);
  // labels matching h_2 exactly
  CHECK(best_hypothesis_mistakes(t3, {0, 1, 2}, {1, 1, 0}) == 0);
  CHECK(best_hypothesis_mistakes(t3, {0, 1, 2}, {0, 1, 0}) == 1);
}

TEST_CASE("worst case search explores every realizable labeling") {
  // full cube on two points: both rounds can always be flipped
  const auto cube = full_cube(2);
  CHECK(worst_case_mistakes(cube, {0, 1}, *make_halving_learner()) == 2);
  CHECK(worst_case_mistakes(cube, {0, 1}, *make_best_response_learner()) == 2);

  // thresholds(3) on its worst order: the minimax value is 2
  CHECK(worst_case_mistakes(thresholds(3), {1, 2, 0}, *make_halving_learner()) >= 2);
}

TEST_CASE("tagged truncation classes lose at most one point") {
  const auto g2 = g_truncation(2);
  const auto learner = make_best_response_learner(GameBudget{.max_hypotheses_fixed = 64});
  // every distinct-instance sequence of length 3
  std::vector<int> seq;
  std::vector<char> used(static_cast<std::size_t>(g2.domain_size()), 0);
  int checked = 0;
  auto dfs = [&](auto&& self) -> void {
    if (seq.size() == 3) {
      CHECK(worst_case_mistakes(g2, seq, *learner) <= 1);
      ++checked;
      return;
    }
    for (int x = 0; x < g2.domain_size(); ++x) {
      if (used[static_cast<std::size_t>(x)]) continue;
      used[static_cast<std::size_t>(x)] = 1;
      seq.push_back(x);
      self(self);
      seq.pop_back();
      used[static_cast<std::size_t>(x)] = 0;
    }
  };
  dfs(dfs);
  CHECK(checked == 10 * 9 * 8);
}
