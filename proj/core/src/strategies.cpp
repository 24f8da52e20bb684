#include "tol/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <set>

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

// Shared learner plumbing: a version counter over the class restricted to
// the revealed sequence (implicit classes with their own counter are used
// unrestricted; ties and forced labels are unaffected).
struct TrackedVersionSpace {
  std::shared_ptr<const HypothesisClass> cls;  // restricted or original
  std::vector<int> remap;                      // original instance -> tracked instance
  std::unique_ptr<VersionCounter> counter;

  TrackedVersionSpace() = default;
  TrackedVersionSpace(const TrackedVersionSpace& other)
      : cls(other.cls), remap(other.remap), counter(other.counter ? other.counter->clone() : nullptr) {}

  void init(const HypothesisClass& source, const std::vector<int>& sequence,
            const DimensionBudget& budget) {
    remap.assign(static_cast<std::size_t>(source.domain_size()), -1);
    if (!source.is_explicit() && source.generator()->make_counter()) {
      cls = std::make_shared<const HypothesisClass>(source);
      for (int x = 0; x < source.domain_size(); ++x) remap[static_cast<std::size_t>(x)] = x;
      counter = source.generator()->make_counter();
      return;
    }
    std::vector<int> instances;
    for (int x : sequence)
      if (remap[static_cast<std::size_t>(x)] < 0) {
        remap[static_cast<std::size_t>(x)] = static_cast<int>(instances.size());
        instances.push_back(x);
      }
    cls = std::make_shared<const HypothesisClass>(source.restricted(instances));
    counter = make_version_counter(*cls, budget);
  }

  int tracked(int x) const {
    TOL_REQUIRE(x >= 0 && x < static_cast<int>(remap.size()) && remap[static_cast<std::size_t>(x)] >= 0,
                "instance not in the revealed sequence");
    return remap[static_cast<std::size_t>(x)];
  }
};

// ---------------------------------------------------------------------------
// Learners
// ---------------------------------------------------------------------------

class HalvingLearner : public Learner {
 public:
  explicit HalvingLearner(const DimensionBudget& budget) : budget_(budget) {}

  void init(const HypothesisClass& cls, const std::vector<int>& sequence) override {
    sequence_ = sequence;
    vs_.init(cls, sequence, budget_);
  }

  Label predict(int t) override {
    const int x = vs_.tracked(sequence_[static_cast<std::size_t>(t)]);
    const auto counts = vs_.counter->label_counts(x);
    Label best = 0;
    for (Label y = 1; y < static_cast<Label>(counts.size()); ++y)
      if (counts[static_cast<std::size_t>(y)] > counts[static_cast<std::size_t>(best)]) best = y;
    return best;
  }

  void observe(int t, Label y) override {
    vs_.counter->filter(vs_.tracked(sequence_[static_cast<std::size_t>(t)]), y);
    if (vs_.counter->size() == 0)
      throw ProtocolViolation("halving: version space emptied by a non-realizable label", t + 1);
  }

  std::unique_ptr<Learner> clone() const override { return std::make_unique<HalvingLearner>(*this); }
  std::string name() const override { return "halving"; }

 private:
  DimensionBudget budget_;
  std::vector<int> sequence_;
  TrackedVersionSpace vs_;
};

class SoaLearner : public Learner {
 public:
  explicit SoaLearner(const DimensionBudget& budget) : budget_(budget) {}

  void init(const HypothesisClass& cls, const std::vector<int>& sequence) override {
    sequence_ = sequence;
    vs_.init(cls, sequence, budget_);
  }

  Label predict(int t) override {
    const int x = vs_.tracked(sequence_[static_cast<std::size_t>(t)]);
    const auto counts = vs_.counter->label_counts(x);
    Label best = -1;
    int best_ld = -1;
    for (Label y = 0; y < static_cast<Label>(counts.size()); ++y) {
      if (counts[static_cast<std::size_t>(y)] == 0) continue;
      auto branch = vs_.counter->clone();
      branch->filter(x, y);
      const int ld = branch->littlestone_dim();
      if (ld > best_ld) {
        best_ld = ld;
        best = y;
      }
    }
    TOL_REQUIRE(best >= 0, "soa: empty version space");
    return best;
  }

  void observe(int t, Label y) override {
    vs_.counter->filter(vs_.tracked(sequence_[static_cast<std::size_t>(t)]), y);
    if (vs_.counter->size() == 0)
      throw ProtocolViolation("soa: version space emptied by a non-realizable label", t + 1);
  }

  std::unique_ptr<Learner> clone() const override { return std::make_unique<SoaLearner>(*this); }
  std::string name() const override { return "soa"; }

 private:
  DimensionBudget budget_;
  std::vector<int> sequence_;
  TrackedVersionSpace vs_;
};

class MwLearner : public Learner {
 public:
  MwLearner(Rng rng, std::optional<double> eta, const DimensionBudget& budget)
      : rng_(rng), eta_param_(eta), budget_(budget) {}

  void init(const HypothesisClass& cls, const std::vector<int>& sequence) override {
    sequence_ = sequence;
    remap_.assign(static_cast<std::size_t>(cls.domain_size()), -1);
    std::vector<int> instances;
    for (int x : sequence)
      if (remap_[static_cast<std::size_t>(x)] < 0) {
        remap_[static_cast<std::size_t>(x)] = static_cast<int>(instances.size());
        instances.push_back(x);
      }
    restricted_ = std::make_shared<const HypothesisClass>(
        cls.materialized(budget_.max_hypotheses).restricted(instances));
    weights_.assign(static_cast<std::size_t>(restricted_->size()), 1.0);
    eta_ = eta_param_.value_or(std::sqrt(8.0 * std::log(static_cast<double>(restricted_->size())) /
                                         std::max<std::size_t>(sequence.size(), 1)));
  }

  Label predict(int t) override {
    const int x = remap_[static_cast<std::size_t>(sequence_[static_cast<std::size_t>(t)])];
    const int k = restricted_->label_count();
    std::vector<double> mass(static_cast<std::size_t>(k), 0.0);
    double total = 0;
    for (std::int64_t h = 0; h < restricted_->size(); ++h) {
      mass[static_cast<std::size_t>(restricted_->evaluate(h, x))] += weights_[static_cast<std::size_t>(h)];
      total += weights_[static_cast<std::size_t>(h)];
    }
    double draw = rng_.u01() * total;
    for (Label y = 0; y < k; ++y) {
      draw -= mass[static_cast<std::size_t>(y)];
      if (draw < 0) return y;
    }
    return static_cast<Label>(k - 1);
  }

  void observe(int t, Label y) override {
    const int x = remap_[static_cast<std::size_t>(sequence_[static_cast<std::size_t>(t)])];
    const double decay = std::exp(-eta_);
    double total = 0;
    for (std::int64_t h = 0; h < restricted_->size(); ++h) {
      if (restricted_->evaluate(h, x) != y) weights_[static_cast<std::size_t>(h)] *= decay;
      total += weights_[static_cast<std::size_t>(h)];
    }
    // keep weights normalizable across long runs
    if (total < 1e-100)
      for (auto& w : weights_) w *= 1e100;
  }

  std::unique_ptr<Learner> clone() const override { return std::make_unique<MwLearner>(*this); }
  std::string name() const override { return "mw"; }

 private:
  Rng rng_;
  std::optional<double> eta_param_;
  DimensionBudget budget_;
  double eta_ = 0;
  std::vector<int> sequence_;
  std::vector<int> remap_;
  std::shared_ptr<const HypothesisClass> restricted_;
  std::vector<double> weights_;
};

class BestResponseLearner : public Learner {
 public:
  explicit BestResponseLearner(const GameBudget& budget) : budget_(budget) {}

  void init(const HypothesisClass& cls, const std::vector<int>& sequence) override {
    oracle_ = std::make_shared<MinimaxOracle>(cls, sequence, budget_);
    mask_ = oracle_->initial_mask();
  }

  Label predict(int t) override { return oracle_->best_prediction(mask_, t); }

  void observe(int t, Label y) override {
    mask_ = oracle_->filtered(mask_, t, y);
    if (mask_.none())
      throw ProtocolViolation("best-response: version space emptied by a non-realizable label",
                              t + 1);
  }

  std::unique_ptr<Learner> clone() const override {
    return std::make_unique<BestResponseLearner>(*this);  // shares the oracle memo
  }
  std::string name() const override { return "best-response"; }

 private:
  GameBudget budget_;
  std::shared_ptr<MinimaxOracle> oracle_;
  Bitset mask_;
};

class RandomLearner : public Learner {
 public:
  explicit RandomLearner(Rng rng) : rng_(rng) {}
  void init(const HypothesisClass& cls, const std::vector<int>&) override {
    label_count_ = cls.label_count();
  }
  Label predict(int) override { return static_cast<Label>(rng_.below(static_cast<std::uint64_t>(label_count_))); }
  void observe(int, Label) override {}
  std::unique_ptr<Learner> clone() const override { return std::make_unique<RandomLearner>(*this); }
  std::string name() const override { return "random"; }

 private:
  Rng rng_;
  int label_count_ = 2;
};

// ---------------------------------------------------------------------------
// Adversaries
// ---------------------------------------------------------------------------

class VcAdversary : public Adversary {
 public:
  explicit VcAdversary(const DimensionBudget& budget) : budget_(budget) {}

  bool realizable() const override { return true; }

  std::vector<int> choose_sequence(const HypothesisClass& cls, int n) override {
    TOL_REQUIRE(n >= 1, "adversary needs n >= 1");
    VcWitness witness;
    vc_dim(cls, &witness, budget_);
    std::vector<int> seq;
    if (witness.points.empty()) witness.points.push_back(0);
    for (int t = 0; t < n; ++t)
      seq.push_back(witness.points[static_cast<std::size_t>(
          std::min<std::size_t>(static_cast<std::size_t>(t), witness.points.size() - 1))]);
    shattered_prefix_ = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(n),
                                                               witness.points.size()));
    sequence_ = seq;
    counter_ = make_version_counter(cls, budget_);
    recorded_.assign(static_cast<std::size_t>(cls.domain_size()), -1);
    return seq;
  }

  Label label(int t, Label prediction) override {
    const int x = sequence_[static_cast<std::size_t>(t)];
    Label y;
    if (t < shattered_prefix_ && counter_->label_counts(x)[prediction == 0 ? 1 : 0] > 0) {
      y = (prediction == 0) ? 1 : 0;  // flip on the shattered prefix
    } else if (recorded_[static_cast<std::size_t>(x)] >= 0) {
      y = recorded_[static_cast<std::size_t>(x)];
    } else {
      const auto counts = counter_->label_counts(x);
      y = 0;
      for (Label c = 0; c < static_cast<Label>(counts.size()); ++c)
        if (counts[static_cast<std::size_t>(c)] > 0) {
          y = c;
          break;
        }
    }
    counter_->filter(x, y);
    recorded_[static_cast<std::size_t>(x)] = y;
    return y;
  }

  std::string name() const override { return "vc"; }

 private:
  DimensionBudget budget_;
  std::vector<int> sequence_;
  std::vector<Label> recorded_;
  std::unique_ptr<VersionCounter> counter_;
  int shattered_prefix_ = 0;
};

class DyadicAdversary : public Adversary {
 public:
  explicit DyadicAdversary(const DimensionBudget& budget) : budget_(budget) {}

  bool realizable() const override { return true; }

  std::vector<int> choose_sequence(const HypothesisClass& cls, int n) override {
    TOL_REQUIRE(n >= 1, "adversary needs n >= 1");
    ThresholdWitness witness;
    const int td = threshold_dim(cls, &witness, budget_);
    y_prefix_ = witness.y_prefix;
    y_suffix_ = witness.y_suffix;
    levels_ = std::min(floor_log2_ll(std::max(td, 1)), floor_log2_ll(n));

    std::vector<int> seq;
    if (levels_ >= 1) {
      // Chain c_1..c_N with N = 2^levels; midpoints of (1, N+1] level by
      // level.  c_1 and c_N are never played, so an all-prefix-label or
      // all-suffix-label play stays realizable via the end witnesses.
      const int chain_len = 1 << levels_;
      chain_.assign(witness.points.begin(), witness.points.begin() + chain_len);
      lo_ = 1;
      hi_ = chain_len + 1;
      std::vector<std::pair<int, int>> gaps{{lo_, hi_}};
      while (!gaps.empty()) {
        std::vector<std::pair<int, int>> next;
        for (auto [a, b] : gaps) {
          const int mid = (a + b) / 2;
          if (mid == a || mid == b) continue;
          midpoints_.push_back(mid);
          if (b - a > 2) {
            next.push_back({a, mid});
            next.push_back({mid, b});
          }
        }
        gaps = std::move(next);
      }
      for (int mid : midpoints_) seq.push_back(chain_[static_cast<std::size_t>(mid - 1)]);
    } else {
      // Degenerate: td or n below 2; play one forceable point if any.
      const int point = witness.points.empty() ? 0 : witness.points[0];
      seq.push_back(point);
    }
    while (static_cast<int>(seq.size()) < n) seq.push_back(seq.back());
    sequence_ = seq;
    counter_ = make_version_counter(cls, budget_);
    recorded_.assign(static_cast<std::size_t>(cls.domain_size()), -1);
    return seq;
  }

  Label label(int t, Label prediction) override {
    const int x = sequence_[static_cast<std::size_t>(t)];
    Label y;
    if (levels_ >= 1 && t < static_cast<int>(midpoints_.size())) {
      const int mid = midpoints_[static_cast<std::size_t>(t)];
      if (lo_ < mid && mid < hi_) {
        y = (prediction == y_prefix_) ? y_suffix_ : y_prefix_;  // force a mistake
        if (y == y_prefix_)
          lo_ = mid;
        else
          hi_ = mid;
      } else {
        y = (mid <= lo_) ? y_prefix_ : y_suffix_;
      }
    } else if (recorded_[static_cast<std::size_t>(x)] >= 0) {
      y = recorded_[static_cast<std::size_t>(x)];
    } else {
      // single-point degenerate play: force if both labels realizable
      const auto counts = counter_->label_counts(x);
      y = -1;
      for (Label c = 0; c < static_cast<Label>(counts.size()); ++c)
        if (counts[static_cast<std::size_t>(c)] > 0 && c != prediction) {
          y = c;
          break;
        }
      if (y < 0) y = prediction;  // only the predicted label is realizable
    }
    counter_->filter(x, y);
    recorded_[static_cast<std::size_t>(x)] = y;
    return y;
  }

  std::string name() const override { return "dyadic"; }

 private:
  DimensionBudget budget_;
  std::vector<int> sequence_;
  std::vector<int> chain_;      // chain instances c_1..c_N in staircase order
  std::vector<int> midpoints_;  // played chain indices (1-based), dyadic order
  std::vector<Label> recorded_;
  std::unique_ptr<VersionCounter> counter_;
  Label y_prefix_ = 1, y_suffix_ = 0;
  int levels_ = 0;
  int lo_ = 0, hi_ = 0;
};

class BfsTreeAdversary : public Adversary {
 public:
  BfsTreeAdversary(std::optional<LittlestoneTree> tree, BfsThresholdSchedule schedule,
                   const DimensionBudget& budget)
      : tree_(std::move(tree)), schedule_(schedule), budget_(budget) {}

  bool realizable() const override { return true; }

  std::vector<int> choose_sequence(const HypothesisClass& cls, int n) override {
    TOL_REQUIRE(n >= 1, "adversary needs n >= 1");
    if (!tree_) {
      if (!cls.is_explicit() && cls.generator()->make_counter()) {
        // tree-cube class: its domain is the tree, instance index == node id
        const int depth = floor_log2_ll(cls.size()) - 1;
        std::vector<int> instances(static_cast<std::size_t>(cls.domain_size()));
        for (int i = 0; i < cls.domain_size(); ++i) instances[static_cast<std::size_t>(i)] = i;
        tree_ = LittlestoneTree::binary(depth, std::move(instances));
      } else {
        tree_ = littlestone_witness_tree(cls, budget_);
        TOL_REQUIRE(tree_.has_value(), "bfs-tree adversary: class has Littlestone dimension 0");
      }
    }

    // Version space over the branch witnesses H1.
    if (!cls.is_explicit() && cls.generator()->make_counter()) {
      counter_ = cls.generator()->make_counter();
    } else {
      const auto witness = shatters(cls, *tree_);
      TOL_REQUIRE(witness.has_value(), "bfs-tree adversary: class does not shatter the tree");
      std::set<std::int64_t> unique_hyps(witness->branch_hyp.begin(), witness->branch_hyp.end());
      const HypothesisClass ex = cls.materialized(budget_.max_hypotheses);
      std::vector<std::vector<Label>> rows;
      for (std::int64_t h : unique_hyps) {
        std::vector<Label> row(static_cast<std::size_t>(ex.domain_size()));
        for (int x = 0; x < ex.domain_size(); ++x) row[static_cast<std::size_t>(x)] = ex.evaluate(h, x);
        rows.push_back(std::move(row));
      }
      witnesses_ = HypothesisClass::from_rows(ex.domain_size(), ex.label_count(), std::move(rows));
      counter_ = make_version_counter(witnesses_, budget_);
    }
    sequence_ = bfs_sequence(*tree_, n);
    recorded_.assign(static_cast<std::size_t>(cls.domain_size()), -1);
    phase_ = 1;
    rounds_.clear();
    return sequence_;
  }

  Label label(int t, Label prediction) override {
    const int x = sequence_[static_cast<std::size_t>(t)];
    const auto counts = counter_->label_counts(x);
    const std::uint64_t ones = counts[1];
    const std::uint64_t total = counts[0] + counts[1];

    // forcing window: ratio in [tau, 1-tau] with tau = 1 / t*_k
    const int exponent = (schedule_ == BfsThresholdSchedule::kStandard)
                             ? ((2 * phase_ >= 6) ? 64 : (1 << (2 * phase_)))
                             : 2 * phase_;
    const bool forced = at_least_tau(ones, total, exponent) &&
                        at_least_tau(total - ones, total, exponent);

    Label y;
    if (forced) {
      y = (prediction == 0) ? 1 : 0;
      ++phase_;
    } else {
      y = (2 * ones > total) ? 1 : 0;  // the overwhelming majority value
    }
    rounds_.push_back({total ? static_cast<double>(ones) / static_cast<double>(total) : 0.0,
                       forced ? phase_ - 1 : phase_, forced});
    counter_->filter(x, y);
    recorded_[static_cast<std::size_t>(x)] = y;
    return y;
  }

  std::string name() const override { return "bfs-tree"; }

  const std::vector<BfsRoundInfo>& rounds() const { return rounds_; }

 private:
  // count/total >= 1/2^exponent, exactly, without overflow.
  static bool at_least_tau(std::uint64_t count, std::uint64_t total, int exponent) {
    if (count == 0) return false;
    if (exponent >= 63) return true;
    const std::uint64_t needed = (total + (std::uint64_t{1} << exponent) - 1) >> exponent;
    return count >= needed;
  }

  std::optional<LittlestoneTree> tree_;
  BfsThresholdSchedule schedule_;
  DimensionBudget budget_;
  HypothesisClass witnesses_;
  std::unique_ptr<VersionCounter> counter_;
  std::vector<int> sequence_;
  std::vector<Label> recorded_;
  std::vector<BfsRoundInfo> rounds_;
  int phase_ = 1;
};

class MinimaxAdversary : public Adversary {
 public:
  explicit MinimaxAdversary(const GameBudget& budget) : budget_(budget) {}

  bool realizable() const override { return true; }

  std::vector<int> choose_sequence(const HypothesisClass& cls, int n) override {
    TOL_REQUIRE(n >= 1, "adversary needs n >= 1");
    const HypothesisClass ex = cls.materialized(budget_.max_hypotheses);
    // argmax sequence over distinct instances
    const int length = std::min(n, ex.domain_size());
    std::vector<int> best_seq;
    long long best = -1;
    std::vector<int> seq;
    std::vector<char> used(static_cast<std::size_t>(ex.domain_size()), 0);
    auto dfs = [&](auto&& self) -> void {
      if (static_cast<int>(seq.size()) == length) {
        const long long v = fixed_sequence_value(ex, seq, budget_);
        if (v > best) {
          best = v;
          best_seq = seq;
        }
        return;
      }
      for (int x = 0; x < ex.domain_size(); ++x) {
        if (used[static_cast<std::size_t>(x)]) continue;
        used[static_cast<std::size_t>(x)] = 1;
        seq.push_back(x);
        self(self);
        seq.pop_back();
        used[static_cast<std::size_t>(x)] = 0;
      }
    };
    if (ex.domain_size() > budget_.max_domain || length > budget_.max_sequence)
      throw BudgetExceeded("minimax adversary: class or horizon exceeds the game budget",
                           static_cast<std::uint64_t>(ex.size()));
    if (fully_symmetric(ex)) {
      best_seq.resize(static_cast<std::size_t>(length));
      for (int i = 0; i < length; ++i) best_seq[static_cast<std::size_t>(i)] = i;
    } else {
      dfs(dfs);
    }
    std::vector<int> full = best_seq;
    while (static_cast<int>(full.size()) < n) full.push_back(full.back());
    oracle_ = std::make_unique<MinimaxOracle>(ex, full, budget_);
    mask_ = oracle_->initial_mask();
    return full;
  }

  Label label(int t, Label prediction) override {
    const Label y = oracle_->worst_label(mask_, t, prediction);
    mask_ = oracle_->filtered(mask_, t, y);
    return y;
  }

  std::string name() const override { return "minimax"; }

 private:
  GameBudget budget_;
  std::unique_ptr<MinimaxOracle> oracle_;
  Bitset mask_;
};

class RandomLabelAdversary : public ObliviousAdversary {
 public:
  RandomLabelAdversary(Rng rng, const DimensionBudget& budget) : rng_(rng), budget_(budget) {}

  std::vector<int> choose_sequence(const HypothesisClass& cls, int n) override {
    TOL_REQUIRE(n >= 1, "adversary needs n >= 1");
    label_count_ = cls.label_count();
    VcWitness witness;
    const int d = (cls.label_count() == 2) ? vc_dim(cls, &witness, budget_) : 0;
    TOL_REQUIRE(d >= 1, "random-label adversary needs VC dimension >= 1");
    const int copies = n / d;
    std::vector<int> seq;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < copies; ++j) seq.push_back(witness.points[static_cast<std::size_t>(i)]);
    while (static_cast<int>(seq.size()) < n) seq.push_back(witness.points[0]);
    return seq;
  }

  Label label_at(int) override {
    return static_cast<Label>(rng_.below(static_cast<std::uint64_t>(label_count_)));
  }

  std::string name() const override { return "random"; }

 private:
  Rng rng_;
  DimensionBudget budget_;
  int label_count_ = 2;
};

}  // namespace

std::unique_ptr<Learner> make_halving_learner(const DimensionBudget& budget) {
  return std::make_unique<HalvingLearner>(budget);
}
std::unique_ptr<Learner> make_soa_learner(const DimensionBudget& budget) {
  return std::make_unique<SoaLearner>(budget);
}
std::unique_ptr<Learner> make_mw_learner(Rng rng, std::optional<double> eta,
                                         const DimensionBudget& budget) {
  return std::make_unique<MwLearner>(rng, eta, budget);
}
std::unique_ptr<Learner> make_best_response_learner(const GameBudget& budget) {
  return std::make_unique<BestResponseLearner>(budget);
}
std::unique_ptr<Learner> make_random_learner(Rng rng) {
  return std::make_unique<RandomLearner>(rng);
}

std::unique_ptr<Adversary> make_vc_adversary(const DimensionBudget& budget) {
  return std::make_unique<VcAdversary>(budget);
}
std::unique_ptr<Adversary> make_dyadic_adversary(const DimensionBudget& budget) {
  return std::make_unique<DyadicAdversary>(budget);
}
std::unique_ptr<Adversary> make_bfs_tree_adversary(std::optional<LittlestoneTree> tree,
                                                   BfsThresholdSchedule schedule,
                                                   const DimensionBudget& budget) {
  return std::make_unique<BfsTreeAdversary>(std::move(tree), schedule, budget);
}
std::unique_ptr<Adversary> make_minimax_adversary(const GameBudget& budget) {
  return std::make_unique<MinimaxAdversary>(budget);
}
std::unique_ptr<ObliviousAdversary> make_random_label_adversary(Rng rng,
                                                                const DimensionBudget& budget) {
  return std::make_unique<RandomLabelAdversary>(rng, budget);
}

const std::vector<BfsRoundInfo>* bfs_round_info(const Adversary& adversary) {
  if (const auto* bfs = dynamic_cast<const BfsTreeAdversary*>(&adversary)) return &bfs->rounds();
  return nullptr;
}

}  // namespace tol
