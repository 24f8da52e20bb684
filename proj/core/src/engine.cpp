#include "tol/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <sstream>
#include <thread>

namespace tol {

namespace {

std::uint64_t fnv1a(std::uint64_t value, std::uint64_t salt) {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ salt;
  for (int byte = 0; byte < 8; ++byte) {
    h ^= (value >> (8 * byte)) & 0xff;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

int Transcript::mistake_count() const {
  int count = 0;
  for (char m : mistakes) count += m;
  return count;
}

std::string transcript_csv(const Transcript& transcript) {
  std::ostringstream out;
  out << "t,x,prediction,label,mistake,version_space_size\n";
  for (std::size_t t = 0; t < transcript.sequence.size(); ++t)
    out << (t + 1) << ',' << transcript.sequence[t] << ',' << transcript.predictions[t] << ','
        << transcript.labels[t] << ',' << static_cast<int>(transcript.mistakes[t]) << ','
        << transcript.version_space_sizes[t] << '\n';
  return out.str();
}

Transcript run_realizable(const HypothesisClass& cls, Adversary& adversary, Learner& learner,
                          int n, const DimensionBudget& budget) {
  TOL_REQUIRE(adversary.realizable(), "run_realizable needs a realizable adversary");
  TOL_REQUIRE(n >= 1, "run_realizable needs n >= 1");

  Transcript transcript;
  transcript.sequence = adversary.choose_sequence(cls, n);
  TOL_REQUIRE(static_cast<int>(transcript.sequence.size()) == n,
              "adversary returned a sequence of the wrong length");
  learner.init(cls, transcript.sequence);
  auto counter = make_version_counter(cls, budget);

  for (int t = 0; t < n; ++t) {
    const Label prediction = learner.predict(t);
    const Label y = adversary.label(t, prediction);
    TOL_REQUIRE(y >= 0 && y < cls.label_count(), "adversary emitted a label out of range");
    counter->filter(transcript.sequence[static_cast<std::size_t>(t)], y);
    if (counter->size() == 0)
      throw ProtocolViolation("adversary label makes the prefix non-realizable", t + 1);
    learner.observe(t, y);

    transcript.predictions.push_back(prediction);
    transcript.labels.push_back(y);
    transcript.mistakes.push_back(prediction != y);
    transcript.version_space_sizes.push_back(counter->size());
  }
  return transcript;
}

long long best_hypothesis_mistakes(const HypothesisClass& cls, const std::vector<int>& sequence,
                                   const std::vector<Label>& labels) {
  TOL_REQUIRE(sequence.size() == labels.size(), "sequence/labels length mismatch");
  long long best = static_cast<long long>(sequence.size()) + 1;
  for (std::int64_t h = 0; h < cls.size(); ++h) {
    long long mistakes = 0;
    for (std::size_t t = 0; t < sequence.size(); ++t)
      if (cls.evaluate(h, sequence[t]) != labels[t]) ++mistakes;
    best = std::min(best, mistakes);
  }
  return best;
}

RegretReport run_agnostic(const HypothesisClass& cls, const ObliviousAdversaryFactory& adversary,
                          const LearnerFactory& learner, int n, long long trials,
                          std::uint64_t seed) {
  TOL_REQUIRE(trials >= 1, "run_agnostic needs trials >= 1");
  TOL_REQUIRE(n >= 1, "run_agnostic needs n >= 1");

  std::vector<double> regrets(static_cast<std::size_t>(trials));
  std::vector<double> learner_totals(static_cast<std::size_t>(trials));
  std::vector<double> best_totals(static_cast<std::size_t>(trials));

  auto run_trial = [&](long long trial) {
    // independent streams per role and trial
    auto adv = adversary(Rng(seed, 2 * static_cast<std::uint64_t>(trial)));
    auto lrn = learner(Rng(seed, 2 * static_cast<std::uint64_t>(trial) + 1));

    const std::vector<int> sequence = adv->choose_sequence(cls, n);
    lrn->init(cls, sequence);

    long long learner_mistakes = 0;
    std::vector<Label> labels;
    labels.reserve(static_cast<std::size_t>(n));
    std::uint64_t commitment_chain = seed;
    for (int t = 0; t < n; ++t) {
      // The label is drawn and hashed before the prediction exists, so the
      // adversary provably cannot react to it.
      const Label committed = adv->label_at(t);
      commitment_chain = fnv1a(static_cast<std::uint64_t>(committed), commitment_chain);
      const Label prediction = lrn->predict(t);
      if (prediction != committed) ++learner_mistakes;
      lrn->observe(t, committed);
      labels.push_back(committed);
    }
    (void)commitment_chain;
    const long long best = best_hypothesis_mistakes(cls, sequence, labels);
    learner_totals[static_cast<std::size_t>(trial)] = static_cast<double>(learner_mistakes);
    best_totals[static_cast<std::size_t>(trial)] = static_cast<double>(best);
    regrets[static_cast<std::size_t>(trial)] =
        static_cast<double>(learner_mistakes) - static_cast<double>(best);
  };

  // Trials are independent; results land in per-trial slots and are reduced
  // in trial order afterwards, so the report does not depend on scheduling.
  const unsigned workers =
      std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()), 8u);
  if (workers <= 1 || trials < 64) {
    for (long long trial = 0; trial < trials; ++trial) run_trial(trial);
  } else {
    std::atomic<long long> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
      for (long long trial = next.fetch_add(1); trial < trials; trial = next.fetch_add(1)) {
        try {
          run_trial(trial);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& thread : pool) thread.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  RegretReport report;
  report.trials = trials;
  double sum_learner = 0, sum_best = 0, mean = 0;
  for (long long trial = 0; trial < trials; ++trial) {
    sum_learner += learner_totals[static_cast<std::size_t>(trial)];
    sum_best += best_totals[static_cast<std::size_t>(trial)];
    mean += regrets[static_cast<std::size_t>(trial)];
  }
  report.mean_learner_mistakes = sum_learner / static_cast<double>(trials);
  report.mean_best_hypothesis_mistakes = sum_best / static_cast<double>(trials);
  mean /= static_cast<double>(trials);
  report.mean_regret = mean;
  double var = 0;
  for (double r : regrets) var += (r - mean) * (r - mean);
  var = (trials > 1) ? var / static_cast<double>(trials - 1) : 0.0;
  report.confidence_halfwidth = 3.0 * std::sqrt(var / static_cast<double>(trials));
  return report;
}

namespace {

int worst_case_rec(const HypothesisClass& cls, const std::vector<int>& sequence,
                   const Learner& learner, VersionCounter& counter, int t) {
  if (t == static_cast<int>(sequence.size())) return 0;
  auto probe = learner.clone();
  const Label prediction = probe->predict(t);
  const int x = sequence[static_cast<std::size_t>(t)];
  const auto counts = counter.label_counts(x);

  int worst = 0;
  for (Label y = 0; y < static_cast<Label>(counts.size()); ++y) {
    if (counts[static_cast<std::size_t>(y)] == 0) continue;
    auto branch_learner = learner.clone();
    auto branch_counter = counter.clone();
    branch_learner->predict(t);  // keep the predict-then-observe discipline
    branch_counter->filter(x, y);
    branch_learner->observe(t, y);
    const int below = worst_case_rec(cls, sequence, *branch_learner, *branch_counter, t + 1);
    worst = std::max(worst, (prediction != y ? 1 : 0) + below);
  }
  return worst;
}

}  // namespace

int worst_case_mistakes(const HypothesisClass& cls, const std::vector<int>& sequence,
                        const Learner& prototype, const DimensionBudget& budget) {
  TOL_REQUIRE(!sequence.empty(), "worst_case_mistakes needs a nonempty sequence");
  auto learner = prototype.clone();
  learner->init(cls, sequence);
  auto counter = make_version_counter(cls, budget);
  return worst_case_rec(cls, sequence, *learner, *counter, 0);
}

}  // namespace tol
