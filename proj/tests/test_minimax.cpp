#include "doctest.h"
#include "tol/dimensions.hpp"
#include "tol/minimax.hpp"
#include "tol/rng.hpp"
#include "tol/zoo.hpp"

#include <algorithm>

using namespace tol;

namespace {

// Plain reference recursion with no memoization or pruning, as an
// independent oracle for the memoized solver.
int naive_value(const HypothesisClass& cls, const std::vector<std::int64_t>& alive,
                const std::vector<int>& seq, std::size_t t) {
  if (t == seq.size()) return 0;
  const int x = seq[t];
  int best = INT32_MAX;
  for (Label prediction = 0; prediction < cls.label_count(); ++prediction) {
    int worst = 0;
    for (Label y = 0; y < cls.label_count(); ++y) {
      std::vector<std::int64_t> next;
      for (std::int64_t h : alive)
        if (cls.evaluate(h, x) == y) next.push_back(h);
      if (next.empty()) continue;
      worst = std::max(worst, (y != prediction ? 1 : 0) + naive_value(cls, next, seq, t + 1));
    }
    best = std::min(best, worst);
  }
  return best;
}

int naive_value(const HypothesisClass& cls, const std::vector<int>& seq) {
  std::vector<std::int64_t> alive(static_cast<std::size_t>(cls.size()));
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = static_cast<std::int64_t>(i);
  return naive_value(cls, alive, seq, 0);
}

}  // namespace

TEST_CASE("fixed-sequence values against the reference recursion") {
  CHECK(fixed_sequence_value(thresholds(3), {1, 2, 0}) == 2);
  CHECK(naive_value(thresholds(3), {1, 2, 0}) == 2);
  CHECK(fixed_sequence_value(full_cube(3), {0, 1, 2}) == 3);
  CHECK(fixed_sequence_value(thresholds(3), {}) == 0);

  Rng rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 3 + static_cast<int>(rng.below(2));
    const std::uint64_t max_extra = std::min<std::uint64_t>(10, (std::uint64_t{1} << m) - 2);
    const auto cls = random_class(m, 2, 2 + static_cast<std::int64_t>(rng.below(max_extra)), rng.next_u64());
    std::vector<int> seq;
    for (int i = 0; i < 4; ++i) seq.push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(m))));
    CHECK(fixed_sequence_value(cls, seq) == naive_value(cls, seq));
  }

  // multiclass route
  for (int trial = 0; trial < 10; ++trial) {
    const auto cls = random_class(3, 3, 5 + static_cast<std::int64_t>(rng.below(6)), rng.next_u64());
    const std::vector<int> seq{0, 1, 2};
    CHECK(fixed_sequence_value(cls, seq) == naive_value(cls, seq));
  }
}

TEST_CASE("repeated instances never raise the value") {
  Rng rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const auto cls = random_class(4, 2, 6, rng.next_u64());
    std::vector<int> seq{0, 2, 3};
    const auto base = fixed_sequence_value(cls, seq);
    for (int x : {0, 2, 3}) {
      auto longer = seq;
      longer.push_back(x);
      CHECK(fixed_sequence_value(cls, longer) == base);
    }
  }
}

TEST_CASE("transductive game value") {
  CHECK(transductive_value(full_cube(3), 5) == 3);
  CHECK(transductive_value(thresholds(3), 3) == 2);
  CHECK(transductive_value(thresholds(3), 0) == 0);
  CHECK(transductive_value(singleton(4), 4) == 0);

  // direct maximum over every distinct-instance sequence, as a cross-check
  Rng rng(55);
  for (int trial = 0; trial < 10; ++trial) {
    const auto cls = random_class(3, 2, 4, rng.next_u64());
    long long direct = 0;
    const std::vector<std::vector<int>> orders{{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                               {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& seq : orders) direct = std::max(direct, static_cast<long long>(naive_value(cls, seq)));
    CHECK(transductive_value(cls, 3) == direct);
  }
}

TEST_CASE("value is nondecreasing in n and stabilizes at the domain size") {
  const auto t3 = thresholds(3);
  long long prev = 0;
  for (int n = 1; n <= 5; ++n) {
    const auto v = transductive_value(t3, n);
    CHECK(v >= prev);
    prev = v;
  }
  CHECK(transductive_value(t3, 3) == transductive_value(t3, 5));

  // full cube: min(d, n) at every horizon
  for (int n = 1; n <= 5; ++n) CHECK(transductive_value(full_cube(3), n) == std::min(3, n));
}

TEST_CASE("value sandwich against dimensions") {
  Rng rng(83);
  for (int trial = 0; trial < 20; ++trial) {
    const auto cls = random_class(4, 2, 3 + static_cast<std::int64_t>(rng.below(10)), rng.next_u64());
    const int n = 4;
    const auto value = transductive_value(cls, n);
    CHECK(value <= littlestone_dim(cls));
    CHECK(value >= std::min<long long>(vc_dim(cls), n));
  }
}

TEST_CASE("multiclass value sandwich against dimensions") {
  Rng rng(84);
  for (int trial = 0; trial < 15; ++trial) {
    const auto cls = random_class(4, 3, 4 + static_cast<std::int64_t>(rng.below(14)), rng.next_u64());
    const int n = 4;
    const auto value = transductive_value(cls, n);
    CHECK(value <= littlestone_dim(cls));
    CHECK(value >= std::min<long long>(natarajan_dim(cls), n));
  }
}

TEST_CASE("symmetry detection") {
  CHECK(fully_symmetric(full_cube(3)));
  CHECK(fully_symmetric(multiclass_cube(2, 3)));
  CHECK_FALSE(fully_symmetric(thresholds(3)));
}

TEST_CASE("budgets bound the search") {
  GameBudget tight;
  tight.max_states = 4;
  CHECK_THROWS_AS(fixed_sequence_value(full_cube(3), {0, 1, 2}, tight), BudgetExceeded);

  GameBudget small;
  small.max_domain = 3;
  CHECK_THROWS_AS(transductive_value(full_cube(4), 4, small), BudgetExceeded);

  std::uint64_t states = 0;
  fixed_sequence_value(full_cube(3), {0, 1, 2}, GameBudget{}, &states);
  CHECK(states > 0);
}
