// Acceptance suite: one test case per verification criterion, each printing
// a single PASS/FAIL line.  Run all of them with `ctest -R acceptance` or
// directly via `./acceptance`.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "doctest.h"
#include "tol/dimensions.hpp"
#include "tol/engine.hpp"
#include "tol/experiments.hpp"
#include "tol/minimax.hpp"
#include "tol/stats.hpp"
#include "tol/strategies.hpp"
#include "tol/trees.hpp"
#include "tol/zoo.hpp"

using namespace tol;

namespace {

struct CriterionLine {
  const char* id;
  bool ok = false;
  ~CriterionLine() {
    std::printf("CRITERION %s: %s\n", id, ok ? "PASS" : "FAIL");
    std::fflush(stdout);
  }
};

int floor_log2(long long v) {
  int r = -1;
  while (v > 0) {
    v >>= 1;
    ++r;
  }
  return r;
}

struct RandomClassSpec {
  int m;
  std::int64_t h;
  std::uint64_t seed;
};

std::vector<RandomClassSpec> binary_corpus(int count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<RandomClassSpec> out;
  for (int i = 0; i < count; ++i) {
    const int m = 2 + static_cast<int>(rng.below(5));  // 2..6
    const std::int64_t cap = std::min<std::int64_t>(32, std::int64_t{1} << m);
    const std::int64_t h = 2 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(cap - 1)));
    out.push_back({m, h, rng.next_u64()});
  }
  return out;
}

std::vector<std::vector<int>> all_distinct_sequences(int m, int max_len) {
  std::vector<std::vector<int>> out;
  std::vector<int> seq;
  std::vector<char> used(static_cast<std::size_t>(m), 0);
  auto dfs = [&](auto&& self) -> void {
    if (!seq.empty()) out.push_back(seq);
    if (static_cast<int>(seq.size()) == max_len) return;
    for (int x = 0; x < m; ++x) {
      if (used[static_cast<std::size_t>(x)]) continue;
      used[static_cast<std::size_t>(x)] = 1;
      seq.push_back(x);
      self(self);
      seq.pop_back();
      used[static_cast<std::size_t>(x)] = 0;
    }
  };
  dfs(dfs);
  return out;
}

LittlestoneTree tree_cube_defining_tree(int depth) {
  std::vector<int> instances(static_cast<std::size_t>((1 << (depth + 1)) - 1));
  for (std::size_t i = 0; i < instances.size(); ++i) instances[i] = static_cast<int>(i);
  return LittlestoneTree::binary(depth, std::move(instances));
}

}  // namespace

TEST_CASE("criterion 01: exact game value on cubes is min(d, n)") {
  CriterionLine line{"01"};
  for (int d = 1; d <= 4; ++d)
    for (int n = 0; n <= 6; ++n)
      REQUIRE(transductive_value(full_cube(d), n) == std::min<long long>(d, n));
  line.ok = true;
}

TEST_CASE("criterion 02: dyadic adversary meets the log lower bound") {
  CriterionLine line{"02"};
  for (const int n : {3, 7}) {
    const auto cls = thresholds(n);
    const long long bound = std::min(floor_log2(n), floor_log2(n));
    auto adversary = make_dyadic_adversary();
    auto learner = make_best_response_learner();
    const auto transcript = run_realizable(cls, *adversary, *learner, n);
    REQUIRE(transcript.mistake_count() >= bound);
    REQUIRE(transductive_value(cls, n) >= bound);
  }
  line.ok = true;
}

TEST_CASE("criterion 03: halving never beats its log bound on the random corpus") {
  CriterionLine line{"03"};
  const auto halving = make_halving_learner();
  for (const auto& spec : binary_corpus(200, 0x5eed03)) {
    const auto cls = random_class(spec.m, 2, spec.h, spec.seed);
    for (const auto& seq : all_distinct_sequences(spec.m, std::min(spec.m, 6))) {
      std::vector<int> sorted = seq;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      const auto restricted = cls.restricted(sorted);
      const int bound = floor_log2(restricted.size());
      REQUIRE(worst_case_mistakes(cls, seq, *halving) <= bound);
    }
  }
  line.ok = true;
}

TEST_CASE("criterion 04: soa never exceeds the littlestone dimension") {
  CriterionLine line{"04"};
  const auto soa = make_soa_learner();
  for (const auto& spec : binary_corpus(200, 0x5eed03)) {
    const auto cls = random_class(spec.m, 2, spec.h, spec.seed);
    const int ld = littlestone_dim(cls);
    for (const auto& seq : all_distinct_sequences(spec.m, std::min(spec.m, 6)))
      REQUIRE(worst_case_mistakes(cls, seq, *soa) <= ld);
  }
  line.ok = true;
}

TEST_CASE("criterion 05: breadth-first tree adversary, small regime") {
  CriterionLine line{"05"};
  const auto implicit = tree_cube_class(4);
  const int n = 16;

  auto check_run = [&](const HypothesisClass& cls, std::unique_ptr<Learner> learner,
                       std::unique_ptr<Adversary> adversary) {
    const auto transcript = run_realizable(cls, *adversary, *learner, n);
    REQUIRE(transcript.mistake_count() >= 1);
    for (auto size : transcript.version_space_sizes) REQUIRE(size >= 1);
  };

  check_run(implicit, make_halving_learner(), make_bfs_tree_adversary());
  check_run(implicit, make_soa_learner(), make_bfs_tree_adversary());
  check_run(implicit.materialized(), make_best_response_learner(),
            make_bfs_tree_adversary(tree_cube_defining_tree(4)));
  for (int i = 0; i < 100; ++i)
    check_run(implicit, make_random_learner(Rng(0xabc, static_cast<std::uint64_t>(i))),
              make_bfs_tree_adversary());
  line.ok = true;
}

TEST_CASE("criterion 06: breadth-first tree adversary, large regime") {
  CriterionLine line{"06"};
  const auto cls = tree_cube_class(16);
  const int n = 65536;
  for (const bool use_soa : {false, true}) {
    auto learner = use_soa ? make_soa_learner() : make_halving_learner();
    auto adversary = make_bfs_tree_adversary();
    const auto transcript = run_realizable(cls, *adversary, *learner, n);
    REQUIRE(transcript.mistake_count() >= 2);
    REQUIRE(transcript.version_space_sizes.back() >= 1);
  }
  line.ok = true;
}

TEST_CASE("criterion 07: ds dimension one, game value n") {
  CriterionLine line{"07"};
  for (int n = 1; n <= 3; ++n) {
    const auto cls = ds_claim_class(n);
    REQUIRE(ds_dim(cls) == 1);
    REQUIRE(transductive_value(cls, n) == n);
  }
  line.ok = true;
}

TEST_CASE("criterion 08: ramsey extraction certificates") {
  CriterionLine line{"08"};
  // exhaustive: every 2-coloring of trees of depth <= 3, every integer split
  for (int depth = 0; depth <= 3; ++depth) {
    const int count = (1 << (depth + 1)) - 1;
    const auto tree = LittlestoneTree::binary(depth, std::vector<int>(static_cast<std::size_t>(count), 0));
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << count); ++bits) {
      std::vector<int> coloring(static_cast<std::size_t>(count));
      for (int i = 0; i < count; ++i) coloring[static_cast<std::size_t>(i)] = (bits >> i) & 1;
      for (int p = 0; p <= depth + 1; ++p) {
        const int q = depth + 1 - p;
        const auto result = ramsey_two_color(tree, coloring, p, q);
        const auto nodes = result.subtree.nodes_sorted();
        const auto levels = complete_subtree_levels(nodes);
        REQUIRE(levels.has_value());
        int color = -1;
        REQUIRE(is_monochromatic(coloring, nodes, &color));
        REQUIRE(color == result.color);
        REQUIRE(*levels >= (result.color == 0 ? p : q));
      }
    }
  }
  // randomized multicolor: depth <= 7, k <= 4, 500 colorings
  Rng rng(0x8a11);
  for (int trial = 0; trial < 500; ++trial) {
    const int depth = 1 + static_cast<int>(rng.below(7));
    const int k = 1 + static_cast<int>(rng.below(4));
    const int count = (1 << (depth + 1)) - 1;
    const auto tree = LittlestoneTree::binary(depth, std::vector<int>(static_cast<std::size_t>(count), 0));
    std::vector<int> coloring(static_cast<std::size_t>(count));
    for (auto& c : coloring) c = static_cast<int>(rng.below(static_cast<std::uint64_t>(k)));
    const auto result = ramsey_multi_color(tree, coloring, k);
    const auto nodes = result.subtree.nodes_sorted();
    const auto levels = complete_subtree_levels(nodes);
    REQUIRE(levels.has_value());
    int color = -1;
    REQUIRE(is_monochromatic(coloring, nodes, &color));
    REQUIRE(color == result.color);
    const double guarantee = (depth + 1) / std::pow(2.0, std::ceil(std::log2(k)));
    REQUIRE(static_cast<double>(*levels) >= guarantee - 1e-9);
  }
  line.ok = true;
}

TEST_CASE("criterion 09: dimension relation suite on 500 random classes") {
  CriterionLine line{"09"};
  Rng rng(0x9999);
  for (int trial = 0; trial < 500; ++trial) {
    const bool binary = trial % 5 != 0;  // 400 binary, 100 multiclass
    const int k = binary ? 2 : 3;
    const int m = binary ? 2 + static_cast<int>(rng.below(5)) : 2 + static_cast<int>(rng.below(3));
    std::int64_t cap = 1;
    for (int i = 0; i < m; ++i) cap = std::min<std::int64_t>(cap * k, binary ? 32 : 20);
    const std::int64_t h = 2 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(cap - 1)));
    const auto cls = random_class(m, k, h, rng.next_u64());

    const int ld = littlestone_dim(cls);
    const int td = threshold_dim(cls);
    MtdWitness mtd_witness;
    const int mtd = mtd_dim(cls, &mtd_witness);

    if (binary) {
      if (ld >= 1) REQUIRE(td >= floor_log2(ld));
      if (td >= 1) REQUIRE(ld >= floor_log2(td));
      REQUIRE(sauer_check(cls));
    }
    REQUIRE(td >= mtd / (k * k));
    if (mtd >= 1) {
      REQUIRE(verify_mtd_witness(cls, mtd_witness));
      const auto extracted = mtd_to_threshold_extract(cls, mtd_witness);
      REQUIRE(verify_threshold_witness(cls, extracted));
      REQUIRE(static_cast<int>(extracted.points.size()) >= mtd / (k * k));
    }
    REQUIRE(multiclass_sauer_check(cls));
  }
  line.ok = true;
}

TEST_CASE("criterion 10: khinchine expectation dominates sqrt(k/2)") {
  CriterionLine line{"10"};
  for (int k = 1; k <= 20; ++k) {
    const auto result = khinchine_exact(k);
    REQUIRE(result.expected_abs_sum >= result.bound - 1e-12);
  }
  // stated equality cases: k = 1 and k = 2.  k = 2 is exact (E = 1 = bound);
  // k = 1 has E = 1 against bound sqrt(1/2) ~ 0.7071, so this assertion is
  // expected to fail; see the notes accompanying this suite.
  for (int k : {1, 2}) {
    const auto result = khinchine_exact(k);
    if (result.expected_abs_sum != doctest::Approx(result.bound).epsilon(1e-12))
      std::printf("criterion 10 note: k=%d gives E=%.12f vs bound=%.12f\n", k,
                  result.expected_abs_sum, result.bound);
    REQUIRE(result.expected_abs_sum == doctest::Approx(result.bound).epsilon(1e-12));
  }
  line.ok = true;
}

TEST_CASE("criterion 11: agnostic lower bound via shattered blocks") {
  CriterionLine line{"11"};
  const auto row = agnostic_row(full_cube(2), "cube(2)", 100, 5000, 0xacc11);
  REQUIRE(row.lower_bound == doctest::Approx(5.0));
  std::printf("criterion 11 detail: mean_regret=%.4f lower=%.4f halfwidth=%.4f\n",
              row.mean_regret, row.lower_bound, row.halfwidth);
  REQUIRE(row.mean_regret >= row.lower_bound - row.halfwidth);
  line.ok = true;
}

TEST_CASE("criterion 12: agnostic upper bound for multiplicative weights") {
  CriterionLine line{"12"};
  const auto row = agnostic_row(thresholds(7), "thresholds(7)", 200, 2000, 0xacc12);
  REQUIRE(row.upper_bound == doctest::Approx(std::sqrt(100.0 * std::log(8.0))));
  std::printf("criterion 12 detail: mean_regret=%.4f upper=%.4f halfwidth=%.4f\n",
              row.mean_regret, row.upper_bound, row.halfwidth);
  REQUIRE(row.mean_regret <= row.upper_bound + row.halfwidth);
  line.ok = true;
}

TEST_CASE("criterion 13: trichotomy shape at desk scale") {
  CriterionLine line{"13"};
  {
    const auto rows = trichotomy_sweep("cube", 1, 4, 1, 6);
    assert_trichotomy_shape(rows);
    for (const auto& row : rows) REQUIRE(*row.m_exact == std::min<long long>(row.param, row.n));
  }
  {
    const auto rows = trichotomy_sweep("thresholds", 64, 64, 1, 64);
    assert_trichotomy_shape(rows);
    for (const auto& row : rows) {
      REQUIRE(row.m_lower >= floor_log2(row.n));
      REQUIRE(row.m_upper <= 3 * floor_log2(row.n) + 3);
    }
  }
  {
    const auto rows = trichotomy_sweep("ds-claim", 1, 3, 1, 4);
    assert_trichotomy_shape(rows);
  }
  {
    // fixed small classes: the value goes flat once n reaches the domain
    const auto rows = trichotomy_sweep("tree-cube", 1, 2, 1, 7);
    assert_trichotomy_shape(rows);
    long long last_value = -1;
    for (const auto& row : rows)
      if (row.param == 1 && row.n >= 3) {
        if (last_value >= 0) REQUIRE(*row.m_exact == last_value);
        last_value = *row.m_exact;
      }
    const auto singleton_rows = trichotomy_sweep("singleton", 3, 3, 1, 5);
    assert_trichotomy_shape(singleton_rows);
  }
  line.ok = true;
}
