#include "tol/dimensions.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

namespace tol {

namespace {

HypothesisClass explicit_within_budget(const HypothesisClass& cls, const DimensionBudget& budget,
                                       const char* op) {
  if (cls.domain_size() > budget.max_domain || cls.size() > budget.max_hypotheses)
    throw BudgetExceeded(std::string(op) + ": class exceeds the exact-search budget",
                         static_cast<std::uint64_t>(cls.size()));
  return cls.materialized(budget.max_hypotheses);
}

struct OpsGuard {
  std::uint64_t ops = 0;
  std::uint64_t limit;
  const char* op;
  explicit OpsGuard(const DimensionBudget& b, const char* op) : limit(b.max_states), op(op) {}
  void spend(std::uint64_t n = 1) {
    ops += n;
    if (ops > limit) throw BudgetExceeded(std::string(op) + ": search budget exhausted", ops);
  }
};

// Lexicographic enumeration of size-s index subsets of [0, m).
bool next_combination(std::vector<int>& c, int m) {
  const int s = static_cast<int>(c.size());
  for (int i = s - 1; i >= 0; --i) {
    if (c[static_cast<std::size_t>(i)] < m - (s - i)) {
      ++c[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < s; ++j)
        c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

std::vector<int> first_combination(int s) {
  std::vector<int> c(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) c[static_cast<std::size_t>(i)] = i;
  return c;
}

int floor_log2(std::int64_t v) {
  int r = -1;
  while (v > 0) {
    v >>= 1;
    ++r;
  }
  return r;
}

constexpr unsigned long long kSaturated = ~0ULL;

unsigned long long sat_mul(unsigned long long a, unsigned long long b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

unsigned long long sat_add(unsigned long long a, unsigned long long b) {
  return (a > kSaturated - b) ? kSaturated : a + b;
}

unsigned long long binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  unsigned long long v = 1;
  for (int i = 1; i <= r; ++i) v = sat_mul(v, static_cast<unsigned long long>(n - r + i)) / i;
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// VC dimension
// ---------------------------------------------------------------------------

int vc_dim(const HypothesisClass& cls, VcWitness* witness, const DimensionBudget& budget) {
  TOL_REQUIRE(cls.label_count() == 2, "vc_dim requires a binary class; use natarajan_dim");
  const HypothesisClass ex = explicit_within_budget(cls, budget, "vc_dim");
  const auto& rows = ex.table();
  OpsGuard guard(budget, "vc_dim");

  const int bound = std::min(ex.domain_size(), floor_log2(ex.size()));
  for (int s = bound; s >= 1; --s) {
    auto combo = first_combination(s);
    do {
      Bitset patterns(std::size_t{1} << s);
      for (const auto& row : rows) {
        guard.spend();
        std::size_t pattern = 0;
        for (int j = 0; j < s; ++j)
          pattern |= static_cast<std::size_t>(row[static_cast<std::size_t>(combo[static_cast<std::size_t>(j)])])
                     << j;
        patterns.set(pattern);
      }
      if (patterns.count() == (std::size_t{1} << s)) {
        if (witness) witness->points = combo;
        return s;
      }
    } while (next_combination(combo, ex.domain_size()));
  }
  if (witness) witness->points.clear();
  return 0;
}

bool verify_vc_witness(const HypothesisClass& cls, const VcWitness& w) {
  if (cls.label_count() != 2) return false;
  const int s = static_cast<int>(w.points.size());
  for (int x : w.points)
    if (x < 0 || x >= cls.domain_size()) return false;
  for (std::size_t pattern = 0; pattern < (std::size_t{1} << s); ++pattern) {
    bool found = false;
    for (std::int64_t h = 0; h < cls.size() && !found; ++h) {
      bool match = true;
      for (int j = 0; j < s && match; ++j)
        match = cls.evaluate(h, w.points[static_cast<std::size_t>(j)]) ==
                static_cast<Label>((pattern >> j) & 1);
      found = match;
    }
    if (!found) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Littlestone dimension (version-space game recursion)
// ---------------------------------------------------------------------------

LittlestoneEvaluator::LittlestoneEvaluator(HypothesisClass cls, const DimensionBudget& budget)
    : cls_(cls.materialized(budget.max_hypotheses)), budget_(budget) {
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
}

const Bitset& LittlestoneEvaluator::value_mask(int x, Label y) const {
  return value_masks_[static_cast<std::size_t>(x) * static_cast<std::size_t>(cls_.label_count()) +
                      static_cast<std::size_t>(y)];
}

Bitset LittlestoneEvaluator::filtered(const Bitset& mask, int x, Label y) const {
  return mask & value_mask(x, y);
}

std::vector<std::int64_t> LittlestoneEvaluator::label_counts(const Bitset& mask, int x) const {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(cls_.label_count()));
  for (Label y = 0; y < cls_.label_count(); ++y)
    counts[static_cast<std::size_t>(y)] =
        static_cast<std::int64_t>(mask.count_and(value_mask(x, y)));
  return counts;
}

int LittlestoneEvaluator::ld(const Bitset& mask) {
  if (mask.none()) return -1;
  if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
  if (++states_ > budget_.max_states)
    throw BudgetExceeded("littlestone_dim: state budget exhausted", states_);

  const int cap = floor_log2(static_cast<std::int64_t>(mask.count()));
  int best = 0;
  const int m = cls_.domain_size();
  const int k = cls_.label_count();
  for (int x = 0; x < m && best < cap; ++x) {
    std::vector<Label> live;
    for (Label y = 0; y < k; ++y)
      if (mask.count_and(value_mask(x, y)) > 0) live.push_back(y);
    for (std::size_t a = 0; a < live.size() && best < cap; ++a) {
      for (std::size_t b = a + 1; b < live.size() && best < cap; ++b) {
        const int d0 = ld(filtered(mask, x, live[a]));
        if (d0 < best) continue;  // min can't beat best
        const int d1 = ld(filtered(mask, x, live[b]));
        best = std::max(best, 1 + std::min(d0, d1));
      }
    }
  }
  memo_.emplace(mask, best);
  return best;
}

std::optional<LittlestoneEvaluator::Split> LittlestoneEvaluator::best_split(const Bitset& mask) {
  const int target = ld(mask);
  if (target <= 0) return std::nullopt;
  const int m = cls_.domain_size();
  const int k = cls_.label_count();
  for (int x = 0; x < m; ++x) {
    for (Label y0 = 0; y0 < k; ++y0) {
      const Bitset f0 = filtered(mask, x, y0);
      if (f0.none()) continue;
      for (Label y1 = y0 + 1; y1 < k; ++y1) {
        const Bitset f1 = filtered(mask, x, y1);
        if (f1.none()) continue;
        if (1 + std::min(ld(f0), ld(f1)) == target) return Split{x, y0, y1};
      }
    }
  }
  return std::nullopt;  // unreachable for target >= 1
}

int littlestone_dim(const HypothesisClass& cls, const DimensionBudget& budget) {
  const HypothesisClass ex = explicit_within_budget(cls, budget, "littlestone_dim");
  LittlestoneEvaluator eval(ex, budget);
  return eval.ld(eval.full_mask());
}

// ---------------------------------------------------------------------------
// Threshold dimension
// ---------------------------------------------------------------------------

namespace {

struct ThresholdSearch {
  ThresholdSearch(const HypothesisClass& cls, const LittlestoneEvaluator& eval, Label y_prefix,
                  Label y_suffix, OpsGuard& guard)
      : cls(cls), eval(eval), y_prefix(y_prefix), y_suffix(y_suffix), guard(guard) {}

  const HypothesisClass& cls;
  const LittlestoneEvaluator& eval;
  Label y_prefix, y_suffix;
  OpsGuard& guard;
  int best = 0;
  std::vector<int> best_points;
  std::vector<std::int64_t> best_hyps;
  std::vector<int> points;
  std::vector<std::int64_t> hyps;

  void dfs(const Bitset& prefix_ok) {
    const int s = static_cast<int>(points.size());
    if (s > best) {
      best = s;
      best_points = points;
      best_hyps = hyps;
    }
    if (s == cls.domain_size()) return;
    for (int x = 0; x < cls.domain_size(); ++x) {
      guard.spend();
      if (std::find(points.begin(), points.end(), x) != points.end()) continue;
      bool prev_suffix = true;
      for (std::int64_t h : hyps)
        if (cls.evaluate(h, x) != y_suffix) {
          prev_suffix = false;
          break;
        }
      if (!prev_suffix) continue;
      const Bitset candidates = prefix_ok & eval.value_mask(x, y_prefix);
      for (std::int64_t h : undominated(candidates, x)) {
        points.push_back(x);
        hyps.push_back(h);
        dfs(candidates);
        points.pop_back();
        hyps.pop_back();
      }
    }
  }

  // A chosen hypothesis constrains the future only through the remaining
  // instances where it shows y_suffix.  Candidates whose suffix support is
  // contained in another candidate's can never extend a chain further, so
  // only support-maximal candidates (lowest index per support set) recurse.
  std::vector<std::int64_t> undominated(const Bitset& candidates, int x) {
    std::uint32_t remaining = 0;
    for (int u = 0; u < cls.domain_size(); ++u)
      if (u != x && std::find(points.begin(), points.end(), u) == points.end())
        remaining |= 1u << u;

    std::vector<std::pair<std::uint32_t, std::int64_t>> supports;
    candidates.for_each_set([&](std::size_t h) {
      guard.spend();
      std::uint32_t support = 0;
      std::uint32_t bits = remaining;
      while (bits) {
        const int u = std::countr_zero(bits);
        bits &= bits - 1;
        if (cls.evaluate(static_cast<std::int64_t>(h), u) == y_suffix) support |= 1u << u;
      }
      for (auto& [other, _] : supports)
        if (other == support) return;  // keep the lowest index per support
      supports.push_back({support, static_cast<std::int64_t>(h)});
    });

    std::vector<std::int64_t> kept;
    for (std::size_t i = 0; i < supports.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < supports.size() && !dominated; ++j)
        dominated = i != j && (supports[i].first & supports[j].first) == supports[i].first &&
                    supports[i].first != supports[j].first;
      if (!dominated) kept.push_back(supports[i].second);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
  }
};

}  // namespace

int threshold_dim(const HypothesisClass& cls, ThresholdWitness* witness,
                  const DimensionBudget& budget) {
  const HypothesisClass ex = explicit_within_budget(cls, budget, "threshold_dim");
  LittlestoneEvaluator eval(ex, budget);
  OpsGuard guard(budget, "threshold_dim");
  const int k = ex.label_count();

  int best = 0;
  ThresholdWitness best_witness;
  auto run_pair = [&](Label y_prefix, Label y_suffix) {
    ThresholdSearch search(ex, eval, y_prefix, y_suffix, guard);
    Bitset all(static_cast<std::size_t>(ex.size()), true);
    search.dfs(all);
    if (search.best > best) {
      best = search.best;
      best_witness = ThresholdWitness{search.best_points, search.best_hyps, y_prefix, y_suffix};
    }
  };

  if (k == 2) {
    run_pair(1, 0);  // the binary staircase label pattern is fixed
  } else {
    for (Label y_suffix = 0; y_suffix < k; ++y_suffix)
      for (Label y_prefix = 0; y_prefix < k; ++y_prefix)
        if (y_prefix != y_suffix) run_pair(y_prefix, y_suffix);
  }
  if (witness) *witness = best_witness;
  return best;
}

bool verify_threshold_witness(const HypothesisClass& cls, const ThresholdWitness& w) {
  const auto t = w.points.size();
  if (w.hyps.size() != t) return false;
  if (w.y_prefix == w.y_suffix) return false;
  std::vector<int> sorted = w.points;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j) {
      const Label expect = (j <= i) ? w.y_prefix : w.y_suffix;
      if (cls.evaluate(w.hyps[i], w.points[j]) != expect) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Natarajan dimension
// ---------------------------------------------------------------------------

namespace {

struct NatarajanCheck {
  NatarajanCheck(const LittlestoneEvaluator& eval, const std::vector<int>& points, OpsGuard& guard)
      : eval(eval), points(points), guard(guard) {}

  const LittlestoneEvaluator& eval;
  const std::vector<int>& points;
  OpsGuard& guard;
  std::vector<Label> f0, f1;

  bool assign(std::size_t j, std::vector<Bitset>& classes) {
    if (j == points.size()) return true;
    const int k = eval.cls().label_count();
    const int x = points[j];
    for (Label a = 0; a < k; ++a) {
      for (Label b = a + 1; b < k; ++b) {
        guard.spend();
        std::vector<Bitset> next;
        next.reserve(classes.size() * 2);
        bool ok = true;
        for (const Bitset& c : classes) {
          Bitset c0 = c & eval.value_mask(x, a);
          Bitset c1 = c & eval.value_mask(x, b);
          if (c0.none() || c1.none()) {
            ok = false;
            break;
          }
          next.push_back(std::move(c0));
          next.push_back(std::move(c1));
        }
        if (!ok) continue;
        // class order: index bit j selects the f1 value at position j
        std::vector<Bitset> reordered(next.size(), Bitset());
        for (std::size_t idx = 0; idx < classes.size(); ++idx) {
          reordered[idx] = std::move(next[2 * idx]);
          reordered[idx + classes.size()] = std::move(next[2 * idx + 1]);
        }
        f0.push_back(a);
        f1.push_back(b);
        if (assign(j + 1, reordered)) return true;
        f0.pop_back();
        f1.pop_back();
      }
    }
    return false;
  }
};

}  // namespace

int natarajan_dim(const HypothesisClass& cls, NatarajanWitness* witness,
                  const DimensionBudget& budget) {
  const HypothesisClass ex = explicit_within_budget(cls, budget, "natarajan_dim");
  LittlestoneEvaluator eval(ex, budget);
  OpsGuard guard(budget, "natarajan_dim");

  const int bound = std::min(ex.domain_size(), floor_log2(ex.size()));
  for (int s = bound; s >= 1; --s) {
    auto combo = first_combination(s);
    do {
      guard.spend();
      NatarajanCheck check(eval, combo, guard);
      std::vector<Bitset> classes{Bitset(static_cast<std::size_t>(ex.size()), true)};
      if (check.assign(0, classes)) {
        if (witness) *witness = NatarajanWitness{combo, check.f0, check.f1};
        return s;
      }
    } while (next_combination(combo, ex.domain_size()));
  }
  if (witness) *witness = NatarajanWitness{};
  return 0;
}

bool verify_natarajan_witness(const HypothesisClass& cls, const NatarajanWitness& w) {
  const std::size_t s = w.points.size();
  if (w.f0.size() != s || w.f1.size() != s) return false;
  for (std::size_t j = 0; j < s; ++j)
    if (w.f0[j] == w.f1[j]) return false;
  for (std::size_t pattern = 0; pattern < (std::size_t{1} << s); ++pattern) {
    bool found = false;
    for (std::int64_t h = 0; h < cls.size() && !found; ++h) {
      bool match = true;
      for (std::size_t j = 0; j < s && match; ++j) {
        const Label want = ((pattern >> j) & 1) ? w.f1[j] : w.f0[j];
        match = cls.evaluate(h, w.points[j]) == want;
      }
      found = match;
    }
    if (!found) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Multiclass threshold dimension
// ---------------------------------------------------------------------------

namespace {

struct MtdSearch {
  MtdSearch(const HypothesisClass& cls, OpsGuard& guard) : cls(cls), guard(guard) {}

  const HypothesisClass& cls;
  OpsGuard& guard;
  int best = 0;
  MtdWitness best_witness;
  std::vector<int> points;
  std::vector<std::int64_t> hyps;
  std::vector<Label> row_labels, col_labels;
  std::uint64_t row_mask = 0, col_mask = 0;

  void record() {
    const int k = cls.label_count();
    const int s = static_cast<int>(points.size());
    if (s <= best) return;
    Label completion = -1;
    for (Label y = 0; y < k; ++y)
      if (!((row_mask >> y) & 1)) {
        completion = y;
        break;
      }
    if (completion < 0) return;  // no admissible first-column label
    best = s;
    best_witness = MtdWitness{points, hyps, row_labels, col_labels};
    best_witness.col_labels[0] = completion;
  }

  void dfs() {
    record();
    if (static_cast<int>(points.size()) == cls.domain_size()) return;
    for (int x = 0; x < cls.domain_size(); ++x) {
      if (std::find(points.begin(), points.end(), x) != points.end()) continue;
      // all previous rows must agree at x: that value is the new column label
      Label col = -1;
      bool col_ok = true;
      if (!hyps.empty()) {
        col = cls.evaluate(hyps[0], x);
        for (std::size_t i = 1; i < hyps.size() && col_ok; ++i)
          col_ok = cls.evaluate(hyps[i], x) == col;
        if (col_ok) col_ok = !((row_mask >> col) & 1);
      }
      if (!col_ok) continue;
      for (std::int64_t h = 0; h < cls.size(); ++h) {
        guard.spend();
        const Label row = cls.evaluate(h, x);
        if ((col_mask >> row) & 1) continue;
        if (col >= 0 && row == col) continue;
        bool constant = true;
        for (int p : points)
          if (cls.evaluate(h, p) != row) {
            constant = false;
            break;
          }
        if (!constant) continue;

        points.push_back(x);
        hyps.push_back(h);
        row_labels.push_back(row);
        col_labels.push_back(col < 0 ? 0 : col);  // slot 0 fixed in record()
        const std::uint64_t saved_rows = row_mask, saved_cols = col_mask;
        row_mask |= std::uint64_t{1} << row;
        if (col >= 0) col_mask |= std::uint64_t{1} << col;
        dfs();
        row_mask = saved_rows;
        col_mask = saved_cols;
        points.pop_back();
        hyps.pop_back();
        row_labels.pop_back();
        col_labels.pop_back();
      }
    }
  }
};

}  // namespace

int mtd_dim(const HypothesisClass& cls, MtdWitness* witness, const DimensionBudget& budget) {
  const HypothesisClass ex = explicit_within_budget(cls, budget, "mtd_dim");
  TOL_REQUIRE(ex.label_count() <= 64, "mtd_dim supports at most 64 labels");
  OpsGuard guard(budget, "mtd_dim");
  MtdSearch search(ex, guard);
  search.dfs();
  if (witness) *witness = search.best_witness;
  return search.best;
}

bool verify_mtd_witness(const HypothesisClass& cls, const MtdWitness& w) {
  const std::size_t t = w.points.size();
  if (t == 0) return false;
  if (w.hyps.size() != t || w.row_labels.size() != t || w.col_labels.size() != t) return false;
  std::vector<int> sorted = w.points;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j)
      if (w.row_labels[i] == w.col_labels[j]) return false;
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j) {
      const Label expect = (j <= i) ? w.row_labels[i] : w.col_labels[j];
      if (cls.evaluate(w.hyps[i], w.points[j]) != expect) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// DS dimension and pseudocubes
// ---------------------------------------------------------------------------

bool has_pseudocube(const std::vector<std::vector<Label>>& vectors, int d,
                    std::vector<std::vector<Label>>* survivors) {
  TOL_REQUIRE(d >= 1, "has_pseudocube needs d >= 1");
  TOL_REQUIRE(!vectors.empty(), "has_pseudocube needs a nonempty vector set");
  for (const auto& v : vectors)
    TOL_REQUIRE(static_cast<int>(v.size()) == d, "vector arity != d");

  std::vector<std::vector<Label>> alive = vectors;
  std::sort(alive.begin(), alive.end());
  alive.erase(std::unique(alive.begin(), alive.end()), alive.end());

  bool changed = true;
  while (changed && !alive.empty()) {
    changed = false;
    // group size >= 2 along coordinate i <=> an i-neighbor exists
    std::vector<char> keep(alive.size(), 1);
    for (int i = 0; i < d && !alive.empty(); ++i) {
      std::map<std::vector<Label>, int> group_size;
      for (const auto& v : alive) {
        auto key = v;
        key[static_cast<std::size_t>(i)] = -1;
        ++group_size[key];
      }
      for (std::size_t vi = 0; vi < alive.size(); ++vi) {
        auto key = alive[vi];
        key[static_cast<std::size_t>(i)] = -1;
        if (group_size[key] < 2) keep[vi] = 0;
      }
    }
    std::vector<std::vector<Label>> next;
    for (std::size_t vi = 0; vi < alive.size(); ++vi)
      if (keep[vi]) next.push_back(alive[vi]);
    if (next.size() != alive.size()) changed = true;
    alive = std::move(next);
  }
  if (survivors) *survivors = alive;
  return !alive.empty();
}

int ds_dim(const HypothesisClass& cls, DsWitness* witness, const DimensionBudget& budget) {
  const HypothesisClass ex = explicit_within_budget(cls, budget, "ds_dim");
  const auto& rows = ex.table();
  OpsGuard guard(budget, "ds_dim");

  const int bound = std::min(ex.domain_size(), floor_log2(ex.size()));
  for (int d = bound; d >= 1; --d) {
    auto combo = first_combination(d);
    do {
      guard.spend(rows.size());
      std::vector<std::vector<Label>> projected;
      projected.reserve(rows.size());
      for (const auto& row : rows) {
        std::vector<Label> v(static_cast<std::size_t>(d));
        for (int j = 0; j < d; ++j)
          v[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(combo[static_cast<std::size_t>(j)])];
        projected.push_back(std::move(v));
      }
      std::vector<std::vector<Label>> surviving;
      if (has_pseudocube(projected, d, &surviving)) {
        if (witness) *witness = DsWitness{combo, surviving};
        return d;
      }
    } while (next_combination(combo, ex.domain_size()));
  }
  if (witness) *witness = DsWitness{};
  return 0;
}

bool verify_ds_witness(const HypothesisClass& cls, const DsWitness& w) {
  const int d = static_cast<int>(w.points.size());
  if (d == 0 || w.pseudocube.empty()) return false;
  // every pseudocube vector is a restriction of some hypothesis
  for (const auto& v : w.pseudocube) {
    if (static_cast<int>(v.size()) != d) return false;
    bool found = false;
    for (std::int64_t h = 0; h < cls.size() && !found; ++h) {
      bool match = true;
      for (int j = 0; j < d && match; ++j)
        match = cls.evaluate(h, w.points[static_cast<std::size_t>(j)]) == v[static_cast<std::size_t>(j)];
      found = match;
    }
    if (!found) return false;
  }
  // every vector has an i-neighbor inside the set, for every i
  for (const auto& v : w.pseudocube)
    for (int i = 0; i < d; ++i) {
      bool has_neighbor = false;
      for (const auto& u : w.pseudocube) {
        int diff = 0;
        for (int j = 0; j < d; ++j)
          if (u[static_cast<std::size_t>(j)] != v[static_cast<std::size_t>(j)]) ++diff;
        if (diff == 1 && u[static_cast<std::size_t>(i)] != v[static_cast<std::size_t>(i)]) {
          has_neighbor = true;
          break;
        }
      }
      if (!has_neighbor) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Sauer-type inequalities
// ---------------------------------------------------------------------------

bool sauer_check(const HypothesisClass& cls, const DimensionBudget& budget) {
  const int d = vc_dim(cls, nullptr, budget);
  const int m = cls.domain_size();
  unsigned long long bound = 0;
  for (int i = 0; i <= d; ++i) bound = sat_add(bound, binomial(m, i));
  return static_cast<unsigned long long>(cls.size()) <= bound;
}

bool multiclass_sauer_check(const HypothesisClass& cls, const DimensionBudget& budget) {
  const int d = natarajan_dim(cls, nullptr, budget);
  const int m = cls.domain_size();
  const unsigned long long pairs = binomial(cls.label_count() + 1, 2);
  unsigned long long bound = 0;
  unsigned long long pair_power = 1;
  for (int i = 0; i <= d; ++i) {
    bound = sat_add(bound, sat_mul(binomial(m, i), pair_power));
    pair_power = sat_mul(pair_power, pairs);
  }
  return static_cast<unsigned long long>(cls.size()) <= bound;
}

// ---------------------------------------------------------------------------
// MTD -> threshold extraction (double pigeonhole)
// ---------------------------------------------------------------------------

ThresholdWitness mtd_to_threshold_extract(const HypothesisClass& cls, const MtdWitness& witness) {
  TOL_REQUIRE(verify_mtd_witness(cls, witness), "mtd_to_threshold_extract: invalid input witness");
  const int k = cls.label_count();
  const std::size_t t = witness.points.size();

  // 1st pigeonhole: majority row label (ties to the lowest label).
  std::vector<int> row_count(static_cast<std::size_t>(k), 0);
  for (Label y : witness.row_labels) ++row_count[static_cast<std::size_t>(y)];
  const Label y_prefix = static_cast<Label>(
      std::max_element(row_count.begin(), row_count.end()) - row_count.begin());

  std::vector<std::size_t> stage1;
  for (std::size_t i = 0; i < t; ++i)
    if (witness.row_labels[i] == y_prefix) stage1.push_back(i);

  // 2nd pigeonhole: majority column label among the surviving positions.
  std::vector<int> col_count(static_cast<std::size_t>(k), 0);
  for (std::size_t i : stage1) ++col_count[static_cast<std::size_t>(witness.col_labels[i])];
  const Label y_suffix = static_cast<Label>(
      std::max_element(col_count.begin(), col_count.end()) - col_count.begin());

  ThresholdWitness out;
  out.y_prefix = y_prefix;
  out.y_suffix = y_suffix;
  for (std::size_t i : stage1)
    if (witness.col_labels[i] == y_suffix) {
      out.points.push_back(witness.points[i]);
      out.hyps.push_back(witness.hyps[i]);
    }
  TOL_REQUIRE(out.points.size() >= t / static_cast<std::size_t>(k * k),
              "mtd_to_threshold_extract: pigeonhole bound violated");
  TOL_REQUIRE(verify_threshold_witness(cls, out),
              "mtd_to_threshold_extract: extracted witness failed verification");
  return out;
}

// ---------------------------------------------------------------------------
// Reports and version counters
// ---------------------------------------------------------------------------

DimensionReport compute_dimensions(const HypothesisClass& cls,
                                   const std::vector<std::string>& which,
                                   const DimensionBudget& budget) {
  auto wanted = [&](const std::string& name) {
    for (const auto& w : which)
      if (w == name || w == "all") return true;
    return false;
  };
  DimensionReport report;
  auto guard = [&](const std::string& name, auto&& fn) {
    try {
      fn();
    } catch (const BudgetExceeded& e) {
      report.notes.push_back(name + ": " + e.what());
    }
  };
  if (wanted("vc")) {
    if (cls.label_count() == 2)
      guard("vc", [&] {
        VcWitness w;
        report.vc = vc_dim(cls, &w, budget);
        report.vc_witness = std::move(w);
      });
    else
      report.notes.push_back("vc: skipped (binary-only; see nd)");
  }
  if (wanted("ld")) guard("ld", [&] { report.ld = littlestone_dim(cls, budget); });
  if (wanted("td")) guard("td", [&] {
    ThresholdWitness w;
    report.td = threshold_dim(cls, &w, budget);
    report.td_witness = std::move(w);
  });
  if (wanted("nd")) guard("nd", [&] {
    NatarajanWitness w;
    report.nd = natarajan_dim(cls, &w, budget);
    report.nd_witness = std::move(w);
  });
  if (wanted("mtd")) guard("mtd", [&] {
    MtdWitness w;
    report.mtd = mtd_dim(cls, &w, budget);
    report.mtd_witness = std::move(w);
  });
  if (wanted("ds")) guard("ds", [&] {
    DsWitness w;
    report.ds = ds_dim(cls, &w, budget);
    report.ds_witness = std::move(w);
  });
  return report;
}

namespace {

class MaskCounter : public VersionCounter {
 public:
  explicit MaskCounter(std::shared_ptr<LittlestoneEvaluator> eval)
      : eval_(std::move(eval)), mask_(eval_->full_mask()) {}

  std::uint64_t size() const override { return mask_.count(); }

  std::vector<std::uint64_t> label_counts(int x) const override {
    TOL_REQUIRE(mask_.any(), "label_counts on an empty version space");
    std::vector<std::uint64_t> counts;
    for (const auto c : eval_->label_counts(mask_, x)) counts.push_back(static_cast<std::uint64_t>(c));
    return counts;
  }

  void filter(int x, Label y) override { mask_ = eval_->filtered(mask_, x, y); }

  std::unique_ptr<VersionCounter> clone() const override {
    return std::make_unique<MaskCounter>(*this);
  }

  int littlestone_dim() const override { return eval_->ld(mask_); }

  std::string state_key() const override {
    std::ostringstream out;
    out << "mask:";
    mask_.for_each_set([&](std::size_t h) { out << h << ','; });
    return out.str();
  }

 private:
  std::shared_ptr<LittlestoneEvaluator> eval_;  // shared across clones
  Bitset mask_;
};

}  // namespace

std::unique_ptr<VersionCounter> make_version_counter(const HypothesisClass& cls,
                                                     const DimensionBudget& budget) {
  if (!cls.is_explicit()) {
    if (auto counter = cls.generator()->make_counter()) return counter;
  }
  auto eval = std::make_shared<LittlestoneEvaluator>(cls.materialized(budget.max_hypotheses), budget);
  return std::make_unique<MaskCounter>(std::move(eval));
}

}  // namespace tol
