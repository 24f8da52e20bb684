#include "tol/zoo.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace tol {

namespace {

int heap_level(int node) { return std::bit_width(static_cast<unsigned>(node) + 1u) - 1; }

// Branch bit u_(i+1) of branch b over a depth-d tree, i in [0, d].
int branch_bit(std::int64_t b, int depth, int i) {
  return static_cast<int>((b >> (depth - i)) & 1);
}

// Path bit at level i (0-based edge from level i to i+1) of heap node.
int node_path_bit(int node, int level, int i) {
  const unsigned key = static_cast<unsigned>(node) + 1u;  // leading 1 then path bits
  return static_cast<int>((key >> (level - 1 - i)) & 1u);
}

Label tree_cube_eval(int depth, std::int64_t branch, int node) {
  const int level = heap_level(node);
  for (int i = 0; i < level; ++i)
    if (node_path_bit(node, level, i) != branch_bit(branch, depth, i)) return 0;
  return static_cast<Label>(branch_bit(branch, depth, level));
}

class TreeCubeClass : public ImplicitClass {
 public:
  explicit TreeCubeClass(int depth) : depth_(depth) {}
  int domain_size() const override { return (1 << (depth_ + 1)) - 1; }
  int label_count() const override { return 2; }
  std::int64_t hypothesis_count() const override { return std::int64_t{1} << (depth_ + 1); }
  Label evaluate(std::int64_t h, int x) const override { return tree_cube_eval(depth_, h, x); }
  std::string name() const override { return "tree-cube(" + std::to_string(depth_) + ")"; }
  std::unique_ptr<VersionCounter> make_counter() const override {
    return std::make_unique<TreeCubeCounter>(depth_);
  }

 private:
  int depth_;
};

}  // namespace

bool TreeCubeCounter::on_active_path(int node, int level) const {
  for (int i = 0; i < level; ++i)
    if (node_path_bit(node, level, i) != static_cast<int>((bits_ >> i) & 1)) return false;
  return true;
}

std::uint64_t TreeCubeCounter::size() const {
  return dead_ ? 0 : (std::uint64_t{1} << (depth_ + 1 - consumed_));
}

std::vector<std::uint64_t> TreeCubeCounter::label_counts(int x) const {
  TOL_REQUIRE(!dead_, "label_counts on an empty version space");
  TOL_REQUIRE(x >= 0 && x <= watermark_, "tree-cube counter requires breadth-first order");
  std::vector<std::uint64_t> counts(2, 0);
  const int level = heap_level(x);
  if (x < watermark_) {
    // Already-labeled node: all survivors agree with the recorded label.
    const bool on_path = level < consumed_ && on_active_path(x, level);
    const Label value = on_path ? static_cast<Label>((bits_ >> level) & 1) : 0;
    counts[static_cast<std::size_t>(value)] = size();
  } else if (level == consumed_ && on_active_path(x, level)) {
    counts[0] = counts[1] = size() / 2;  // the free bit at the active node
  } else {
    counts[0] = size();  // off the active path: every survivor evaluates to 0
  }
  return counts;
}

void TreeCubeCounter::filter(int x, Label y) {
  TOL_REQUIRE(y == 0 || y == 1, "label out of range");
  TOL_REQUIRE(x >= 0 && x < (1 << (depth_ + 1)) - 1, "instance index out of range");
  if (dead_) return;
  TOL_REQUIRE(x <= watermark_, "tree-cube counter requires breadth-first order");
  const int level = heap_level(x);
  if (x < watermark_) {
    const bool on_path = level < consumed_ && on_active_path(x, level);
    const Label value = on_path ? static_cast<Label>((bits_ >> level) & 1) : 0;
    if (y != value) dead_ = true;
    return;
  }
  ++watermark_;
  if (level == consumed_ && on_active_path(x, level)) {
    bits_ |= static_cast<std::uint64_t>(y) << consumed_;
    ++consumed_;
  } else if (y != 0) {
    dead_ = true;
  }
}

std::unique_ptr<VersionCounter> TreeCubeCounter::clone() const {
  return std::make_unique<TreeCubeCounter>(*this);
}

int TreeCubeCounter::littlestone_dim() const {
  return dead_ ? -1 : depth_ + 1 - consumed_;
}

std::string TreeCubeCounter::state_key() const {
  std::ostringstream out;
  out << "tc:" << depth_ << ':' << watermark_ << ':' << consumed_ << ':' << bits_ << ':' << dead_;
  return out.str();
}

HypothesisClass thresholds(int n) {
  TOL_REQUIRE(n >= 1, "thresholds(n) needs n >= 1");
  std::vector<std::vector<Label>> rows;
  rows.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    std::vector<Label> row(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < i; ++j) row[static_cast<std::size_t>(j)] = 1;
    rows.push_back(std::move(row));
  }
  return HypothesisClass::from_rows(n, 2, std::move(rows));
}

HypothesisClass multiclass_cube(int m, int k, std::int64_t max_hypotheses) {
  TOL_REQUIRE(m >= 1 && k >= 2, "multiclass_cube needs m >= 1, k >= 2");
  std::int64_t total = 1;
  for (int i = 0; i < m; ++i) {
    total *= k;
    if (total > max_hypotheses)
      throw BudgetExceeded("multiclass_cube(" + std::to_string(m) + "," + std::to_string(k) +
                               ") exceeds the hypothesis budget",
                           static_cast<std::uint64_t>(total));
  }
  std::vector<std::vector<Label>> rows;
  rows.reserve(static_cast<std::size_t>(total));
  for (std::int64_t h = 0; h < total; ++h) {
    std::vector<Label> row(static_cast<std::size_t>(m));
    std::int64_t v = h;
    for (int x = m - 1; x >= 0; --x) {
      row[static_cast<std::size_t>(x)] = static_cast<Label>(v % k);
      v /= k;
    }
    rows.push_back(std::move(row));
  }
  return HypothesisClass::from_rows(m, k, std::move(rows));
}

HypothesisClass full_cube(int m) { return multiclass_cube(m, 2); }

HypothesisClass singleton(int m) {
  TOL_REQUIRE(m >= 1, "singleton(m) needs m >= 1");
  return HypothesisClass::from_rows(m, 2, {std::vector<Label>(static_cast<std::size_t>(m), 0)});
}

HypothesisClass tree_cube_class(int depth) {
  TOL_REQUIRE(depth >= 1 && depth <= 62, "tree_cube_class depth out of range");
  return HypothesisClass::from_generator(std::make_shared<TreeCubeClass>(depth));
}

HypothesisClass ds_claim_class(int n) {
  TOL_REQUIRE(n >= 1 && n <= 16, "ds_claim_class(n) needs 1 <= n <= 16");
  const int m = n + 1;
  const int k = (1 << (n + 2)) - 2;
  const std::int64_t branches = std::int64_t{1} << (n + 1);
  std::vector<std::vector<Label>> rows;
  rows.reserve(static_cast<std::size_t>(branches));
  for (std::int64_t b = 0; b < branches; ++b) {
    std::vector<Label> row(static_cast<std::size_t>(m));
    for (int x = 0; x < m; ++x) {
      // 1-based heap id of the branch's node at depth x+1; its incoming
      // edge label is id-2 (BFS edge numbering).
      const std::int64_t id = (std::int64_t{1} << (x + 1)) + (b >> (n - x));
      row[static_cast<std::size_t>(x)] = static_cast<Label>(id - 2);
    }
    rows.push_back(std::move(row));
  }
  return HypothesisClass::from_rows(m, k, std::move(rows));
}

HypothesisClass g_truncation(int i_max) {
  TOL_REQUIRE(i_max >= 1 && i_max <= 6, "g_truncation(i_max) needs 1 <= i_max <= 6");
  std::vector<int> tree_offset(static_cast<std::size_t>(i_max) + 1, 0);
  std::vector<int> label_offset(static_cast<std::size_t>(i_max) + 1, 0);
  int m = 0, k = 0;
  for (int i = 1; i <= i_max; ++i) {
    tree_offset[static_cast<std::size_t>(i)] = m;
    label_offset[static_cast<std::size_t>(i)] = k;
    m += (1 << (i + 1)) - 1;
    k += 2 << (i + 1);  // (b, j) pairs for tree i
  }

  std::vector<std::vector<Label>> rows;
  for (int i = 1; i <= i_max; ++i) {
    const std::int64_t branches = std::int64_t{1} << (i + 1);
    for (std::int64_t j = 0; j < branches; ++j) {
      std::vector<Label> row(static_cast<std::size_t>(m));
      for (int x = 0; x < m; ++x) {
        int tree = i_max;
        while (tree_offset[static_cast<std::size_t>(tree)] > x) --tree;
        const int node = x - tree_offset[static_cast<std::size_t>(tree)];
        const Label b = (tree == i) ? tree_cube_eval(i, j, node) : 0;
        row[static_cast<std::size_t>(x)] =
            static_cast<Label>(label_offset[static_cast<std::size_t>(i)] + 2 * j + b);
      }
      rows.push_back(std::move(row));
    }
  }
  return HypothesisClass::from_rows(m, k, std::move(rows));
}

HypothesisClass random_class(int m, int k, std::int64_t h, std::uint64_t seed) {
  TOL_REQUIRE(m >= 1 && k >= 2 && h >= 1, "random_class needs m >= 1, k >= 2, h >= 1");
  constexpr std::int64_t kCap = std::int64_t{1} << 40;
  std::int64_t exact_total = 1;
  for (int i = 0; i < m; ++i) {
    exact_total *= k;
    TOL_REQUIRE(exact_total <= kCap, "random_class domain too large");
  }
  TOL_REQUIRE(h <= exact_total, "random_class: more hypotheses requested than exist");

  Rng rng(seed, /*stream=*/0x7a00);
  auto decode = [&](std::int64_t id) {
    std::vector<Label> row(static_cast<std::size_t>(m));
    for (int x = m - 1; x >= 0; --x) {
      row[static_cast<std::size_t>(x)] = static_cast<Label>(id % k);
      id /= k;
    }
    return row;
  };

  std::vector<std::vector<Label>> rows;
  if (exact_total <= 4 * h || exact_total <= 4096) {
    // Dense regime: partial Fisher-Yates over all row ids.
    std::vector<std::int64_t> ids(static_cast<std::size_t>(exact_total));
    for (std::int64_t i = 0; i < exact_total; ++i) ids[static_cast<std::size_t>(i)] = i;
    for (std::int64_t i = 0; i < h; ++i) {
      const std::int64_t j =
          i + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(exact_total - i)));
      std::swap(ids[static_cast<std::size_t>(i)], ids[static_cast<std::size_t>(j)]);
      rows.push_back(decode(ids[static_cast<std::size_t>(i)]));
    }
  } else {
    std::set<std::int64_t> chosen;
    while (static_cast<std::int64_t>(chosen.size()) < h) {
      const auto id = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(exact_total)));
      if (chosen.insert(id).second) rows.push_back(decode(id));
    }
  }
  return HypothesisClass::from_rows(m, k, std::move(rows));
}

HypothesisClass make_class_from_spec(const std::string& family,
                                     const std::vector<std::int64_t>& params,
                                     std::uint64_t seed) {
  auto param = [&](std::size_t i) -> std::int64_t {
    TOL_REQUIRE(i < params.size(), "family '" + family + "': missing parameter");
    return params[i];
  };
  if (family == "thresholds") return thresholds(static_cast<int>(param(0)));
  if (family == "cube" || family == "full-cube" || family == "full_cube")
    return full_cube(static_cast<int>(param(0)));
  if (family == "multiclass-cube" || family == "multiclass_cube")
    return multiclass_cube(static_cast<int>(param(0)), static_cast<int>(param(1)));
  if (family == "singleton") return singleton(static_cast<int>(param(0)));
  if (family == "tree-cube" || family == "tree_cube")
    return tree_cube_class(static_cast<int>(param(0)));
  if (family == "ds-claim" || family == "ds_claim")
    return ds_claim_class(static_cast<int>(param(0)));
  if (family == "g-truncation" || family == "g_truncation")
    return g_truncation(static_cast<int>(param(0)));
  if (family == "random")
    return random_class(static_cast<int>(param(0)), static_cast<int>(param(1)), param(2), seed);
  throw ContractViolation("unknown class family: " + family);
}

}  // namespace tol
