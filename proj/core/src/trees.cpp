#include "tol/trees.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace tol {

int heap_level(int node) { return std::bit_width(static_cast<unsigned>(node) + 1u) - 1; }
int heap_parent(int node) { return (node - 1) / 2; }

bool heap_is_ancestor(int a, int b) {
  const int la = heap_level(a), lb = heap_level(b);
  if (la >= lb) return false;
  return ((b + 1) >> (lb - la)) == a + 1;
}

LittlestoneTree LittlestoneTree::binary(int depth, std::vector<int> instances) {
  TOL_REQUIRE(depth >= 0, "tree depth must be >= 0");
  TOL_REQUIRE(static_cast<int>(instances.size()) == (1 << (depth + 1)) - 1,
              "instance vector size != node count");
  LittlestoneTree t;
  t.depth = depth;
  t.instance = std::move(instances);
  t.edge.assign(t.instance.size(), {0, 1});
  return t;
}

LittlestoneTree LittlestoneTree::multiclass(int depth, std::vector<int> instances,
                                            std::vector<std::array<Label, 2>> edges) {
  LittlestoneTree t = binary(depth, std::move(instances));
  TOL_REQUIRE(edges.size() == t.instance.size(), "edge vector size != node count");
  for (const auto& e : edges) TOL_REQUIRE(e[0] != e[1], "child edge labels must differ");
  t.edge = std::move(edges);
  return t;
}

std::optional<ShatterWitness> shatters(const HypothesisClass& cls, const LittlestoneTree& tree) {
  for (int x : tree.instance)
    TOL_REQUIRE(x >= 0 && x < cls.domain_size(), "tree instance out of range for the class");
  const int d = tree.depth;
  const std::int64_t branches = std::int64_t{1} << (d + 1);
  ShatterWitness w;
  w.branch_hyp.assign(static_cast<std::size_t>(branches), -1);

  for (std::int64_t b = 0; b < branches; ++b) {
    // constraints (node instance, edge label) along the branch
    std::vector<LabeledPair> constraints;
    int node = 0;
    for (int i = 0; i <= d; ++i) {
      const int bit = static_cast<int>((b >> (d - i)) & 1);
      constraints.push_back({tree.instance[static_cast<std::size_t>(node)],
                             tree.edge[static_cast<std::size_t>(node)][static_cast<std::size_t>(bit)]});
      node = 2 * node + 1 + bit;
    }
    std::int64_t found = -1;
    for (std::int64_t h = 0; h < cls.size() && found < 0; ++h) {
      bool ok = true;
      for (const auto& c : constraints)
        if (cls.evaluate(h, c.instance) != c.label) {
          ok = false;
          break;
        }
      if (ok) found = h;
    }
    if (found < 0) return std::nullopt;
    w.branch_hyp[static_cast<std::size_t>(b)] = found;
  }
  return w;
}

bool verify_shatter_witness(const HypothesisClass& cls, const LittlestoneTree& tree,
                            const ShatterWitness& w) {
  const int d = tree.depth;
  const std::int64_t branches = std::int64_t{1} << (d + 1);
  if (static_cast<std::int64_t>(w.branch_hyp.size()) != branches) return false;
  for (std::int64_t b = 0; b < branches; ++b) {
    const std::int64_t h = w.branch_hyp[static_cast<std::size_t>(b)];
    if (h < 0 || h >= cls.size()) return false;
    int node = 0;
    for (int i = 0; i <= d; ++i) {
      const int bit = static_cast<int>((b >> (d - i)) & 1);
      if (cls.evaluate(h, tree.instance[static_cast<std::size_t>(node)]) !=
          tree.edge[static_cast<std::size_t>(node)][static_cast<std::size_t>(bit)])
        return false;
      node = 2 * node + 1 + bit;
    }
  }
  return true;
}

std::vector<int> bfs_sequence(const LittlestoneTree& tree, int n) {
  TOL_REQUIRE(n >= 1, "bfs_sequence needs n >= 1");
  std::vector<int> seq;
  seq.reserve(static_cast<std::size_t>(n));
  const int count = tree.node_count();
  for (int t = 0; t < n; ++t)
    seq.push_back(tree.instance[static_cast<std::size_t>(std::min(t, count - 1))]);
  return seq;
}

std::vector<int> CompleteSubtree::nodes_sorted() const {
  std::vector<int> out = heap;
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<int> complete_subtree_levels(const std::vector<int>& nodes) {
  if (nodes.empty()) return std::nullopt;
  std::vector<int> sorted = nodes;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;

  // parent-in-set = deepest strict ancestor present in the set
  std::map<int, std::vector<int>> children;
  std::vector<int> roots;
  for (int v : sorted) {
    int parent = -1;
    for (int a : sorted)
      if (heap_is_ancestor(a, v) && (parent < 0 || heap_level(a) > heap_level(parent))) parent = a;
    if (parent < 0)
      roots.push_back(v);
    else
      children[parent].push_back(v);
  }
  if (roots.size() != 1) return std::nullopt;

  std::map<int, int> depth;
  depth[roots[0]] = 0;
  int max_depth = 0;
  // sorted order visits ancestors before descendants (heap ids grow downward)
  for (int v : sorted) {
    if (!depth.count(v)) return std::nullopt;
    for (int c : children[v]) depth[c] = depth[v] + 1;
    max_depth = std::max(max_depth, depth[v]);
  }
  for (int v : sorted) {
    const auto it = children.find(v);
    const std::size_t degree = (it == children.end()) ? 0 : it->second.size();
    if (degree != 0 && degree != 2) return std::nullopt;
    if (degree == 0 && depth[v] != max_depth) return std::nullopt;
  }
  return max_depth + 1;
}

bool is_monochromatic(const std::vector<int>& coloring, const std::vector<int>& nodes,
                      int* color_out) {
  if (nodes.empty()) return false;
  const int color = coloring[static_cast<std::size_t>(nodes[0])];
  for (int v : nodes)
    if (coloring[static_cast<std::size_t>(v)] != color) return false;
  if (color_out) *color_out = color;
  return true;
}

namespace {

CompleteSubtree leaf_subtree(int node) { return CompleteSubtree{1, {node}}; }

CompleteSubtree trim_to_levels(const CompleteSubtree& s, int levels) {
  CompleteSubtree out;
  out.levels = levels;
  out.heap.assign(s.heap.begin(), s.heap.begin() + ((1 << levels) - 1));
  return out;
}

CompleteSubtree join_subtrees(int root, const CompleteSubtree& left, const CompleteSubtree& right) {
  CompleteSubtree out;
  out.levels = left.levels + 1;
  out.heap.reserve((std::size_t{2} << out.levels) - 1);
  out.heap.push_back(root);
  std::size_t li = 0, ri = 0;
  for (int level = 0; level < left.levels; ++level) {
    const std::size_t width = std::size_t{1} << level;
    for (std::size_t i = 0; i < width; ++i) out.heap.push_back(left.heap[li++]);
    for (std::size_t i = 0; i < width; ++i) out.heap.push_back(right.heap[ri++]);
  }
  return out;
}

// Recursive two-color extraction on the host heap rooted at `node` with
// `levels` levels below (inclusive).  Guarantees 0-mono >= p levels or
// 1-mono >= q levels whenever p + q <= levels.
RamseyResult two_color_rec(const std::vector<int>& coloring, int node, int levels, double p,
                           double q) {
  const int color = coloring[static_cast<std::size_t>(node)];
  const double target = (color == 0) ? p : q;
  if (target <= 1.0) return RamseyResult{color, leaf_subtree(node)};

  const double pl = (color == 0) ? p - 1 : p;
  const double ql = (color == 0) ? q : q - 1;
  RamseyResult left = two_color_rec(coloring, 2 * node + 1, levels - 1, pl, ql);
  if (left.color != color) return left;
  RamseyResult right = two_color_rec(coloring, 2 * node + 2, levels - 1, pl, ql);
  if (right.color != color) return right;

  const int keep = std::min(left.subtree.levels, right.subtree.levels);
  return RamseyResult{color, join_subtrees(node, trim_to_levels(left.subtree, keep),
                                           trim_to_levels(right.subtree, keep))};
}

}  // namespace

// Grows a monochromatic subtree downward while every leaf's two host
// children share its color (so an all-c region comes back whole).
void extend_greedily(RamseyResult& result, const std::vector<int>& coloring) {
  const int node_count = static_cast<int>(coloring.size());
  for (;;) {
    const std::size_t leaf_start = (std::size_t{1} << (result.subtree.levels - 1)) - 1;
    bool can_extend = true;
    for (std::size_t i = leaf_start; i < result.subtree.heap.size() && can_extend; ++i) {
      const int v = result.subtree.heap[i];
      can_extend = 2 * v + 2 < node_count &&
                   coloring[static_cast<std::size_t>(2 * v + 1)] == result.color &&
                   coloring[static_cast<std::size_t>(2 * v + 2)] == result.color;
    }
    if (!can_extend) return;
    for (std::size_t i = leaf_start; i < (std::size_t{2} << (result.subtree.levels - 1)) - 1; ++i) {
      const int v = result.subtree.heap[i];
      result.subtree.heap.push_back(2 * v + 1);
      result.subtree.heap.push_back(2 * v + 2);
    }
    ++result.subtree.levels;
  }
}

RamseyResult ramsey_two_color_levels(const std::vector<int>& coloring, int levels, double p,
                                     double q) {
  TOL_REQUIRE(levels >= 1, "ramsey: tree must have at least one level");
  TOL_REQUIRE(static_cast<int>(coloring.size()) == (1 << levels) - 1,
              "ramsey: coloring size != node count");
  TOL_REQUIRE(p >= 0 && q >= 0 && p + q <= levels + 1e-9,
              "ramsey: need p, q >= 0 with p + q <= node levels");
  for (int c : coloring) TOL_REQUIRE(c == 0 || c == 1, "ramsey: coloring must be binary");
  RamseyResult result = two_color_rec(coloring, 0, levels, p, q);
  extend_greedily(result, coloring);
  return result;
}

RamseyResult ramsey_two_color(const LittlestoneTree& tree, const std::vector<int>& coloring,
                              double p, double q) {
  TOL_REQUIRE(std::abs((p + q - 1) - tree.depth) < 1e-9,
              "ramsey_two_color: tree depth must equal p + q - 1");
  return ramsey_two_color_levels(coloring, tree.depth + 1, p, q);
}

RamseyResult ramsey_multi_color_levels(const std::vector<int>& coloring, int levels, int k) {
  TOL_REQUIRE(k >= 1, "ramsey: need k >= 1");
  TOL_REQUIRE(levels >= 1, "ramsey: tree must have at least one level");
  TOL_REQUIRE(static_cast<int>(coloring.size()) == (1 << levels) - 1,
              "ramsey: coloring size != node count");
  for (int c : coloring) TOL_REQUIRE(c >= 0 && c < k, "ramsey: color out of range");

  // Parity-halving: split the live colors by rank parity, recurse on the
  // monochromatic half.  Each step halves the color count and at most
  // halves the level count.
  CompleteSubtree host;
  host.levels = levels;
  host.heap.resize(coloring.size());
  for (std::size_t i = 0; i < coloring.size(); ++i) host.heap[i] = static_cast<int>(i);

  while (true) {
    std::set<int> live;
    for (int id : host.heap) live.insert(coloring[static_cast<std::size_t>(id)]);
    if (live.size() == 1)
      return RamseyResult{*live.begin(), host};

    std::vector<int> rank_parity(host.heap.size());
    for (std::size_t i = 0; i < host.heap.size(); ++i) {
      const int color = coloring[static_cast<std::size_t>(host.heap[i])];
      const auto rank = std::distance(live.begin(), live.find(color));
      rank_parity[i] = static_cast<int>(rank % 2);
    }
    const double half = host.levels / 2.0;
    RamseyResult split = ramsey_two_color_levels(rank_parity, host.levels, half, half);
    // Map the split (positions within `host`) back to host node ids.
    CompleteSubtree mapped;
    mapped.levels = split.subtree.levels;
    mapped.heap.reserve(split.subtree.heap.size());
    for (int pos : split.subtree.heap)
      mapped.heap.push_back(host.heap[static_cast<std::size_t>(pos)]);
    host = std::move(mapped);
  }
}

RamseyResult ramsey_multi_color(const LittlestoneTree& tree, const std::vector<int>& coloring,
                                int k) {
  return ramsey_multi_color_levels(coloring, tree.depth + 1, k);
}

std::int64_t mtd_recursion_bound(int label_count, int levels) {
  if (levels <= 0) return 0;
  if (levels == 1) return 1;
  const int next = (levels + 2 * label_count - 1) / (2 * label_count) - 1;
  return 1 + mtd_recursion_bound(label_count, next);
}

// ---------------------------------------------------------------------------
// MTD witness extraction from a shattered tree
// ---------------------------------------------------------------------------

namespace {

struct MtdExtract {
  MtdExtract(const HypothesisClass& cls, const LittlestoneTree& tree) : cls(cls), tree(tree) {}

  const HypothesisClass& cls;
  const LittlestoneTree& tree;

  // Child subtree of `sub` under heap position `child_pos` (1 = left, 2 =
  // right).  In heap order, level l splits into the left subtree's half
  // followed by the right subtree's half.
  static CompleteSubtree child_subtree(const CompleteSubtree& sub, int child_pos) {
    CompleteSubtree out;
    out.levels = sub.levels - 1;
    out.heap.reserve((std::size_t{1} << out.levels) - 1);
    for (int level = 1; level < sub.levels; ++level) {
      const std::size_t start = (std::size_t{1} << level) - 1;
      const std::size_t half = std::size_t{1} << (level - 1);
      const std::size_t offset = (child_pos == 1) ? 0 : half;
      for (std::size_t i = 0; i < half; ++i) out.heap.push_back(sub.heap[start + offset + i]);
    }
    return out;
  }

  // Host edge label at `node` toward descendant `target`.
  Label edge_toward(int node, int target) const {
    const int ln = heap_level(node), lt = heap_level(target);
    const int bit = static_cast<int>(((target + 1) >> (lt - ln - 1)) & 1);
    return tree.edge[static_cast<std::size_t>(node)][static_cast<std::size_t>(bit)];
  }

  // Builds the chain bottom-up.  `hyp_pool` is the set of hypothesis indices
  // still consistent with the descent constraints; `sub` the current host
  // subtree; row/col masks carry the labels already committed above us, and
  // `used` the instances already appended (chain instances must be distinct;
  // witness trees may reuse an instance across nodes).
  bool extract(const CompleteSubtree& sub, const std::vector<std::int64_t>& hyp_pool,
               std::uint64_t row_mask, std::uint64_t col_mask, std::set<int>& used,
               MtdWitness& out) {
    if (sub.levels <= 0 || hyp_pool.empty()) {
      out = MtdWitness{};
      return true;
    }
    for (std::int64_t h : hyp_pool) {
      // h colors the subtree's nodes by its values there
      std::vector<int> coloring(sub.heap.size());
      for (std::size_t i = 0; i < sub.heap.size(); ++i)
        coloring[i] = cls.evaluate(h, tree.instance[static_cast<std::size_t>(sub.heap[i])]);
      std::vector<int> local(coloring.size());
      // ramsey works on heap positions within `sub`; remap labels to a
      // dense range for the multicolor recursion, then map the returned
      // positions back to host node ids and the color back to a label
      RamseyResult mono = [&] {
        std::set<int> values(coloring.begin(), coloring.end());
        std::map<int, int> dense;
        int next = 0;
        for (int v : values) dense[v] = next++;
        for (std::size_t i = 0; i < coloring.size(); ++i) local[i] = dense[coloring[i]];
        RamseyResult r = ramsey_multi_color_levels(local, sub.levels, next);
        for (auto [value, id] : dense) {
          if (id == r.color) {
            r.color = value;
            break;
          }
        }
        for (int& pos : r.subtree.heap) pos = sub.heap[static_cast<std::size_t>(pos)];
        return r;
      }();
      const Label y = static_cast<Label>(mono.color);
      if ((col_mask >> y) & 1) continue;  // row label would collide with a column label

      const int root = mono.subtree.heap[0];
      const int root_instance = tree.instance[static_cast<std::size_t>(root)];
      if (used.count(root_instance)) continue;

      if (mono.subtree.levels == 1) {
        // no descent possible; a singleton chain still needs a free column label
        if (std::popcount(row_mask | (std::uint64_t{1} << y)) >= cls.label_count()) continue;
        out = MtdWitness{{root_instance}, {h}, {y}, {0}};
        return finalize(out, row_mask, y);
      }

      for (int child_pos : {1, 2}) {
        const int child = mono.subtree.heap[static_cast<std::size_t>(child_pos)];
        const Label y_edge = edge_toward(root, child);
        if (y_edge == y) continue;
        if ((row_mask >> y_edge) & 1) continue;  // column label collides with a row label
        std::vector<std::int64_t> next_pool;
        for (std::int64_t g : hyp_pool)
          if (cls.evaluate(g, root_instance) == y_edge) next_pool.push_back(g);
        if (next_pool.empty()) continue;

        MtdWitness inner;
        used.insert(root_instance);
        const bool ok = extract(child_subtree(mono.subtree, child_pos), next_pool,
                                row_mask | (std::uint64_t{1} << y),
                                col_mask | (std::uint64_t{1} << y_edge), used, inner);
        used.erase(root_instance);
        if (!ok) continue;
        // append (root, h) as the last chain position
        inner.points.push_back(root_instance);
        inner.hyps.push_back(h);
        inner.row_labels.push_back(y);
        inner.col_labels.push_back(y_edge);
        if (inner.points.size() == 1) {
          if (!finalize(inner, row_mask, y)) continue;
        }
        out = std::move(inner);
        return true;
      }
    }
    return false;
  }

  // Fill the virtual first-column label with the lowest label avoiding all
  // row labels (including those committed above us).
  bool finalize(MtdWitness& w, std::uint64_t outer_rows, Label y) const {
    const std::uint64_t rows = outer_rows | (std::uint64_t{1} << y);
    for (Label c = 0; c < cls.label_count(); ++c)
      if (!((rows >> c) & 1)) {
        w.col_labels[0] = c;
        return true;
      }
    return false;
  }
};

}  // namespace

MtdWitness mtd_from_tree(const HypothesisClass& cls, const LittlestoneTree& tree,
                         const DimensionBudget& budget) {
  const HypothesisClass ex = cls.materialized(budget.max_hypotheses);
  TOL_REQUIRE(ex.label_count() <= 64, "mtd_from_tree supports at most 64 labels");
  const auto witness = shatters(ex, tree);
  TOL_REQUIRE(witness.has_value(), "mtd_from_tree: the class does not shatter the tree");

  CompleteSubtree whole;
  whole.levels = tree.depth + 1;
  whole.heap.resize(static_cast<std::size_t>(tree.node_count()));
  for (int i = 0; i < tree.node_count(); ++i) whole.heap[static_cast<std::size_t>(i)] = i;

  std::vector<std::int64_t> pool(static_cast<std::size_t>(ex.size()));
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = static_cast<std::int64_t>(i);

  MtdExtract extractor(ex, tree);
  MtdWitness out;
  std::set<int> used;
  TOL_REQUIRE(extractor.extract(whole, pool, 0, 0, used, out),
              "mtd_from_tree: extraction failed to satisfy the label constraints");
  TOL_REQUIRE(verify_mtd_witness(ex, out), "mtd_from_tree: extracted witness failed verification");
  TOL_REQUIRE(static_cast<std::int64_t>(out.points.size()) >=
                  mtd_recursion_bound(ex.label_count(), tree.depth + 1),
              "mtd_from_tree: size fell below the recursion bound");
  return out;
}

namespace {

std::optional<LittlestoneTree> build_witness_tree(LittlestoneEvaluator& eval) {
  const Bitset full = eval.full_mask();
  const int d = eval.ld(full);
  if (d <= 0) return std::nullopt;

  LittlestoneTree tree;
  tree.depth = d - 1;
  tree.instance.assign(static_cast<std::size_t>(tree.node_count()), 0);
  tree.edge.assign(static_cast<std::size_t>(tree.node_count()), {0, 1});

  struct Item {
    int node;
    Bitset mask;
  };
  std::vector<Item> stack{{0, full}};
  while (!stack.empty()) {
    Item item = std::move(stack.back());
    stack.pop_back();
    const auto split = eval.best_split(item.mask);
    TOL_REQUIRE(split.has_value(), "witness tree replay lost the split");
    tree.instance[static_cast<std::size_t>(item.node)] = split->x;
    tree.edge[static_cast<std::size_t>(item.node)] = {split->y0, split->y1};
    if (heap_level(item.node) < tree.depth) {
      stack.push_back({2 * item.node + 1, eval.filtered(item.mask, split->x, split->y0)});
      stack.push_back({2 * item.node + 2, eval.filtered(item.mask, split->x, split->y1)});
    }
  }
  return tree;
}

}  // namespace

std::optional<LittlestoneTree> littlestone_witness_tree(const HypothesisClass& cls,
                                                        const DimensionBudget& budget) {
  LittlestoneEvaluator eval(cls.materialized(budget.max_hypotheses), budget);
  return build_witness_tree(eval);
}

// ---------------------------------------------------------------------------
// LTREE v1
// ---------------------------------------------------------------------------

namespace {

std::string node_bitstring(int node) {
  if (node == 0) return "-";
  std::string bits;
  const int level = heap_level(node);
  for (int i = 0; i < level; ++i) bits += static_cast<char>('0' + (((node + 1) >> (level - 1 - i)) & 1));
  return bits;
}

}  // namespace

std::string write_ltree(const LittlestoneTree& tree) {
  std::ostringstream out;
  out << "LTREE 1 " << tree.depth << '\n';
  for (int v = 0; v < tree.node_count(); ++v)
    out << node_bitstring(v) << ' ' << tree.instance[static_cast<std::size_t>(v)] << ' '
        << tree.edge[static_cast<std::size_t>(v)][0] << ' '
        << tree.edge[static_cast<std::size_t>(v)][1] << '\n';
  return out.str();
}

LittlestoneTree parse_ltree(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  TOL_REQUIRE(std::getline(in, line), "LTREE: empty input");
  std::istringstream header(line);
  std::string magic;
  int version = 0, depth = -1;
  TOL_REQUIRE(static_cast<bool>(header >> magic >> version >> depth) && magic == "LTREE" &&
                  version == 1 && depth >= 0,
              "LTREE: bad header (expected 'LTREE 1 <depth>')");
  const int count = (1 << (depth + 1)) - 1;
  std::vector<int> instances(static_cast<std::size_t>(count));
  std::vector<std::array<Label, 2>> edges(static_cast<std::size_t>(count));
  for (int v = 0; v < count; ++v) {
    TOL_REQUIRE(std::getline(in, line), "LTREE: fewer nodes than the header declares");
    std::istringstream row(line);
    std::string id;
    int instance = 0;
    Label y0 = 0, y1 = 0;
    TOL_REQUIRE(static_cast<bool>(row >> id >> instance >> y0 >> y1), "LTREE: malformed node line");
    TOL_REQUIRE(id == node_bitstring(v), "LTREE: nodes must appear in breadth-first order");
    TOL_REQUIRE(instance >= 0, "LTREE: negative instance index");
    instances[static_cast<std::size_t>(v)] = instance;
    edges[static_cast<std::size_t>(v)] = {y0, y1};
  }
  return LittlestoneTree::multiclass(depth, std::move(instances), std::move(edges));
}

void save_ltree_file(const LittlestoneTree& tree, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  TOL_REQUIRE(out.good(), "cannot open file for writing: " + path);
  out << write_ltree(tree);
}

LittlestoneTree load_ltree_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  TOL_REQUIRE(in.good(), "cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ltree(buf.str());
}

}  // namespace tol
