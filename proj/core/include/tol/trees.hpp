#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tol/dimensions.hpp"
#include "tol/hypothesis.hpp"

namespace tol {

// Complete binary tree whose nodes carry instances and whose node->child
// edges carry labels.  Depth d means node levels 0..d (2^(d+1)-1 nodes).
// Nodes are heap-indexed: root 0, children of node i at 2i+1 and 2i+2, so
// heap order is breadth-first order.  Binary trees default to edge labels
// (0, 1); the multiclass form stores an explicit label pair per node, with
// the two child labels always distinct.
struct LittlestoneTree {
  int depth = 0;
  std::vector<int> instance;               // size 2^(depth+1)-1, heap order
  std::vector<std::array<Label, 2>> edge;  // per node: labels of its child edges

  int node_count() const { return (1 << (depth + 1)) - 1; }
  static LittlestoneTree binary(int depth, std::vector<int> instances);
  static LittlestoneTree multiclass(int depth, std::vector<int> instances,
                                    std::vector<std::array<Label, 2>> edges);
};

int heap_level(int node);
int heap_parent(int node);
// True iff a is an ancestor of b (strict) in heap order.
bool heap_is_ancestor(int a, int b);

// Branches are indexed by d+1 bits, most significant bit first.
struct ShatterWitness {
  std::vector<std::int64_t> branch_hyp;  // size 2^(depth+1)
};

// Per-branch witnesses, or nullopt when the class does not shatter the tree.
// Each witness is the lex-lowest hypothesis consistent along its branch.
std::optional<ShatterWitness> shatters(const HypothesisClass& cls, const LittlestoneTree& tree);
bool verify_shatter_witness(const HypothesisClass& cls, const LittlestoneTree& tree,
                            const ShatterWitness& w);

// First n nodes' instances in breadth-first order; if n exceeds the node
// count, the final node's instance is repeated (repeats are inert in the
// realizable game).
std::vector<int> bfs_sequence(const LittlestoneTree& tree, int n);

// A complete binary subtree of a host tree, as a heap array of host node
// ids (so child order is preserved).  levels >= 1.
struct CompleteSubtree {
  int levels = 0;
  std::vector<int> heap;  // size 2^levels - 1
  std::vector<int> nodes_sorted() const;
};

// Independent certificate checker: the number of levels of the complete
// binary subtree induced by `nodes` under the host ancestor order (unique
// root, every non-leaf with exactly two induced children, all leaves at
// equal induced depth), or nullopt if the set is not one.
std::optional<int> complete_subtree_levels(const std::vector<int>& nodes);

// True iff all nodes share one color; reports it.
bool is_monochromatic(const std::vector<int>& coloring, const std::vector<int>& nodes,
                      int* color_out);

struct RamseyResult {
  int color = 0;
  CompleteSubtree subtree;
};

// Two-color tree Ramsey on a host tree of `levels` node levels, coloring
// indexed by heap position.  Requires p, q >= 0 with p + q <= levels.
// Returns a 0-monochromatic complete subtree with >= p levels or a
// 1-monochromatic one with >= q levels.
RamseyResult ramsey_two_color_levels(const std::vector<int>& coloring, int levels, double p,
                                     double q);

// Form over a tree of depth p+q-1 (so p+q node levels).  The returned
// subtree of color c has at least p (c=0) or q (c=1) node levels.
RamseyResult ramsey_two_color(const LittlestoneTree& tree, const std::vector<int>& coloring,
                              double p, double q);

// Multi-color corollary: for a coloring into [k] of a tree with L node
// levels, returns a monochromatic complete subtree with at least
// L / 2^ceil(log2 k) node levels (parity-halving recursion).
RamseyResult ramsey_multi_color_levels(const std::vector<int>& coloring, int levels, int k);
RamseyResult ramsey_multi_color(const LittlestoneTree& tree, const std::vector<int>& coloring,
                                int k);

// Size f_k(L) guaranteed by the extraction recursion below, where L is the
// node-level count of the shattered tree:
//   f_k(L) = 0 for L <= 0,  f_k(1) = 1,  f_k(L) = 1 + f_k(ceil(L/2k) - 1).
std::int64_t mtd_recursion_bound(int label_count, int levels);

// Multiclass-threshold witness extraction from a tree shattered by cls:
// fix a hypothesis, take its monochromatic subtree, descend through a child
// edge whose label differs from the monochromatic color, recurse on the
// hypotheses taking that edge label at the subtree root, then append.
// Backtracks over the fixed-hypothesis and descent choices until the
// row/column label sets stay disjoint.  The result verifies against the raw
// definition and has size >= mtd_recursion_bound(k, depth+1).
MtdWitness mtd_from_tree(const HypothesisClass& cls, const LittlestoneTree& tree,
                         const DimensionBudget& budget = {});

// Witness tree for the Littlestone dimension: a shattered tree of depth
// ld-1 reconstructed by replaying the lex-lowest optimal splits, or nullopt
// when ld = 0.
std::optional<LittlestoneTree> littlestone_witness_tree(const HypothesisClass& cls,
                                                        const DimensionBudget& budget = {});

// "LTREE v1" file format.  Line 1: "LTREE 1 <depth>"; then one node per
// line in breadth-first order: bitstring id ('-' for the root), instance
// index, and the node's two child-edge labels.
std::string write_ltree(const LittlestoneTree& tree);
LittlestoneTree parse_ltree(const std::string& text);
void save_ltree_file(const LittlestoneTree& tree, const std::string& path);
LittlestoneTree load_ltree_file(const std::string& path);

}  // namespace tol
