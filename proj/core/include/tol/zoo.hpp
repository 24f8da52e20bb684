#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "tol/hypothesis.hpp"
#include "tol/rng.hpp"

namespace tol {

// Generators for the named classes used throughout the test and experiment
// suites.  All are deterministic; instance/hypothesis index conventions are
// documented per generator and relied on by callers.

// N instances x_1..x_N (indices 0..N-1), N+1 hypotheses h_0..h_N with
// h_i(x_j) = 1 iff j <= i (1-based j), i.e. row i is 1^i 0^(N-i).
HypothesisClass thresholds(int n);

// All k^m functions from [0, m) to [0, k).  Hypothesis h is the base-k
// expansion of h with instance 0 as the most significant digit.
HypothesisClass multiclass_cube(int m, int k, std::int64_t max_hypotheses = 1 << 20);
HypothesisClass full_cube(int m);

// One all-zero hypothesis over m binary-labeled instances.
HypothesisClass singleton(int m);

// Branch witnesses of a complete binary tree of depth d, off-path value 0.
// Instances are the 2^(d+1)-1 tree nodes in breadth-first order (instance
// index == 0-based heap id, children of i at 2i+1 and 2i+2).  Hypothesis b
// encodes branch bits u_1..u_(d+1) with u_1 as the most significant bit of
// b; h_b(node) = u_(l+1) if node is the branch's level-l node, else 0.
// Returned implicit; it supplies an O(1)-per-step VersionCounter that
// requires breadth-first labeling order.
HypothesisClass tree_cube_class(int depth);

// Branch functions of a depth-n tree whose level-x nodes all carry instance
// x and whose edges carry globally distinct labels, numbered in BFS edge
// order (edge into 1-based heap node v gets label v-2).  Domain {0..n},
// 2^(n+1) hypotheses, 2^(n+2)-2 labels.
HypothesisClass ds_claim_class(int n);

// Tagged tree-cube witnesses: for each tree depth i in [1, i_max] and each
// branch j, one hypothesis with value (b, i, j) encoded densely, where b is
// the untagged branch value on tree i's nodes and 0 on other trees' nodes.
// Any single observed label identifies the hypothesis.
HypothesisClass g_truncation(int i_max);

// h distinct uniform rows over [0, k)^m, deterministic in seed.
HypothesisClass random_class(int m, int k, std::int64_t h, std::uint64_t seed);

// CLI-facing family dispatch.  Families: thresholds, cube, multiclass-cube,
// singleton, tree-cube, ds-claim, g-truncation, random.
HypothesisClass make_class_from_spec(const std::string& family,
                                     const std::vector<std::int64_t>& params,
                                     std::uint64_t seed);

// Version-space state of a tree-cube class under breadth-first filtering:
// a prefix of forced branch bits plus a dead flag.  Exposed for tests.
class TreeCubeCounter : public VersionCounter {
 public:
  explicit TreeCubeCounter(int depth) : depth_(depth) {}

  std::uint64_t size() const override;
  std::vector<std::uint64_t> label_counts(int x) const override;
  void filter(int x, Label y) override;
  std::unique_ptr<VersionCounter> clone() const override;
  int littlestone_dim() const override;
  std::string state_key() const override;

 private:
  bool on_active_path(int node, int level) const;

  int depth_;
  int watermark_ = 0;  // number of nodes labeled so far (BFS prefix length)
  int consumed_ = 0;   // number of branch bits forced by on-path labels
  std::uint64_t bits_ = 0;  // bit l = label chosen at the level-l active node
  bool dead_ = false;
};

}  // namespace tol
