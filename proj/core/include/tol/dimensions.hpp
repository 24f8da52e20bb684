#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tol/bitset.hpp"
#include "tol/hypothesis.hpp"

namespace tol {

// Exhaustive dimension searches are exact only up to this budget; beyond it
// they raise BudgetExceeded instead of returning a possibly-wrong value.
struct DimensionBudget {
  int max_domain = 16;
  std::int64_t max_hypotheses = 4096;
  std::uint64_t max_states = 50'000'000;
};

struct VcWitness {
  std::vector<int> points;
};

// Chain x_1..x_t with hypotheses h_1..h_t and h_i(x_j) = y_prefix if j <= i,
// else y_suffix.  Binary classes pin (y_prefix, y_suffix) = (1, 0).
struct ThresholdWitness {
  std::vector<int> points;
  std::vector<std::int64_t> hyps;
  Label y_prefix = 1;
  Label y_suffix = 0;
};

struct NatarajanWitness {
  std::vector<int> points;
  std::vector<Label> f0, f1;  // everywhere-disagreeing label functions on points
};

// Chain with per-row labels y_i and per-column labels y'_j:
// h_i(x_j) = row_labels[i] if j <= i, col_labels[j] if j > i, and no row
// label equals any column label.  col_labels[0] is never read by the table
// but must still avoid every row label.
struct MtdWitness {
  std::vector<int> points;
  std::vector<std::int64_t> hyps;
  std::vector<Label> row_labels;
  std::vector<Label> col_labels;
};

struct DsWitness {
  std::vector<int> points;
  std::vector<std::vector<Label>> pseudocube;  // surviving restriction vectors
};

int vc_dim(const HypothesisClass& cls, VcWitness* witness = nullptr,
           const DimensionBudget& budget = {});
int littlestone_dim(const HypothesisClass& cls, const DimensionBudget& budget = {});
int threshold_dim(const HypothesisClass& cls, ThresholdWitness* witness = nullptr,
                  const DimensionBudget& budget = {});
int natarajan_dim(const HypothesisClass& cls, NatarajanWitness* witness = nullptr,
                  const DimensionBudget& budget = {});
int mtd_dim(const HypothesisClass& cls, MtdWitness* witness = nullptr,
            const DimensionBudget& budget = {});
int ds_dim(const HypothesisClass& cls, DsWitness* witness = nullptr,
           const DimensionBudget& budget = {});

// Iteratively deletes vectors lacking an i-neighbor for some coordinate i
// until a fixpoint; true iff the fixpoint is nonempty.
bool has_pseudocube(const std::vector<std::vector<Label>>& vectors, int d,
                    std::vector<std::vector<Label>>* survivors = nullptr);

// |H| <= sum_{i<=vc} C(m, i) (binary), and the Natarajan-dimension analogue
// |H| <= sum_{i<=nd} C(m, i) * C(k+1, 2)^i.  Both must hold for every class;
// a false return signals an implementation bug.
bool sauer_check(const HypothesisClass& cls, const DimensionBudget& budget = {});
bool multiclass_sauer_check(const HypothesisClass& cls, const DimensionBudget& budget = {});

// Pigeonholes a verified MTD witness of size t over k labels (rows by y_i,
// then columns by y'_j) into a single-pair threshold witness of size
// >= floor(t / k^2).
ThresholdWitness mtd_to_threshold_extract(const HypothesisClass& cls, const MtdWitness& witness);

// Witness re-verification straight from the definitions.
bool verify_vc_witness(const HypothesisClass& cls, const VcWitness& w);
bool verify_threshold_witness(const HypothesisClass& cls, const ThresholdWitness& w);
bool verify_natarajan_witness(const HypothesisClass& cls, const NatarajanWitness& w);
bool verify_mtd_witness(const HypothesisClass& cls, const MtdWitness& w);
bool verify_ds_witness(const HypothesisClass& cls, const DsWitness& w);

struct DimensionReport {
  std::optional<int> vc, ld, td, nd, mtd, ds;
  std::optional<VcWitness> vc_witness;
  std::optional<ThresholdWitness> td_witness;
  std::optional<NatarajanWitness> nd_witness;
  std::optional<MtdWitness> mtd_witness;
  std::optional<DsWitness> ds_witness;
  std::vector<std::string> notes;  // skipped/budget-exceeded computations
};

// which: subset of {"vc","ld","td","nd","mtd","ds"} or {"all"}.
DimensionReport compute_dimensions(const HypothesisClass& cls,
                                   const std::vector<std::string>& which,
                                   const DimensionBudget& budget = {});

// Littlestone-dimension evaluator over version-space masks of an explicit
// class, memoized on the mask.  Also exposes the lexicographically first
// optimal split so witness trees can be replayed on demand.
class LittlestoneEvaluator {
 public:
  explicit LittlestoneEvaluator(HypothesisClass cls, const DimensionBudget& budget = {});

  const HypothesisClass& cls() const { return cls_; }
  Bitset full_mask() const { return Bitset(static_cast<std::size_t>(cls_.size()), true); }
  Bitset filtered(const Bitset& mask, int x, Label y) const;
  std::vector<std::int64_t> label_counts(const Bitset& mask, int x) const;

  // -1 for the empty mask, else the Littlestone dimension of the subset.
  int ld(const Bitset& mask);

  struct Split {
    int x = 0;
    Label y0 = 0, y1 = 1;
  };
  // Lex-lowest (x, y0, y1) achieving ld(mask) = 1 + min(ld both filters);
  // nullopt when ld(mask) <= 0.
  std::optional<Split> best_split(const Bitset& mask);

  const Bitset& value_mask(int x, Label y) const;

 private:
  HypothesisClass cls_;
  DimensionBudget budget_;
  std::vector<Bitset> value_masks_;  // indexed x * k + y
  std::unordered_map<Bitset, int, BitsetHash> memo_;
  std::uint64_t states_ = 0;
};

// Version counter for any class: mask-backed for explicit (or materializable)
// classes, otherwise the class generator's own counter.
std::unique_ptr<VersionCounter> make_version_counter(const HypothesisClass& cls,
                                                     const DimensionBudget& budget = {});

}  // namespace tol
