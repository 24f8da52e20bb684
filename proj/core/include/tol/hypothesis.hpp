#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "tol/bitset.hpp"
#include "tol/errors.hpp"

namespace tol {

using Label = int;

// Incremental tracker for the set of hypotheses consistent with the labels
// filtered in so far.  Explicit classes get a mask-backed implementation
// (see make_version_counter in dimensions.hpp); large implicit classes
// supply their own counting state so the full table is never materialized.
class VersionCounter {
 public:
  virtual ~VersionCounter() = default;
  virtual std::uint64_t size() const = 0;
  virtual std::vector<std::uint64_t> label_counts(int x) const = 0;
  virtual void filter(int x, Label y) = 0;
  virtual std::unique_ptr<VersionCounter> clone() const = 0;
  // Littlestone dimension of the surviving set; used by the SOA learner.
  virtual int littlestone_dim() const = 0;
  // Canonical state encoding, usable as a memo-table key.
  virtual std::string state_key() const = 0;
};

// A finite hypothesis class presented as a generator instead of a table.
class ImplicitClass {
 public:
  virtual ~ImplicitClass() = default;
  virtual int domain_size() const = 0;
  virtual int label_count() const = 0;
  virtual std::int64_t hypothesis_count() const = 0;
  virtual Label evaluate(std::int64_t h, int x) const = 0;
  virtual std::string name() const = 0;
  // Optional fast version-space tracker; null means "materialize instead".
  virtual std::unique_ptr<VersionCounter> make_counter() const { return nullptr; }
};

// A finite set of functions from a finite instance domain [0, m) to a finite
// label set [0, k).  Hypotheses are distinct as functions; duplicates are
// dropped at construction so halving-style cardinality arguments hold.
class HypothesisClass {
 public:
  HypothesisClass() = default;

  static HypothesisClass from_rows(int domain_size, int label_count,
                                   std::vector<std::vector<Label>> rows);
  static HypothesisClass from_generator(std::shared_ptr<const ImplicitClass> gen);

  int domain_size() const { return m_; }
  int label_count() const { return k_; }
  std::int64_t size() const;
  bool is_explicit() const { return gen_ == nullptr; }

  Label evaluate(std::int64_t h, int x) const;

  const std::vector<std::vector<Label>>& table() const;
  const ImplicitClass* generator() const { return gen_.get(); }

  // Explicit copy of this class; implicit classes are expanded row by row.
  HypothesisClass materialized(std::int64_t max_hypotheses = 1 << 20) const;

  // Class of restrictions to the given instances, deduplicated.  Instance j
  // of the result corresponds to instances[j] of this class.
  HypothesisClass restricted(const std::vector<int>& instances) const;

 private:
  int m_ = 0;
  int k_ = 2;
  std::vector<std::vector<Label>> rows_;
  std::shared_ptr<const ImplicitClass> gen_;
};

struct LabeledPair {
  int instance = 0;
  Label label = 0;
};
using LabeledSequence = std::vector<LabeledPair>;

// True iff some hypothesis is consistent with every pair.
bool is_realizable(const HypothesisClass& cls, const LabeledSequence& seq);

// Subset of an explicit class consistent with the pairs filtered so far.
// The mask is the canonical encoding.
class VersionSpace {
 public:
  static VersionSpace full(const HypothesisClass& cls);

  const HypothesisClass& cls() const { return *cls_; }
  std::int64_t size() const { return static_cast<std::int64_t>(mask_.count()); }
  bool empty() const { return mask_.none(); }
  bool contains(std::int64_t h) const { return mask_.test(static_cast<std::size_t>(h)); }
  const Bitset& mask() const { return mask_; }

  VersionSpace filtered(int x, Label y) const;
  void filter_in_place(int x, Label y);

  // count[b] = |{h in vs : h(x) = b}|; requires a nonempty version space.
  std::vector<std::int64_t> label_counts(int x) const;

  std::vector<std::int64_t> members() const;

 private:
  VersionSpace(const HypothesisClass* cls, Bitset mask) : cls_(cls), mask_(std::move(mask)) {}
  const HypothesisClass* cls_ = nullptr;
  Bitset mask_;
};

// "HYP v1" class file format.  Line 1: "HYP 1 <m> <k> <H>", then H rows of m
// space-separated labels.  The writer emits rows in lexicographic order; the
// parser rejects duplicate rows.
std::string write_hyp(const HypothesisClass& cls);
HypothesisClass parse_hyp(const std::string& text);
void save_hyp_file(const HypothesisClass& cls, const std::string& path);
HypothesisClass load_hyp_file(const std::string& path);

}  // namespace tol
