#include "tol/hypothesis.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace tol {

HypothesisClass HypothesisClass::from_rows(int domain_size, int label_count,
                                           std::vector<std::vector<Label>> rows) {
  TOL_REQUIRE(domain_size >= 1, "domain_size must be >= 1");
  TOL_REQUIRE(label_count >= 2, "label_count must be >= 2");
  TOL_REQUIRE(!rows.empty(), "a hypothesis class needs at least one hypothesis");

  std::set<std::vector<Label>> seen;
  std::vector<std::vector<Label>> dedup;
  dedup.reserve(rows.size());
  for (auto& row : rows) {
    TOL_REQUIRE(static_cast<int>(row.size()) == domain_size, "row length != domain_size");
    for (Label v : row) TOL_REQUIRE(v >= 0 && v < label_count, "label out of range");
    if (seen.insert(row).second) dedup.push_back(std::move(row));
  }

  HypothesisClass cls;
  cls.m_ = domain_size;
  cls.k_ = label_count;
  cls.rows_ = std::move(dedup);
  return cls;
}

HypothesisClass HypothesisClass::from_generator(std::shared_ptr<const ImplicitClass> gen) {
  TOL_REQUIRE(gen != nullptr, "null generator");
  TOL_REQUIRE(gen->hypothesis_count() >= 1, "generator must produce at least one hypothesis");
  HypothesisClass cls;
  cls.m_ = gen->domain_size();
  cls.k_ = gen->label_count();
  cls.gen_ = std::move(gen);
  return cls;
}

std::int64_t HypothesisClass::size() const {
  return gen_ ? gen_->hypothesis_count() : static_cast<std::int64_t>(rows_.size());
}

Label HypothesisClass::evaluate(std::int64_t h, int x) const {
  TOL_REQUIRE(h >= 0 && h < size(), "hypothesis index out of range");
  TOL_REQUIRE(x >= 0 && x < m_, "instance index out of range");
  return gen_ ? gen_->evaluate(h, x) : rows_[static_cast<std::size_t>(h)][static_cast<std::size_t>(x)];
}

const std::vector<std::vector<Label>>& HypothesisClass::table() const {
  TOL_REQUIRE(is_explicit(), "table() requires an explicit class; materialize first");
  return rows_;
}

HypothesisClass HypothesisClass::materialized(std::int64_t max_hypotheses) const {
  if (is_explicit()) return *this;
  if (size() > max_hypotheses)
    throw BudgetExceeded("materialization of '" + gen_->name() + "' exceeds budget",
                         static_cast<std::uint64_t>(size()));
  std::vector<std::vector<Label>> rows;
  rows.reserve(static_cast<std::size_t>(size()));
  for (std::int64_t h = 0; h < size(); ++h) {
    std::vector<Label> row(static_cast<std::size_t>(m_));
    for (int x = 0; x < m_; ++x) row[static_cast<std::size_t>(x)] = gen_->evaluate(h, x);
    rows.push_back(std::move(row));
  }
  return from_rows(m_, k_, std::move(rows));
}

HypothesisClass HypothesisClass::restricted(const std::vector<int>& instances) const {
  TOL_REQUIRE(!instances.empty(), "restriction needs at least one instance");
  for (int x : instances) TOL_REQUIRE(x >= 0 && x < m_, "instance index out of range");
  const HypothesisClass src = materialized();
  std::vector<std::vector<Label>> rows;
  rows.reserve(src.rows_.size());
  for (const auto& row : src.rows_) {
    std::vector<Label> r(instances.size());
    for (std::size_t j = 0; j < instances.size(); ++j)
      r[j] = row[static_cast<std::size_t>(instances[j])];
    rows.push_back(std::move(r));
  }
  return from_rows(static_cast<int>(instances.size()), k_, std::move(rows));
}

bool is_realizable(const HypothesisClass& cls, const LabeledSequence& seq) {
  for (const auto& p : seq) {
    TOL_REQUIRE(p.instance >= 0 && p.instance < cls.domain_size(), "instance index out of range");
    TOL_REQUIRE(p.label >= 0 && p.label < cls.label_count(), "label out of range");
  }
  const std::int64_t n = cls.size();
  for (std::int64_t h = 0; h < n; ++h) {
    bool ok = true;
    for (const auto& p : seq) {
      if (cls.evaluate(h, p.instance) != p.label) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

VersionSpace VersionSpace::full(const HypothesisClass& cls) {
  TOL_REQUIRE(cls.is_explicit(),
              "VersionSpace works on explicit classes; use the class's VersionCounter instead");
  return VersionSpace(&cls, Bitset(static_cast<std::size_t>(cls.size()), true));
}

VersionSpace VersionSpace::filtered(int x, Label y) const {
  VersionSpace out = *this;
  out.filter_in_place(x, y);
  return out;
}

void VersionSpace::filter_in_place(int x, Label y) {
  TOL_REQUIRE(x >= 0 && x < cls_->domain_size(), "instance index out of range");
  TOL_REQUIRE(y >= 0 && y < cls_->label_count(), "label out of range");
  const auto& rows = cls_->table();
  Bitset keep(mask_.universe());
  mask_.for_each_set([&](std::size_t h) {
    if (rows[h][static_cast<std::size_t>(x)] == y) keep.set(h);
  });
  mask_ = std::move(keep);
}

std::vector<std::int64_t> VersionSpace::label_counts(int x) const {
  TOL_REQUIRE(!empty(), "label_counts on an empty version space");
  TOL_REQUIRE(x >= 0 && x < cls_->domain_size(), "instance index out of range");
  std::vector<std::int64_t> counts(static_cast<std::size_t>(cls_->label_count()), 0);
  const auto& rows = cls_->table();
  mask_.for_each_set([&](std::size_t h) { ++counts[static_cast<std::size_t>(rows[h][static_cast<std::size_t>(x)])]; });
  return counts;
}

std::vector<std::int64_t> VersionSpace::members() const {
  std::vector<std::int64_t> out;
  mask_.for_each_set([&](std::size_t h) { out.push_back(static_cast<std::int64_t>(h)); });
  return out;
}

}  // namespace tol
