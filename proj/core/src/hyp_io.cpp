#include <algorithm>
#include <fstream>
#include <sstream>

#include "tol/hypothesis.hpp"

namespace tol {

namespace {

std::vector<long long> parse_int_line(const std::string& line, const char* where) {
  TOL_REQUIRE(!line.empty() && line.back() != ' ' && line.back() != '\t' && line.back() != '\r',
              std::string("HYP: trailing whitespace in ") + where);
  std::vector<long long> out;
  std::istringstream in(line);
  long long v;
  while (in >> v) out.push_back(v);
  TOL_REQUIRE(in.eof(), std::string("HYP: non-numeric token in ") + where);
  return out;
}

}  // namespace

std::string write_hyp(const HypothesisClass& cls) {
  const HypothesisClass ex = cls.materialized();
  std::vector<std::vector<Label>> rows = ex.table();
  std::sort(rows.begin(), rows.end());
  std::ostringstream out;
  out << "HYP 1 " << ex.domain_size() << ' ' << ex.label_count() << ' ' << rows.size() << '\n';
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << ' ';
      out << row[j];
    }
    out << '\n';
  }
  return out.str();
}

HypothesisClass parse_hyp(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  TOL_REQUIRE(std::getline(in, line), "HYP: empty input");
  std::istringstream header(line);
  std::string magic;
  int version = 0, m = 0, k = 0;
  long long count = 0;
  TOL_REQUIRE(static_cast<bool>(header >> magic >> version >> m >> k >> count) && magic == "HYP" &&
                  version == 1,
              "HYP: bad header (expected 'HYP 1 <m> <k> <H>')");
  TOL_REQUIRE(m >= 1 && k >= 2 && count >= 1, "HYP: header values out of range");

  std::vector<std::vector<Label>> rows;
  rows.reserve(static_cast<std::size_t>(count));
  for (long long r = 0; r < count; ++r) {
    TOL_REQUIRE(std::getline(in, line), "HYP: fewer rows than the header declares");
    const auto vals = parse_int_line(line, "row");
    TOL_REQUIRE(static_cast<int>(vals.size()) == m, "HYP: row length != m");
    std::vector<Label> row(vals.size());
    for (std::size_t j = 0; j < vals.size(); ++j) {
      TOL_REQUIRE(vals[j] >= 0 && vals[j] < k, "HYP: label out of range");
      row[j] = static_cast<Label>(vals[j]);
    }
    rows.push_back(std::move(row));
  }
  {
    auto sorted = rows;
    std::sort(sorted.begin(), sorted.end());
    TOL_REQUIRE(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
                "HYP: duplicate hypothesis rows");
  }
  return HypothesisClass::from_rows(m, k, std::move(rows));
}

void save_hyp_file(const HypothesisClass& cls, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  TOL_REQUIRE(out.good(), "cannot open file for writing: " + path);
  out << write_hyp(cls);
}

HypothesisClass load_hyp_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  TOL_REQUIRE(in.good(), "cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_hyp(buf.str());
}

}  // namespace tol
