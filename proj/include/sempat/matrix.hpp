#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sempat/postag.hpp"

namespace sempat {

// Sparse nonnegative integer counts, terms (rows, lexicographic) by word
// sets (columns, caller order). Rows with no nonzero entry are not stored.
class TermDocMatrix {
 public:
  // Vocabulary is the union of the word sets' supports. At least one set
  // must be non-empty; empty sets become all-zero columns.
  static TermDocMatrix build(const std::vector<WordSet>& word_sets);

  const std::vector<std::string>& terms() const { return terms_; }
  const std::vector<std::string>& set_names() const { return set_names_; }
  size_t term_count() const { return terms_.size(); }
  size_t set_count() const { return set_names_.size(); }

  // Sparse column: (row index, count), ordered by row index.
  const std::vector<std::pair<int, int>>& column(size_t j) const { return cols_[j]; }
  long long column_total(size_t j) const;
  std::vector<double> dense_column(size_t j) const;

  // Submatrix over the named columns (given order), vocabulary re-trimmed
  // to the rows that remain nonzero.
  TermDocMatrix select_columns(const std::vector<std::string>& names) const;

  // Text format: header "terms=<n> sets=<m>", then term<TAB>set<TAB>count
  // triplets in column-major order so the column order round-trips.
  void save(const std::string& path) const;
  static TermDocMatrix load(const std::string& path);

 private:
  std::vector<std::string> terms_;
  std::vector<std::string> set_names_;
  std::vector<std::vector<std::pair<int, int>>> cols_;
};

// Cosine of two equal-length nonnegative vectors per the usual inner
// product formula, evaluated in double precision with compensated
// accumulation. Zero vectors have no defined angle -> std::domain_error.
double cosine(std::span<const double> a, std::span<const double> b);

struct SimilarityMatrix {
  std::vector<std::string> labels;
  std::vector<std::vector<double>> values;  // symmetric, diagonal 1
};

// Pairwise column cosines; upper triangle computed once and mirrored.
// A zero column is reported by name as a DataError.
SimilarityMatrix similarity_matrix(const TermDocMatrix& m);

}  // namespace sempat
