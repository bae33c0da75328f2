#include "sempat/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "sempat/errors.hpp"

namespace sempat {

namespace {

// Neumaier compensated accumulator; keeps long dot products honest.
struct Accumulator {
  double sum = 0.0;
  double comp = 0.0;

  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }

  double value() const { return sum + comp; }
};

}  // namespace

TermDocMatrix TermDocMatrix::build(const std::vector<WordSet>& word_sets) {
  if (word_sets.empty()) throw std::invalid_argument("no word sets given");
  bool any_nonempty = false;
  std::map<std::string, int> vocab;  // term -> row index, lexicographic
  for (const auto& ws : word_sets) {
    if (!ws.empty()) any_nonempty = true;
    for (const auto& [w, c] : ws.counts) vocab.emplace(w, 0);
  }
  if (!any_nonempty) throw std::invalid_argument("all word sets are empty");

  TermDocMatrix m;
  m.terms_.reserve(vocab.size());
  for (auto& [w, idx] : vocab) {
    idx = int(m.terms_.size());
    m.terms_.push_back(w);
  }
  for (const auto& ws : word_sets) {
    m.set_names_.push_back(ws.name);
    std::vector<std::pair<int, int>> col;
    col.reserve(ws.counts.size());
    for (const auto& [w, c] : ws.counts) col.emplace_back(vocab.at(w), c);
    std::sort(col.begin(), col.end());
    m.cols_.push_back(std::move(col));
  }
  return m;
}

long long TermDocMatrix::column_total(size_t j) const {
  long long n = 0;
  for (const auto& [row, c] : cols_[j]) n += c;
  return n;
}

std::vector<double> TermDocMatrix::dense_column(size_t j) const {
  std::vector<double> v(terms_.size(), 0.0);
  for (const auto& [row, c] : cols_[j]) v[size_t(row)] = double(c);
  return v;
}

TermDocMatrix TermDocMatrix::select_columns(const std::vector<std::string>& names) const {
  std::vector<WordSet> subset;
  for (const auto& name : names) {
    auto it = std::find(set_names_.begin(), set_names_.end(), name);
    if (it == set_names_.end()) throw std::invalid_argument("unknown word set: " + name);
    const size_t j = size_t(it - set_names_.begin());
    WordSet ws;
    ws.name = name;
    for (const auto& [row, c] : cols_[j]) ws.counts[terms_[size_t(row)]] = c;
    subset.push_back(std::move(ws));
  }
  return build(subset);
}

void TermDocMatrix::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open output file: " + path);
  out << "terms=" << terms_.size() << " sets=" << set_names_.size() << "\n";
  for (size_t j = 0; j < cols_.size(); j++)
    for (const auto& [row, c] : cols_[j])
      out << terms_[size_t(row)] << "\t" << set_names_[j] << "\t" << c << "\n";
}

TermDocMatrix TermDocMatrix::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open matrix file: " + path);
  std::string header;
  if (!std::getline(in, header)) throw DataError("matrix file is empty: " + path);
  size_t n_terms = 0, n_sets = 0;
  if (std::sscanf(header.c_str(), "terms=%zu sets=%zu", &n_terms, &n_sets) != 2)
    throw DataError("bad matrix header in " + path + ": " + header);

  // Column order is the order of first appearance in the triplet stream.
  std::vector<WordSet> sets;
  std::map<std::string, size_t> by_name;
  std::string line;
  size_t lineno = 1;
  while (std::getline(in, line)) {
    lineno++;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto t1 = line.find('\t');
    const auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string::npos)
      throw DataError(path + ": malformed triplet at line " + std::to_string(lineno));
    const std::string term = line.substr(0, t1);
    const std::string set_name = line.substr(t1 + 1, t2 - t1 - 1);
    long count = 0;
    try {
      count = std::stol(line.substr(t2 + 1));
    } catch (const std::exception&) {
      throw DataError(path + ": bad count at line " + std::to_string(lineno));
    }
    if (term.empty() || set_name.empty() || count <= 0)
      throw DataError(path + ": bad triplet at line " + std::to_string(lineno));
    auto [it, inserted] = by_name.emplace(set_name, sets.size());
    if (inserted) {
      sets.push_back(WordSet{set_name, {}});
    }
    sets[it->second].counts[term] += int(count);
  }
  auto m = build(sets);
  if (m.term_count() != n_terms || m.set_count() != n_sets)
    throw DataError(path + ": header does not match triplet content");
  return m;
}

double cosine(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("cosine: dimension mismatch");
  if (a.empty()) throw std::invalid_argument("cosine: empty vectors");
  Accumulator dot, na, nb;
  for (size_t i = 0; i < a.size(); i++) {
    dot.add(a[i] * b[i]);
    na.add(a[i] * a[i]);
    nb.add(b[i] * b[i]);
  }
  const double norm_a = std::sqrt(na.value());
  const double norm_b = std::sqrt(nb.value());
  if (norm_a == 0.0 || norm_b == 0.0)
    throw std::domain_error("cosine: zero vector has no defined angle");
  return dot.value() / (norm_a * norm_b);
}

SimilarityMatrix similarity_matrix(const TermDocMatrix& m) {
  const size_t n = m.set_count();
  for (size_t j = 0; j < n; j++)
    if (m.column(j).empty())
      throw DataError("word set '" + m.set_names()[j] + "' has an all-zero column");

  SimilarityMatrix sim;
  sim.labels = m.set_names();
  sim.values.assign(n, std::vector<double>(n, 0.0));

  std::vector<double> norms(n, 0.0);
  for (size_t j = 0; j < n; j++) {
    Accumulator acc;
    for (const auto& [row, c] : m.column(j)) acc.add(double(c) * double(c));
    norms[j] = std::sqrt(acc.value());
  }
  for (size_t i = 0; i < n; i++) {
    sim.values[i][i] = 1.0;
    for (size_t j = i + 1; j < n; j++) {
      // sparse dot by ordered merge
      Accumulator dot;
      const auto& a = m.column(i);
      const auto& b = m.column(j);
      size_t p = 0, q = 0;
      while (p < a.size() && q < b.size()) {
        if (a[p].first < b[q].first) {
          p++;
        } else if (a[p].first > b[q].first) {
          q++;
        } else {
          dot.add(double(a[p].second) * double(b[q].second));
          p++;
          q++;
        }
      }
      const double v = dot.value() / (norms[i] * norms[j]);
      sim.values[i][j] = v;
      sim.values[j][i] = v;  // mirrored, not recomputed
    }
  }
  return sim;
}

}  // namespace sempat
