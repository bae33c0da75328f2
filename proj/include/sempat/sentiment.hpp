#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "sempat/corpus.hpp"
#include "sempat/rng.hpp"
#include "sempat/text.hpp"

namespace sempat {

// Paired positive/negative opinion word lists. The two sets are disjoint;
// a word present in both files is a load error.
struct SentimentLexicon {
  std::unordered_set<std::string> positive;
  std::unordered_set<std::string> negative;
};

// Plain text, one word per line; lines starting with ';' and blank lines
// are ignored (the convention of the published opinion-lexicon files).
SentimentLexicon load_lexicon(const std::string& pos_path, const std::string& neg_path);

enum class Polarity { kPositive, kNegative, kNeutral };

struct ScoredDoc {
  TweetRecord record;
  TokenList tokens;  // normalized, unstemmed
  int score = 0;
  Polarity polarity = Polarity::kNeutral;
};

// positive occurrences minus negative occurrences; every occurrence counts.
int score_tokens(const TokenList& tokens, const SentimentLexicon& lex);

ScoredDoc score_document(const TweetRecord& record, const SentimentLexicon& lex);

struct PolaritySplit {
  std::vector<ScoredDoc> positive;
  std::vector<ScoredDoc> negative;
  size_t discarded = 0;  // neutral documents
};

// Partitions scored docs by sign; zero-score docs are discarded and counted.
// Input order is preserved within each side.
PolaritySplit split_by_polarity(const std::vector<ScoredDoc>& docs);

// Uniform sample without replacement of size n (everything if the input is
// at most n), deterministic per (seed, input order); original relative
// order is preserved. n must be >= 1.
template <typename T>
std::vector<T> sample_without_replacement(const std::vector<T>& docs, size_t n,
                                          std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample size must be >= 1");
  if (docs.size() <= n) return docs;
  std::vector<size_t> idx(docs.size());
  for (size_t i = 0; i < idx.size(); i++) idx[i] = i;
  Rng rng(seed);
  for (size_t i = 0; i < n; i++) {  // partial Fisher-Yates
    const size_t j = i + size_t(rng.below(idx.size() - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(n);
  std::sort(idx.begin(), idx.end());
  std::vector<T> out;
  out.reserve(n);
  for (size_t i : idx) out.push_back(docs[i]);
  return out;
}

}  // namespace sempat
