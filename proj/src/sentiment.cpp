#include "sempat/sentiment.hpp"

#include <fstream>

#include "sempat/errors.hpp"

namespace sempat {

namespace {

// One lowercase word per line; ';' comment lines and blanks skipped;
// duplicates within a file collapse silently.
std::unordered_set<std::string> load_word_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open lexicon file: " + path);
  std::unordered_set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == ';') continue;
    for (char& c : line)
      if (c >= 'A' && c <= 'Z') c = char(c - 'A' + 'a');
    words.insert(line);
  }
  return words;
}

}  // namespace

SentimentLexicon load_lexicon(const std::string& pos_path, const std::string& neg_path) {
  SentimentLexicon lex;
  lex.positive = load_word_file(pos_path);
  lex.negative = load_word_file(neg_path);
  for (const auto& w : lex.positive) {
    if (lex.negative.count(w))
      throw DataError("lexicon conflict: '" + w + "' is listed as both positive and negative");
  }
  return lex;
}

int score_tokens(const TokenList& tokens, const SentimentLexicon& lex) {
  int score = 0;
  for (const auto& t : tokens) {
    if (lex.positive.count(t)) {
      score++;
    } else if (lex.negative.count(t)) {
      score--;
    }
  }
  return score;
}

ScoredDoc score_document(const TweetRecord& record, const SentimentLexicon& lex) {
  ScoredDoc doc;
  doc.record = record;
  doc.tokens = tokenize(record.text);
  doc.score = score_tokens(doc.tokens, lex);
  doc.polarity = doc.score > 0   ? Polarity::kPositive
                 : doc.score < 0 ? Polarity::kNegative
                                 : Polarity::kNeutral;
  return doc;
}

PolaritySplit split_by_polarity(const std::vector<ScoredDoc>& docs) {
  PolaritySplit split;
  for (const auto& d : docs) {
    if (d.score > 0) {
      split.positive.push_back(d);
    } else if (d.score < 0) {
      split.negative.push_back(d);
    } else {
      split.discarded++;
    }
  }
  return split;
}

}  // namespace sempat
