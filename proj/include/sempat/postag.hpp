#pragma once

#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sempat/corpus.hpp"
#include "sempat/text.hpp"

namespace sempat {

struct TaggedToken {
  std::string token;
  std::string tag;  // Penn Treebank symbol

  bool operator==(const TaggedToken&) const = default;
};

// Deterministic rule tagger: a bundled word -> most-frequent-tag table,
// then suffix rules (-ly RB, -ing VBG, -ed VBD, -ous/-ful/-able/-ible JJ),
// capitalized tokens away from position 0 become NNP, everything else NN.
// Output of an external statistical tagger can be substituted through the
// pre-tagged input format instead.
class Tagger {
 public:
  Tagger() = default;

  // TSV: word<TAB>tag, '#' comment lines ignored.
  static Tagger load(const std::string& path);

  std::vector<TaggedToken> tag(const std::vector<std::string>& tokens) const;
  size_t lexicon_size() const { return table_.size(); }

 private:
  std::unordered_map<std::string, std::string> table_;
};

// Tokens whose tag starts with JJ, RB or VB, in order, lowercased with
// leading hashtag/mention sigils stripped.
std::vector<std::string> filter_content_words(const std::vector<TaggedToken>& tagged);

// Multiset of stemmed content words distilled from one polarity subset.
struct WordSet {
  std::string name;
  std::map<std::string, int> counts;

  int total() const;
  bool empty() const { return counts.empty(); }
  void add(const std::string& word) { counts[word]++; }
};

// Per document: tokenize -> tag -> filter content words -> remove stop
// words -> stem, accumulated as a multiset. An empty result is allowed;
// the caller decides whether to warn.
WordSet build_word_set(const std::vector<TweetRecord>& docs, const std::string& name,
                       const StopList& stops, const Tagger& tagger);

// Same chain for documents that arrive already tagged.
WordSet build_word_set_pretagged(const std::vector<std::vector<TaggedToken>>& docs,
                                 const std::string& name, const StopList& stops);

// JSONL lines of the form {"tagged":[["take","VB"],["price","NN"],...]}.
std::vector<std::vector<TaggedToken>> read_pretagged_jsonl(const std::string& path,
                                                           size_t* skipped = nullptr);

// Plain text word-set file: one stemmed word per line, multiplicity expanded.
void write_word_set_file(const std::string& path, const WordSet& ws);
WordSet read_word_set_file(const std::string& path, const std::string& name);

}  // namespace sempat
