#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sempat/corpus.hpp"

namespace sempat {

// Knobs for the synthetic polarity-labeled corpus that stands in for a
// live tweet collection. Every quantity is seeded; two runs with the same
// spec produce byte-identical output.
struct SynthSpec {
  size_t n_keywords = 6;
  size_t docs_per_set = 500;  // per (keyword, polarity)
  size_t vocab_size_per_polarity = 60;
  double overlap_fraction = 0.1;  // in [0, 1): shared across polarities
  size_t planted_topics = 3;
  size_t tokens_per_doc_min = 8;
  size_t tokens_per_doc_max = 16;
  double noise_rate = 0.05;  // chance a content slot emits an untagged junk token
  std::uint64_t seed = 1;

  static SynthSpec from_json_file(const std::string& path);
  void validate() const;  // throws std::invalid_argument
};

struct SynthTruth {
  std::vector<std::string> keywords;
  // per polarity: planted topic supports, surface and stemmed forms
  std::vector<std::vector<std::string>> positive_topics_surface;
  std::vector<std::vector<std::string>> negative_topics_surface;
  std::vector<std::vector<std::string>> positive_topics_stemmed;
  std::vector<std::vector<std::string>> negative_topics_stemmed;
  struct RecordTruth {
    std::string user_id;
    std::string keyword;
    std::string polarity;  // "positive" | "negative"
    size_t topic = 0;
  };
  std::vector<RecordTruth> records;

  std::string to_json() const;  // pretty, deterministic
};

struct SynthCorpus {
  std::vector<TweetRecord> records;
  SynthTruth truth;
};

// Text of every record embeds its keyword, 2-4 polarity words drawn from a
// fixed pool that is a subset of the bundled opinion lexicon, and content
// words from the record's planted topic. Suffixes on the generated content
// words force adjective/adverb/verb tags so the words survive the
// part-of-speech filter.
SynthCorpus generate_corpus(const SynthSpec& spec);

// The compiled-in polarity pools (exposed so tests can assert they are a
// subset of the bundled lexicon files).
const std::vector<std::string>& synth_positive_pool();
const std::vector<std::string>& synth_negative_pool();

}  // namespace sempat
