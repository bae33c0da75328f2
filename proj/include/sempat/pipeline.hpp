#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sempat/corpus.hpp"

namespace sempat {

inline constexpr const char* kToolVersion = "sempat 0.1.0";

struct LdaSettings {
  size_t topics = 0;  // 0 = use the per-polarity selected count
  double alpha = 0.0;  // <= 0 = 50/K
  double beta = 0.1;
  size_t iterations = 2000;
  size_t burn_in = 500;
  size_t terms = 10;
  size_t select_k_min = 1;
  size_t select_k_max = 6;
  std::string doc_granularity = "wordset";  // or "tweet"
};

struct PipelineSeeds {
  std::uint64_t sample = 0;
  std::uint64_t kmeans = 0;
  std::uint64_t lda = 0;
};

struct PipelineConfig {
  std::string input;
  RecordFormat format = RecordFormat::kJsonl;
  std::vector<std::string> keywords;
  std::string lexicon_positive;
  std::string lexicon_negative;
  std::string stoplist;
  std::string tag_table;
  size_t sample_n = 500;
  PipelineSeeds seeds;
  size_t k_clusters = 2;
  size_t kmeans_restarts = 10;
  size_t kmeans_max_iter = 100;
  bool normalize = true;
  LdaSettings lda;
  std::string output_dir;
};

struct ConfigValidation {
  std::optional<PipelineConfig> config;  // set only when errors is empty
  std::vector<std::string> errors;       // every problem, not just the first
};

// Reads and validates a JSON config. Relative paths inside the config are
// resolved against the config file's directory. All errors are collected.
ConfigValidation validate_config(const std::string& path);

struct PipelineResult {
  std::string output_dir;
  std::map<std::string, std::string> artifact_hashes;  // name -> sha256
  std::vector<std::string> warnings;
  size_t selected_k_negative = 0;
  size_t selected_k_positive = 0;
};

// Runs ingest -> keyword split -> sentiment split -> sample -> POS filter
// -> word sets -> term matrix -> similarity -> k-means -> topic-count
// selection -> LDA per polarity, writing every report artifact plus a
// manifest (paths, content hashes, seeds, tool version) to output_dir.
// A stage failure throws with the stage name; artifacts already written
// stay on disk.
PipelineResult run_pipeline(const PipelineConfig& config);

// "Best Buy" -> "bestbuy"; used for word-set labels and artifact naming.
std::string slugify(const std::string& s);

}  // namespace sempat
