#pragma once

#include <string>
#include <vector>

#include "sempat/kmeans.hpp"
#include "sempat/lda.hpp"
#include "sempat/matrix.hpp"

namespace sempat {

struct SentimentCounts {
  std::string name;  // keyword
  size_t positive = 0;
  size_t negative = 0;
  size_t discarded = 0;
};

// CSV with one row per keyword: name,positive,negative,discarded.
std::string sentiment_counts_csv(const std::vector<SentimentCounts>& counts);

// Lower-triangular CSV with labeled rows/columns, two decimals.
std::string similarity_csv(const SimilarityMatrix& sim);

// Full-precision sidecar for the two-decimal CSV.
std::string similarity_json(const SimilarityMatrix& sim);

// Assignments, per-cluster WCSS and the between/total ratio.
std::string kmeans_json(const KMeansModel& model);

// Ranked terms per topic for one fitted model.
std::string topics_json(const LdaModel& model, const TopicReport& report);

// Two-panel report: one fitted model per polarity group.
std::string topics_json_two_panel(const std::string& negative_panel,
                                  const std::string& positive_panel);

}  // namespace sempat
