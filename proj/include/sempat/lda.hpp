#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sempat/matrix.hpp"

namespace sempat {

struct LdaConfig {
  size_t topics = 3;
  double alpha = 0.0;  // <= 0 means the 50/K default
  double beta = 0.1;
  size_t iterations = 2000;
  size_t burn_in = 500;
  std::uint64_t seed = 0;
};

struct LdaModel {
  size_t topics = 0;
  std::vector<std::string> terms;      // vocabulary, matrix row order
  std::vector<std::string> doc_names;  // matrix column order
  // posterior-mean estimates averaged over post-burn-in sweeps
  std::vector<std::vector<double>> phi;    // topics x V, rows sum to 1
  std::vector<std::vector<double>> theta;  // docs x topics, rows sum to 1
  // final-sweep state
  std::vector<std::vector<int>> z;          // per doc, per token topic
  std::vector<std::vector<long>> topic_term;  // topics x V counts
  std::vector<std::vector<long>> doc_topic;   // docs x topics counts
  std::vector<long> topic_total;              // per topic token count
  long total_tokens = 0;
  LdaConfig config;
};

// Collapsed Gibbs sampling over the matrix columns as documents. Token
// counts are conserved across sweeps (checked every sweep); a fixed seed
// reproduces the full assignment trajectory. Each document draws from its
// own seed stream, so document content, not sweep interleaving, determines
// its draws.
LdaModel fit_lda(const TermDocMatrix& m, const LdaConfig& config);

struct TopicReport {
  struct Entry {
    std::string term;
    double probability;
  };
  struct Topic {
    std::vector<Entry> terms;  // phi descending, ties lexicographic
    std::string label;         // optional, human-assigned
  };
  std::vector<Topic> topics;
};

TopicReport top_terms(const LdaModel& model, size_t n);

struct TopicCountCurve {
  std::vector<size_t> k_values;
  std::vector<double> wcss;
  size_t selected = 0;
};

// Interior k maximizing the second difference of the curve; ties go to the
// smallest interior k. Requires at least three k values.
size_t pick_elbow(const std::vector<size_t>& k_values, const std::vector<double>& wcss);

// WCSS elbow over k-means fits (L2-normalized document vectors) for each
// k in [k_min, k_max].
TopicCountCurve select_topic_count(const TermDocMatrix& m, size_t k_min, size_t k_max,
                                   std::uint64_t seed);

}  // namespace sempat
