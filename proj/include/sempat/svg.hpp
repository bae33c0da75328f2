#pragma once

#include <string>
#include <vector>

#include "sempat/kmeans.hpp"
#include "sempat/lda.hpp"
#include "sempat/matrix.hpp"

namespace sempat {

// All plots are plain SVG strings with fixed canvas sizes and fixed numeric
// precision, so identical inputs give identical bytes.

// Correlation-dot grid: one circle per word-set pair, radius scaled by the
// cosine value.
std::string render_similarity_plot(const SimilarityMatrix& sim);

// Horizontal silhouette bars grouped by cluster, widths in [-1, 1].
std::string render_silhouette_plot(const SilhouetteReport& report,
                                   const KMeansModel& model);

struct ElbowSeries {
  std::string label;
  std::vector<size_t> k_values;
  std::vector<double> wcss;
  size_t selected = 0;  // 0 = no marker
};

// WCSS-vs-k line plot, one polyline per series, selected k marked.
std::string render_elbow_plot(const std::vector<ElbowSeries>& series);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace sempat
