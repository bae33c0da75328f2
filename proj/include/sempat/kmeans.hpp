#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sempat/matrix.hpp"

namespace sempat {

struct KMeansOptions {
  size_t k = 2;
  std::uint64_t seed = 0;
  size_t max_iter = 100;
  size_t restarts = 10;
  bool normalize = true;  // scale each column to unit L2 norm first
};

struct KMeansModel {
  size_t k = 0;
  std::vector<std::string> labels;             // column order of the matrix
  std::vector<int> assignments;                // per column, in [0, k)
  std::vector<std::vector<double>> centroids;  // k x dim
  std::vector<double> wcss_per_cluster;
  double total_wcss = 0.0;
  double between_over_total = 0.0;  // 1 - sum(WCSS) / total SS about the mean
  size_t iterations = 0;
  std::uint64_t seed = 0;
  bool normalized = true;
};

// Columns of the matrix as points, optionally L2-normalized.
std::vector<std::vector<double>> column_points(const TermDocMatrix& m, bool normalize);

// Lloyd's algorithm from k-means++ seeding, best of `restarts` runs by
// total WCSS, deterministic per (seed, restarts). The total WCSS is
// checked to be non-increasing across iterations on every run; an emptied
// cluster is repaired with the point farthest from its own centroid.
KMeansModel fit_kmeans(const TermDocMatrix& m, const KMeansOptions& options);

// Same algorithm over explicit points (used by topic-count selection and
// by oracle tests that construct raw instances).
KMeansModel fit_kmeans_points(const std::vector<std::vector<double>>& points,
                              const std::vector<std::string>& labels,
                              const KMeansOptions& options);

struct SilhouetteReport {
  std::vector<std::string> labels;
  std::vector<double> widths;         // per point, in [-1, 1]
  std::vector<double> cluster_means;  // per cluster
  double mean_width = 0.0;
};

// Standard silhouette widths with Euclidean distance on the same vectors
// the model was fit on. Requires k >= 2; singleton clusters get width 0.
SilhouetteReport silhouette(const KMeansModel& model, const TermDocMatrix& m);
SilhouetteReport silhouette_points(const KMeansModel& model,
                                   const std::vector<std::vector<double>>& points);

}  // namespace sempat
