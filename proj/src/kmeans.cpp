#include "sempat/kmeans.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "sempat/errors.hpp"
#include "sempat/rng.hpp"

namespace sempat {

namespace {

double dist2(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); i++) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

// Greedy k-means++: each new center is drawn from the D^2 distribution
// several times and the candidate that lowers the total potential most is
// kept.
std::vector<size_t> kmeanspp_init(const std::vector<std::vector<double>>& pts, size_t k,
                                  Rng& rng) {
  const size_t n = pts.size();
  size_t local_trials = 2;
  for (size_t v = k; v > 1; v >>= 1) local_trials++;

  std::vector<size_t> centers;
  std::vector<bool> used(n, false);
  std::vector<double> d2(n, std::numeric_limits<double>::max());

  const size_t first = size_t(rng.below(n));
  centers.push_back(first);
  used[first] = true;
  for (size_t i = 0; i < n; i++) d2[i] = dist2(pts[i], pts[first]);

  while (centers.size() < k) {
    double total = 0.0;
    for (size_t i = 0; i < n; i++) total += d2[i];

    size_t next = n;
    if (total > 0.0) {
      double best_potential = std::numeric_limits<double>::max();
      for (size_t trial = 0; trial < local_trials; trial++) {
        const double r = rng.next_double() * total;
        double acc = 0.0;
        size_t candidate = n - 1;
        for (size_t i = 0; i < n; i++) {
          acc += d2[i];
          if (acc >= r) {
            candidate = i;
            break;
          }
        }
        double potential = 0.0;
        for (size_t i = 0; i < n; i++)
          potential += std::min(d2[i], dist2(pts[i], pts[candidate]));
        if (potential < best_potential) {
          best_potential = potential;
          next = candidate;
        }
      }
    } else {
      // all remaining points coincide with a center; take the first unused
      for (size_t i = 0; i < n; i++)
        if (!used[i]) {
          next = i;
          break;
        }
      if (next == n) next = size_t(rng.below(n));
    }
    centers.push_back(next);
    used[next] = true;
    for (size_t i = 0; i < n; i++) d2[i] = std::min(d2[i], dist2(pts[i], pts[next]));
  }
  return centers;
}

struct RunResult {
  std::vector<int> assign;
  std::vector<std::vector<double>> centroids;
  double total_wcss = 0.0;
  size_t iterations = 0;
};

RunResult lloyd_run(const std::vector<std::vector<double>>& pts, size_t k, std::uint64_t seed,
                    size_t max_iter) {
  const size_t n = pts.size();
  const size_t dim = pts[0].size();
  Rng rng(seed);

  std::vector<std::vector<double>> centroids;
  for (size_t c : kmeanspp_init(pts, k, rng)) centroids.push_back(pts[c]);

  std::vector<int> assign(n, -1);
  double prev_wcss = std::numeric_limits<double>::max();
  size_t iter = 0;

  while (iter < max_iter) {
    iter++;
    // assignment step; ties go to the lowest cluster index
    std::vector<int> next(n, 0);
    for (size_t i = 0; i < n; i++) {
      double best = std::numeric_limits<double>::max();
      int best_c = 0;
      for (size_t c = 0; c < k; c++) {
        const double d = dist2(pts[i], centroids[c]);
        if (d < best) {
          best = d;
          best_c = int(c);
        }
      }
      next[i] = best_c;
    }

    // empty-cluster repair: hand over the point farthest from its centroid
    std::vector<size_t> sizes(k, 0);
    for (int a : next) sizes[size_t(a)]++;
    for (size_t c = 0; c < k; c++) {
      if (sizes[c] > 0) continue;
      double worst = -1.0;
      size_t worst_i = n;
      for (size_t i = 0; i < n; i++) {
        if (sizes[size_t(next[i])] < 2) continue;
        const double d = dist2(pts[i], centroids[size_t(next[i])]);
        if (d > worst) {
          worst = d;
          worst_i = i;
        }
      }
      if (worst_i == n) break;  // fewer distinct points than clusters
      sizes[size_t(next[worst_i])]--;
      next[worst_i] = int(c);
      sizes[c] = 1;
    }

    const bool converged = (next == assign);
    assign = std::move(next);

    // update step
    centroids.assign(k, std::vector<double>(dim, 0.0));
    std::vector<size_t> count(k, 0);
    for (size_t i = 0; i < n; i++) {
      count[size_t(assign[i])]++;
      for (size_t d = 0; d < dim; d++) centroids[size_t(assign[i])][d] += pts[i][d];
    }
    for (size_t c = 0; c < k; c++) {
      if (count[c] == 0) continue;  // unreachable after repair unless n < k
      for (size_t d = 0; d < dim; d++) centroids[c][d] /= double(count[c]);
    }

    double wcss = 0.0;
    for (size_t i = 0; i < n; i++) wcss += dist2(pts[i], centroids[size_t(assign[i])]);

    // Lloyd's objective must not increase between iterations
    if (wcss > prev_wcss + 1e-9 * std::max(1.0, prev_wcss))
      throw std::logic_error("k-means: WCSS increased across an iteration");
    prev_wcss = wcss;

    if (converged) break;
  }

  // Single-point swap refinement on the converged solution (Hartigan-style):
  // moving x from cluster a (size na) to c (size nc) changes the objective by
  // nc/(nc+1) d2(x, mu_c) - na/(na-1) d2(x, mu_a); apply strictly improving
  // moves until none remain. Lloyd alone is stable against centroid updates
  // but not against these moves.
  {
    std::vector<size_t> sizes(k, 0);
    for (int a : assign) sizes[size_t(a)]++;
    bool improved = true;
    size_t guard = 0;
    while (improved && guard++ < 16 * n) {
      improved = false;
      for (size_t i = 0; i < n; i++) {
        const size_t a = size_t(assign[i]);
        if (sizes[a] <= 1) continue;  // a move would empty the cluster
        const double na = double(sizes[a]);
        const double out_gain = na / (na - 1.0) * dist2(pts[i], centroids[a]);
        double best_delta = -1e-12;
        size_t best_c = a;
        for (size_t c = 0; c < k; c++) {
          if (c == a) continue;
          const double nc = double(sizes[c]);
          const double delta = nc / (nc + 1.0) * dist2(pts[i], centroids[c]) - out_gain;
          if (delta < best_delta) {
            best_delta = delta;
            best_c = c;
          }
        }
        if (best_c == a) continue;
        for (size_t d = 0; d < dim; d++) {
          centroids[a][d] = (centroids[a][d] * double(sizes[a]) - pts[i][d]) /
                            double(sizes[a] - 1);
          centroids[best_c][d] = (centroids[best_c][d] * double(sizes[best_c]) + pts[i][d]) /
                                 double(sizes[best_c] + 1);
        }
        sizes[a]--;
        sizes[best_c]++;
        assign[i] = int(best_c);
        improved = true;
      }
    }
    // re-center and rescore; the refinement only ever lowered the objective
    centroids.assign(k, std::vector<double>(dim, 0.0));
    std::vector<size_t> count(k, 0);
    for (size_t i = 0; i < n; i++) {
      count[size_t(assign[i])]++;
      for (size_t d = 0; d < dim; d++) centroids[size_t(assign[i])][d] += pts[i][d];
    }
    for (size_t c = 0; c < k; c++)
      if (count[c] > 0)
        for (size_t d = 0; d < dim; d++) centroids[c][d] /= double(count[c]);
    double wcss = 0.0;
    for (size_t i = 0; i < n; i++) wcss += dist2(pts[i], centroids[size_t(assign[i])]);
    if (wcss > prev_wcss + 1e-9 * std::max(1.0, prev_wcss))
      throw std::logic_error("k-means: refinement increased the objective");
    prev_wcss = std::min(prev_wcss, wcss);
  }

  RunResult res;
  res.assign = std::move(assign);
  res.centroids = std::move(centroids);
  res.total_wcss = prev_wcss;
  res.iterations = iter;
  return res;
}

}  // namespace

std::vector<std::vector<double>> column_points(const TermDocMatrix& m, bool normalize) {
  std::vector<std::vector<double>> pts;
  pts.reserve(m.set_count());
  for (size_t j = 0; j < m.set_count(); j++) {
    auto v = m.dense_column(j);
    if (normalize) {
      double norm = 0.0;
      for (double x : v) norm += x * x;
      norm = std::sqrt(norm);
      if (norm == 0.0)
        throw DataError("word set '" + m.set_names()[j] + "' has an all-zero column");
      for (double& x : v) x /= norm;
    }
    pts.push_back(std::move(v));
  }
  return pts;
}

KMeansModel fit_kmeans_points(const std::vector<std::vector<double>>& points,
                              const std::vector<std::string>& labels,
                              const KMeansOptions& options) {
  const size_t n = points.size();
  if (options.k < 1) throw std::invalid_argument("k must be >= 1");
  if (options.k > n)
    throw std::invalid_argument("k exceeds the number of observations (" +
                                std::to_string(n) + ")");
  if (options.restarts < 1) throw std::invalid_argument("restarts must be >= 1");
  if (options.max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");

  RunResult best;
  bool have_best = false;
  for (size_t r = 0; r < options.restarts; r++) {
    RunResult run = lloyd_run(points, options.k, derive_seed(options.seed, r),
                              options.max_iter);
    if (!have_best || run.total_wcss < best.total_wcss) {
      best = std::move(run);
      have_best = true;
    }
  }

  KMeansModel model;
  model.k = options.k;
  model.labels = labels;
  model.assignments = best.assign;
  model.centroids = best.centroids;
  model.iterations = best.iterations;
  model.seed = options.seed;

  model.wcss_per_cluster.assign(options.k, 0.0);
  for (size_t i = 0; i < n; i++)
    model.wcss_per_cluster[size_t(best.assign[i])] +=
        dist2(points[i], best.centroids[size_t(best.assign[i])]);
  model.total_wcss = 0.0;
  for (double w : model.wcss_per_cluster) model.total_wcss += w;

  std::vector<double> mean(points[0].size(), 0.0);
  for (const auto& p : points)
    for (size_t d = 0; d < mean.size(); d++) mean[d] += p[d];
  for (double& x : mean) x /= double(n);
  double total_ss = 0.0;
  for (const auto& p : points) total_ss += dist2(p, mean);
  model.between_over_total = total_ss > 0.0 ? 1.0 - model.total_wcss / total_ss : 0.0;
  return model;
}

KMeansModel fit_kmeans(const TermDocMatrix& m, const KMeansOptions& options) {
  auto model = fit_kmeans_points(column_points(m, options.normalize), m.set_names(), options);
  model.normalized = options.normalize;
  return model;
}

namespace {

SilhouetteReport silhouette_impl(const KMeansModel& model,
                                 const std::vector<std::vector<double>>& pts) {
  const size_t n = pts.size();
  if (model.k < 2) throw std::invalid_argument("silhouette requires k >= 2");
  if (model.assignments.size() != n)
    throw std::invalid_argument("model does not match the given points");

  std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
  for (size_t i = 0; i < n; i++)
    for (size_t j = i + 1; j < n; j++)
      dist[i][j] = dist[j][i] = std::sqrt(dist2(pts[i], pts[j]));

  std::vector<size_t> sizes(model.k, 0);
  for (int a : model.assignments) sizes[size_t(a)]++;

  SilhouetteReport rep;
  rep.labels = model.labels;
  rep.widths.assign(n, 0.0);
  for (size_t i = 0; i < n; i++) {
    const size_t own = size_t(model.assignments[i]);
    if (sizes[own] <= 1) {
      rep.widths[i] = 0.0;  // singleton
      continue;
    }
    std::vector<double> sum(model.k, 0.0);
    for (size_t j = 0; j < n; j++)
      if (j != i) sum[size_t(model.assignments[j])] += dist[i][j];
    const double a = sum[own] / double(sizes[own] - 1);
    double b = std::numeric_limits<double>::max();
    for (size_t c = 0; c < model.k; c++) {
      if (c == own || sizes[c] == 0) continue;
      b = std::min(b, sum[c] / double(sizes[c]));
    }
    const double m = std::max(a, b);
    rep.widths[i] = m > 0.0 ? (b - a) / m : 0.0;
  }

  rep.cluster_means.assign(model.k, 0.0);
  for (size_t i = 0; i < n; i++)
    rep.cluster_means[size_t(model.assignments[i])] += rep.widths[i];
  for (size_t c = 0; c < model.k; c++)
    if (sizes[c] > 0) rep.cluster_means[c] /= double(sizes[c]);
  double total = 0.0;
  for (double w : rep.widths) total += w;
  rep.mean_width = n > 0 ? total / double(n) : 0.0;
  return rep;
}

}  // namespace

SilhouetteReport silhouette_points(const KMeansModel& model,
                                   const std::vector<std::vector<double>>& points) {
  return silhouette_impl(model, points);
}

SilhouetteReport silhouette(const KMeansModel& model, const TermDocMatrix& m) {
  return silhouette_impl(model, column_points(m, model.normalized));
}

}  // namespace sempat
