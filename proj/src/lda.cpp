// Collapsed Gibbs sampler following the standard derivation: Dirichlet
// parameters integrated out, token topics resampled one at a time from
//   p(z=k) ~ (n_dk + alpha) * (n_kw + beta) / (n_k + V*beta)
// with the current token excluded from all counts.

#include "sempat/lda.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sempat/kmeans.hpp"
#include "sempat/rng.hpp"

namespace sempat {

namespace {

struct Doc {
  std::vector<int> words;  // one entry per token, matrix counts expanded
};

void check_conservation(const std::vector<std::vector<long>>& topic_term,
                        const std::vector<std::vector<long>>& doc_topic,
                        const std::vector<long>& topic_total, long expected) {
  long a = 0, b = 0, c = 0;
  for (const auto& row : topic_term)
    for (long v : row) a += v;
  for (const auto& row : doc_topic)
    for (long v : row) b += v;
  for (long v : topic_total) c += v;
  if (a != expected || b != expected || c != expected)
    throw std::logic_error("lda: token count not conserved across a sweep");
}

}  // namespace

LdaModel fit_lda(const TermDocMatrix& m, const LdaConfig& config) {
  const size_t V = m.term_count();
  const size_t D = m.set_count();
  const size_t K = config.topics;
  if (K < 1) throw std::invalid_argument("topic count must be >= 1");
  if (config.burn_in >= config.iterations)
    throw std::invalid_argument("burn_in must be smaller than iterations");
  const double beta = config.beta;
  const double alpha = config.alpha > 0.0 ? config.alpha : 50.0 / double(K);
  if (beta <= 0.0) throw std::invalid_argument("beta must be > 0");

  std::vector<Doc> docs(D);
  long total_tokens = 0;
  for (size_t d = 0; d < D; d++) {
    for (const auto& [row, count] : m.column(d))
      for (int i = 0; i < count; i++) docs[d].words.push_back(row);
    total_tokens += long(docs[d].words.size());
  }
  if (total_tokens == 0) throw std::invalid_argument("matrix has no tokens");
  if (long(K) > total_tokens)
    throw std::invalid_argument("topic count exceeds the total token count");

  std::vector<std::vector<long>> topic_term(K, std::vector<long>(V, 0));
  std::vector<std::vector<long>> doc_topic(D, std::vector<long>(K, 0));
  std::vector<long> topic_total(K, 0);
  std::vector<std::vector<int>> z(D);

  // one RNG stream per document
  std::vector<Rng> streams;
  streams.reserve(D);
  for (size_t d = 0; d < D; d++) streams.emplace_back(derive_seed(config.seed, d));

  for (size_t d = 0; d < D; d++) {
    z[d].resize(docs[d].words.size());
    for (size_t i = 0; i < docs[d].words.size(); i++) {
      const int k = int(streams[d].below(K));
      z[d][i] = k;
      topic_term[size_t(k)][size_t(docs[d].words[i])]++;
      doc_topic[d][size_t(k)]++;
      topic_total[size_t(k)]++;
    }
  }

  std::vector<std::vector<double>> phi_sum(K, std::vector<double>(V, 0.0));
  std::vector<std::vector<double>> theta_sum(D, std::vector<double>(K, 0.0));
  size_t samples = 0;
  std::vector<double> p(K);

  for (size_t sweep = 1; sweep <= config.iterations; sweep++) {
    for (size_t d = 0; d < D; d++) {
      auto& rng = streams[d];
      for (size_t i = 0; i < docs[d].words.size(); i++) {
        const size_t w = size_t(docs[d].words[i]);
        const size_t old_k = size_t(z[d][i]);
        topic_term[old_k][w]--;
        doc_topic[d][old_k]--;
        topic_total[old_k]--;

        double total = 0.0;
        for (size_t k = 0; k < K; k++) {
          total += (double(doc_topic[d][k]) + alpha) * (double(topic_term[k][w]) + beta) /
                   (double(topic_total[k]) + double(V) * beta);
          p[k] = total;
        }
        const double r = rng.next_double() * total;
        size_t new_k = 0;
        while (new_k + 1 < K && p[new_k] < r) new_k++;

        z[d][i] = int(new_k);
        topic_term[new_k][w]++;
        doc_topic[d][new_k]++;
        topic_total[new_k]++;
      }
    }
    check_conservation(topic_term, doc_topic, topic_total, total_tokens);
    if (sweep > config.burn_in) {
      samples++;
      for (size_t k = 0; k < K; k++) {
        const double denom = double(topic_total[k]) + double(V) * beta;
        for (size_t w = 0; w < V; w++)
          phi_sum[k][w] += (double(topic_term[k][w]) + beta) / denom;
      }
      for (size_t d = 0; d < D; d++) {
        const double denom = double(docs[d].words.size()) + double(K) * alpha;
        for (size_t k = 0; k < K; k++)
          theta_sum[d][k] += (double(doc_topic[d][k]) + alpha) / denom;
      }
    }
  }

  LdaModel model;
  model.topics = K;
  model.terms = m.terms();
  model.doc_names = m.set_names();
  model.phi.assign(K, std::vector<double>(V, 0.0));
  model.theta.assign(D, std::vector<double>(K, 0.0));
  for (size_t k = 0; k < K; k++)
    for (size_t w = 0; w < V; w++) model.phi[k][w] = phi_sum[k][w] / double(samples);
  for (size_t d = 0; d < D; d++)
    for (size_t k = 0; k < K; k++) model.theta[d][k] = theta_sum[d][k] / double(samples);
  model.z = std::move(z);
  model.topic_term = std::move(topic_term);
  model.doc_topic = std::move(doc_topic);
  model.topic_total = std::move(topic_total);
  model.total_tokens = total_tokens;
  model.config = config;
  model.config.alpha = alpha;
  return model;
}

TopicReport top_terms(const LdaModel& model, size_t n) {
  if (n > model.terms.size())
    throw std::invalid_argument("requested more terms than the vocabulary holds");
  TopicReport report;
  for (size_t k = 0; k < model.topics; k++) {
    std::vector<size_t> order(model.terms.size());
    for (size_t i = 0; i < order.size(); i++) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      if (model.phi[k][a] != model.phi[k][b]) return model.phi[k][a] > model.phi[k][b];
      return model.terms[a] < model.terms[b];
    });
    TopicReport::Topic topic;
    for (size_t i = 0; i < n; i++)
      topic.terms.push_back({model.terms[order[i]], model.phi[k][order[i]]});
    report.topics.push_back(std::move(topic));
  }
  return report;
}

size_t pick_elbow(const std::vector<size_t>& k_values, const std::vector<double>& wcss) {
  if (k_values.size() != wcss.size() || k_values.size() < 3)
    throw std::invalid_argument("elbow needs at least three k values");
  size_t best = 1;
  double best_curv = -std::numeric_limits<double>::max();
  for (size_t i = 1; i + 1 < k_values.size(); i++) {
    const double curv = wcss[i - 1] - 2.0 * wcss[i] + wcss[i + 1];
    if (curv > best_curv + 1e-12) {
      best_curv = curv;
      best = i;
    }
  }
  return k_values[best];
}

TopicCountCurve select_topic_count(const TermDocMatrix& m, size_t k_min, size_t k_max,
                                   std::uint64_t seed) {
  if (k_min < 1) throw std::invalid_argument("k_min must be >= 1");
  if (k_max > m.set_count())
    throw std::invalid_argument("k_max exceeds the number of documents");
  if (k_max < k_min + 2)
    throw std::invalid_argument("k range needs an interior point (k_max >= k_min + 2)");

  const auto points = column_points(m, true);
  TopicCountCurve curve;
  for (size_t k = k_min; k <= k_max; k++) {
    KMeansOptions opt;
    opt.k = k;
    opt.seed = derive_seed(seed, k);
    opt.normalize = true;
    auto model = fit_kmeans_points(points, m.set_names(), opt);
    curve.k_values.push_back(k);
    curve.wcss.push_back(model.total_wcss);
  }
  curve.selected = pick_elbow(curve.k_values, curve.wcss);
  return curve;
}

}  // namespace sempat
