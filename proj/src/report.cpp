#include "sempat/report.hpp"

#include <cstdio>

#include <json.hpp>

namespace sempat {

namespace {

std::string fixed(double v, int prec) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.*f", prec, v);
  return buf;
}

// quote a CSV field only when needed (RFC 4180)
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out += "\"";
  return out;
}

}  // namespace

std::string sentiment_counts_csv(const std::vector<SentimentCounts>& counts) {
  std::string out = "name,positive,negative,discarded\n";
  for (const auto& c : counts) {
    out += csv_field(c.name) + "," + std::to_string(c.positive) + "," +
           std::to_string(c.negative) + "," + std::to_string(c.discarded) + "\n";
  }
  return out;
}

std::string similarity_csv(const SimilarityMatrix& sim) {
  std::string out = "set";
  for (const auto& l : sim.labels) out += "," + csv_field(l);
  out += "\n";
  for (size_t i = 0; i < sim.labels.size(); i++) {
    out += csv_field(sim.labels[i]);
    for (size_t j = 0; j <= i; j++) out += "," + fixed(sim.values[i][j], 2);
    out += "\n";
  }
  return out;
}

std::string similarity_json(const SimilarityMatrix& sim) {
  nlohmann::json obj;
  obj["labels"] = sim.labels;
  obj["values"] = sim.values;
  return obj.dump(2) + "\n";
}

std::string kmeans_json(const KMeansModel& model) {
  nlohmann::json obj;
  obj["k"] = model.k;
  obj["seed"] = model.seed;
  obj["normalized"] = model.normalized;
  obj["iterations"] = model.iterations;
  nlohmann::json assign = nlohmann::json::object();
  for (size_t i = 0; i < model.labels.size(); i++)
    assign[model.labels[i]] = model.assignments[i] + 1;  // clusters reported 1-based
  obj["assignments"] = std::move(assign);
  obj["wcss_per_cluster"] = model.wcss_per_cluster;
  obj["total_wcss"] = model.total_wcss;
  obj["between_over_total"] = model.between_over_total;
  return obj.dump(2) + "\n";
}

std::string topics_json(const LdaModel& model, const TopicReport& report) {
  nlohmann::json obj;
  obj["k"] = model.topics;
  obj["alpha"] = model.config.alpha;
  obj["beta"] = model.config.beta;
  obj["iterations"] = model.config.iterations;
  obj["burn_in"] = model.config.burn_in;
  obj["seed"] = model.config.seed;
  obj["documents"] = model.doc_names;
  nlohmann::json topics = nlohmann::json::array();
  for (size_t k = 0; k < report.topics.size(); k++) {
    nlohmann::json t;
    t["topic"] = k + 1;
    t["label"] = report.topics[k].label.empty() ? nlohmann::json(nullptr)
                                                : nlohmann::json(report.topics[k].label);
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& e : report.topics[k].terms)
      terms.push_back({{"term", e.term}, {"probability", e.probability}});
    t["terms"] = std::move(terms);
    topics.push_back(std::move(t));
  }
  obj["topics"] = std::move(topics);
  return obj.dump(2) + "\n";
}

std::string topics_json_two_panel(const std::string& negative_panel,
                                  const std::string& positive_panel) {
  nlohmann::json obj;
  obj["negative"] = nlohmann::json::parse(negative_panel);
  obj["positive"] = nlohmann::json::parse(positive_panel);
  return obj.dump(2) + "\n";
}

}  // namespace sempat
