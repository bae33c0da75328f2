#include "sempat/pipeline.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>

#include <json.hpp>

#include "sempat/errors.hpp"
#include "sempat/kmeans.hpp"
#include "sempat/lda.hpp"
#include "sempat/matrix.hpp"
#include "sempat/postag.hpp"
#include "sempat/report.hpp"
#include "sempat/sentiment.hpp"
#include "sempat/sha256.hpp"
#include "sempat/svg.hpp"

namespace fs = std::filesystem;

namespace sempat {

std::string slugify(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c >= 'A' && c <= 'Z') out.push_back(char(c - 'A' + 'a'));
    else if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')) out.push_back(c);
  }
  return out;
}

namespace {

struct Raw {
  nlohmann::json obj;
  fs::path base;  // config file directory, for resolving relative paths
  std::vector<std::string>* errors;

  bool has(const char* key) const { return obj.contains(key); }

  std::string path_field(const nlohmann::json& node, const std::string& name) {
    if (!node.is_string() || node.get<std::string>().empty()) {
      errors->push_back(name + " must be a non-empty path");
      return {};
    }
    fs::path p = node.get<std::string>();
    if (p.is_relative()) p = base / p;
    if (!fs::exists(p)) errors->push_back(name + ": path does not exist: " + p.string());
    return p.string();
  }

  std::uint64_t seed_field(const nlohmann::json& parent, const char* key) {
    if (!parent.contains(key)) {
      errors->push_back(std::string("seeds.") + key + " is required (seeds must be explicit)");
      return 0;
    }
    if (!parent[key].is_number_unsigned()) {
      errors->push_back(std::string("seeds.") + key + " must be an unsigned integer");
      return 0;
    }
    return parent[key].get<std::uint64_t>();
  }

  size_t count_field(const nlohmann::json& parent, const char* key, size_t fallback,
                     size_t min_value, const std::string& name) {
    if (!parent.contains(key)) return fallback;
    if (!parent[key].is_number_unsigned()) {
      errors->push_back(name + " must be an unsigned integer");
      return fallback;
    }
    const size_t v = parent[key].get<size_t>();
    if (v < min_value) {
      errors->push_back(name + " must be >= " + std::to_string(min_value));
      return fallback;
    }
    return v;
  }
};

}  // namespace

ConfigValidation validate_config(const std::string& path) {
  ConfigValidation out;
  std::ifstream in(path);
  if (!in) {
    out.errors.push_back("cannot open config file: " + path);
    return out;
  }
  nlohmann::json obj;
  try {
    obj = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    out.errors.push_back("config is not valid JSON: " + std::string(e.what()));
    return out;
  }
  if (!obj.is_object()) {
    out.errors.push_back("config root must be a JSON object");
    return out;
  }

  PipelineConfig cfg;
  Raw raw{obj, fs::path(path).parent_path(), &out.errors};

  if (!raw.has("input")) out.errors.push_back("input is required");
  else cfg.input = raw.path_field(obj["input"], "input");

  if (!raw.has("format")) {
    out.errors.push_back("format is required (jsonl or csv)");
  } else {
    const std::string f = obj["format"].is_string() ? obj["format"].get<std::string>() : "";
    if (f == "jsonl") cfg.format = RecordFormat::kJsonl;
    else if (f == "csv") cfg.format = RecordFormat::kCsv;
    else out.errors.push_back("format must be \"jsonl\" or \"csv\"");
  }

  if (!raw.has("keywords") || !obj["keywords"].is_array() || obj["keywords"].empty()) {
    out.errors.push_back("keywords must be a non-empty array of strings");
  } else {
    std::set<std::string> slugs;
    for (const auto& k : obj["keywords"]) {
      if (!k.is_string() || k.get<std::string>().empty()) {
        out.errors.push_back("keywords entries must be non-empty strings");
        continue;
      }
      const std::string keyword = k.get<std::string>();
      const std::string slug = slugify(keyword);
      if (slug.empty()) out.errors.push_back("keyword '" + keyword + "' has no alphanumeric characters");
      else if (!slugs.insert(slug).second)
        out.errors.push_back("keywords '" + keyword + "' collides with another keyword after slugging");
      cfg.keywords.push_back(keyword);
    }
  }

  if (!raw.has("lexicon") || !obj["lexicon"].is_object()) {
    out.errors.push_back("lexicon must be an object with positive and negative paths");
  } else {
    if (!obj["lexicon"].contains("positive")) out.errors.push_back("lexicon.positive is required");
    else cfg.lexicon_positive = raw.path_field(obj["lexicon"]["positive"], "lexicon.positive");
    if (!obj["lexicon"].contains("negative")) out.errors.push_back("lexicon.negative is required");
    else cfg.lexicon_negative = raw.path_field(obj["lexicon"]["negative"], "lexicon.negative");
  }

  if (!raw.has("stoplist")) out.errors.push_back("stoplist is required");
  else cfg.stoplist = raw.path_field(obj["stoplist"], "stoplist");

  if (!raw.has("tag_table")) out.errors.push_back("tag_table is required");
  else cfg.tag_table = raw.path_field(obj["tag_table"], "tag_table");

  cfg.sample_n = raw.count_field(obj, "sample_n", 500, 1, "sample_n");

  if (!raw.has("seeds") || !obj["seeds"].is_object()) {
    out.errors.push_back("seeds object with sample, kmeans and lda is required");
  } else {
    cfg.seeds.sample = raw.seed_field(obj["seeds"], "sample");
    cfg.seeds.kmeans = raw.seed_field(obj["seeds"], "kmeans");
    cfg.seeds.lda = raw.seed_field(obj["seeds"], "lda");
  }

  cfg.k_clusters = raw.count_field(obj, "k_clusters", 2, 2, "k_clusters");
  cfg.kmeans_restarts = raw.count_field(obj, "kmeans_restarts", 10, 1, "kmeans_restarts");
  cfg.kmeans_max_iter = raw.count_field(obj, "kmeans_max_iter", 100, 1, "kmeans_max_iter");
  if (raw.has("normalize")) {
    if (!obj["normalize"].is_boolean()) out.errors.push_back("normalize must be a boolean");
    else cfg.normalize = obj["normalize"].get<bool>();
  }

  if (raw.has("lda")) {
    if (!obj["lda"].is_object()) {
      out.errors.push_back("lda must be an object");
    } else {
      const auto& l = obj["lda"];
      cfg.lda.topics = raw.count_field(l, "topics", 0, 0, "lda.topics");
      cfg.lda.iterations = raw.count_field(l, "iterations", 2000, 1, "lda.iterations");
      cfg.lda.burn_in = raw.count_field(l, "burn_in", 500, 0, "lda.burn_in");
      cfg.lda.terms = raw.count_field(l, "terms", 10, 1, "lda.terms");
      cfg.lda.select_k_min = raw.count_field(l, "select_k_min", 1, 1, "lda.select_k_min");
      cfg.lda.select_k_max = raw.count_field(l, "select_k_max", 6, 1, "lda.select_k_max");
      if (l.contains("alpha")) {
        if (!l["alpha"].is_number()) out.errors.push_back("lda.alpha must be a number");
        else cfg.lda.alpha = l["alpha"].get<double>();
      }
      if (l.contains("beta")) {
        if (!l["beta"].is_number() || l["beta"].get<double>() <= 0.0)
          out.errors.push_back("lda.beta must be a positive number");
        else cfg.lda.beta = l["beta"].get<double>();
      }
      if (l.contains("doc_granularity")) {
        const std::string g =
            l["doc_granularity"].is_string() ? l["doc_granularity"].get<std::string>() : "";
        if (g != "wordset" && g != "tweet")
          out.errors.push_back("lda.doc_granularity must be \"wordset\" or \"tweet\"");
        else cfg.lda.doc_granularity = g;
      }
      if (cfg.lda.burn_in >= cfg.lda.iterations)
        out.errors.push_back("lda.burn_in must be smaller than lda.iterations");
      if (cfg.lda.select_k_max < cfg.lda.select_k_min + 2)
        out.errors.push_back("lda.select_k_max must be >= lda.select_k_min + 2");
    }
  }

  if (!raw.has("output_dir") || !obj["output_dir"].is_string() ||
      obj["output_dir"].get<std::string>().empty()) {
    out.errors.push_back("output_dir is required");
  } else {
    fs::path p = obj["output_dir"].get<std::string>();
    if (p.is_relative()) p = raw.base / p;
    cfg.output_dir = p.string();
  }

  if (out.errors.empty()) out.config = std::move(cfg);
  return out;
}

namespace {

[[noreturn]] void stage_fail(const std::string& stage, const std::string& what) {
  throw DataError("stage " + stage + ": " + what);
}

void warn(PipelineResult& result, const std::string& message) {
  result.warnings.push_back(message);
  std::cerr << "warning: " << message << "\n";
}

}  // namespace

PipelineResult run_pipeline(const PipelineConfig& cfg) {
  PipelineResult result;
  fs::create_directories(cfg.output_dir);
  result.output_dir = cfg.output_dir;
  const fs::path out_dir = cfg.output_dir;

  auto emit = [&](const std::string& name, const std::string& content) {
    write_text_file((out_dir / name).string(), content);
    result.artifact_hashes[name] = sha256_hex(content);
  };

  // ---- ingest ----------------------------------------------------------
  std::vector<TweetRecord> records;
  SentimentLexicon lexicon;
  StopList stops;
  Tagger tagger;
  try {
    auto parsed = parse_records_file(cfg.input, cfg.format);
    if (parsed.skipped > 0)
      warn(result, "ingest: skipped " + std::to_string(parsed.skipped) + " malformed record(s)");
    records = std::move(parsed.records);
    lexicon = load_lexicon(cfg.lexicon_positive, cfg.lexicon_negative);
    stops = StopList::load(cfg.stoplist);
    tagger = Tagger::load(cfg.tag_table);
  } catch (const std::exception& e) {
    stage_fail("ingest", e.what());
  }

  // ---- keyword split, sentiment, sampling, word sets -------------------
  const bool tweet_granularity = cfg.lda.doc_granularity == "tweet";
  std::vector<SentimentCounts> counts;
  std::vector<WordSet> word_sets_negative, word_sets_positive;
  std::vector<WordSet> doc_sets_negative, doc_sets_positive;  // tweet granularity only
  try {
    for (const auto& keyword : cfg.keywords) {
      const auto set = filter_by_keyword(records, keyword);
      std::vector<ScoredDoc> scored;
      scored.reserve(set.docs.size());
      for (const auto& rec : set.docs) scored.push_back(score_document(rec, lexicon));
      const auto split = split_by_polarity(scored);
      counts.push_back(SentimentCounts{keyword, split.positive.size(), split.negative.size(),
                                       split.discarded});

      const std::string slug = slugify(keyword);
      auto build_side = [&](const std::vector<ScoredDoc>& side, const char* polarity,
                            std::vector<WordSet>& sink, std::vector<WordSet>& doc_sink) {
        const std::string name = slug + "-" + polarity;
        if (side.empty()) {
          warn(result, "word set " + name + " is empty (no documents); excluded downstream");
          return;
        }
        auto sampled = sample_without_replacement(side, cfg.sample_n, cfg.seeds.sample);
        std::vector<TweetRecord> docs;
        docs.reserve(sampled.size());
        for (auto& sd : sampled) docs.push_back(sd.record);
        WordSet ws = build_word_set(docs, name, stops, tagger);
        if (ws.empty()) {
          warn(result, "word set " + name + " has no content words; excluded downstream");
          return;
        }
        if (tweet_granularity) {
          for (size_t i = 0; i < docs.size(); i++) {
            char suffix[16];
            std::snprintf(suffix, sizeof(suffix), "-%05zu", i);
            WordSet one = build_word_set({docs[i]}, name + suffix, stops, tagger);
            if (!one.empty()) doc_sink.push_back(std::move(one));
          }
        }
        sink.push_back(std::move(ws));
      };
      build_side(split.negative, "negative", word_sets_negative, doc_sets_negative);
      build_side(split.positive, "positive", word_sets_positive, doc_sets_positive);
    }
    emit("sentiment_counts.csv", sentiment_counts_csv(counts));
  } catch (const std::exception& e) {
    stage_fail("sentiment", e.what());
  }

  // word sets one..n are the negative sets, then the positive sets
  std::vector<WordSet> word_sets = word_sets_negative;
  word_sets.insert(word_sets.end(), word_sets_positive.begin(), word_sets_positive.end());

  // ---- term matrix and similarity --------------------------------------
  TermDocMatrix matrix;
  try {
    matrix = TermDocMatrix::build(word_sets);
    const auto sim = similarity_matrix(matrix);
    emit("similarity.csv", similarity_csv(sim));
    emit("similarity.json", similarity_json(sim));
    emit("similarity.svg", render_similarity_plot(sim));
  } catch (const std::exception& e) {
    stage_fail("similarity", e.what());
  }

  // ---- k-means ----------------------------------------------------------
  try {
    KMeansOptions opt;
    opt.k = cfg.k_clusters;
    opt.seed = cfg.seeds.kmeans;
    opt.restarts = cfg.kmeans_restarts;
    opt.max_iter = cfg.kmeans_max_iter;
    opt.normalize = cfg.normalize;
    const auto model = fit_kmeans(matrix, opt);
    emit("kmeans.json", kmeans_json(model));
    emit("silhouette.svg", render_silhouette_plot(silhouette(model, matrix), model));
  } catch (const std::exception& e) {
    stage_fail("cluster", e.what());
  }

  // ---- topic-count selection and LDA per polarity group -----------------
  try {
    auto group_names = [&](const std::vector<WordSet>& sets) {
      std::vector<std::string> names;
      for (const auto& ws : sets) names.push_back(ws.name);
      return names;
    };

    struct Panel {
      std::string json;
      ElbowSeries series;
      size_t selected = 0;
    };
    auto run_group = [&](const std::vector<WordSet>& sets,
                         const std::vector<WordSet>& doc_sets, const std::string& label) {
      if (sets.empty()) stage_fail("topics", "no " + label + " word sets survived");
      const TermDocMatrix group = tweet_granularity
                                      ? TermDocMatrix::build(doc_sets)
                                      : matrix.select_columns(group_names(sets));
      size_t k_max = cfg.lda.select_k_max;
      if (k_max > group.set_count()) {
        k_max = group.set_count();
        warn(result, "topics: clamped select_k_max to " + std::to_string(k_max) + " for " +
                         label + " group");
      }
      if (k_max < cfg.lda.select_k_min + 2)
        stage_fail("topics", label + " group has too few documents for the k range");
      const auto curve = select_topic_count(group, cfg.lda.select_k_min, k_max, cfg.seeds.lda);

      LdaConfig lc;
      lc.topics = cfg.lda.topics > 0 ? cfg.lda.topics : curve.selected;
      lc.alpha = cfg.lda.alpha;
      lc.beta = cfg.lda.beta;
      lc.iterations = cfg.lda.iterations;
      lc.burn_in = cfg.lda.burn_in;
      lc.seed = cfg.seeds.lda;
      const auto model = fit_lda(group, lc);
      size_t terms = cfg.lda.terms;
      if (terms > model.terms.size()) {
        terms = model.terms.size();
        warn(result, "topics: clamped terms to the " + label + " vocabulary size (" +
                         std::to_string(terms) + ")");
      }
      Panel panel;
      panel.json = topics_json(model, top_terms(model, terms));
      panel.series = ElbowSeries{label, curve.k_values, curve.wcss, curve.selected};
      panel.selected = curve.selected;
      return panel;
    };

    const Panel neg = run_group(word_sets_negative, doc_sets_negative, "negative");
    const Panel pos = run_group(word_sets_positive, doc_sets_positive, "positive");
    result.selected_k_negative = neg.selected;
    result.selected_k_positive = pos.selected;
    emit("topic_count.svg", render_elbow_plot({neg.series, pos.series}));
    emit("topics.json", topics_json_two_panel(neg.json, pos.json));
  } catch (const DataError&) {
    throw;
  } catch (const std::exception& e) {
    stage_fail("topics", e.what());
  }

  // ---- manifest ----------------------------------------------------------
  nlohmann::json manifest;
  manifest["tool"] = kToolVersion;
  manifest["seeds"] = {{"sample", cfg.seeds.sample},
                       {"kmeans", cfg.seeds.kmeans},
                       {"lda", cfg.seeds.lda}};
  nlohmann::json artifacts = nlohmann::json::array();
  for (const auto& [name, hash] : result.artifact_hashes)
    artifacts.push_back({{"path", name}, {"sha256", hash}});
  manifest["artifacts"] = std::move(artifacts);
  write_text_file((out_dir / "manifest.json").string(), manifest.dump(2) + "\n");
  return result;
}

}  // namespace sempat
