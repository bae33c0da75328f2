// Command-line front end. Subcommands mirror the pipeline stages so each
// stage can be run and inspected on its own; `pipeline` chains them from a
// single JSON config. Exit codes: 0 success, 1 usage error, 2 data error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sempat/corpus.hpp"
#include "sempat/errors.hpp"
#include "sempat/kmeans.hpp"
#include "sempat/lda.hpp"
#include "sempat/matrix.hpp"
#include "sempat/pipeline.hpp"
#include "sempat/porter.hpp"
#include "sempat/postag.hpp"
#include "sempat/report.hpp"
#include "sempat/sentiment.hpp"
#include "sempat/svg.hpp"
#include "sempat/synth.hpp"

namespace fs = std::filesystem;
using namespace sempat;

namespace {

RecordFormat parse_format(const std::string& f) {
  if (f == "jsonl") return RecordFormat::kJsonl;
  if (f == "csv") return RecordFormat::kCsv;
  throw std::invalid_argument("format must be jsonl or csv");
}

int run_synth(const std::string& spec_path, const std::string& out_path,
              const std::string& truth_path) {
  const SynthSpec spec = SynthSpec::from_json_file(spec_path);
  const SynthCorpus corpus = generate_corpus(spec);
  write_records_jsonl_file(out_path, corpus.records);
  write_text_file(truth_path, corpus.truth.to_json());
  std::cout << "wrote " << corpus.records.size() << " records to " << out_path << "\n";
  return 0;
}

int run_ingest(const std::string& input, const std::string& format,
               const std::string& keyword, const std::string& out) {
  const auto parsed = parse_records_file(input, parse_format(format));
  if (parsed.skipped > 0)
    std::cerr << "warning: skipped " << parsed.skipped << " malformed record(s)\n";
  const auto set = filter_by_keyword(parsed.records, keyword);
  write_records_jsonl_file(out, set.docs);
  std::cout << "matched " << set.docs.size() << " of " << parsed.records.size()
            << " records for keyword \"" << keyword << "\"\n";
  return 0;
}

int run_preprocess(const std::string& input, const std::string& stoplist_path, bool no_stem,
                   const std::string& out_path) {
  const auto parsed = parse_records_file(input, RecordFormat::kJsonl);
  if (parsed.skipped > 0)
    std::cerr << "warning: skipped " << parsed.skipped << " malformed record(s)\n";
  const StopList stops = StopList::load(stoplist_path);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw DataError("cannot open output file: " + out_path);
  for (const auto& rec : parsed.records) {
    auto tokens = remove_stopwords(tokenize(rec.text), stops);
    if (!no_stem)
      for (auto& t : tokens) t = porter_stem(t);
    nlohmann::json obj{
        {"date", rec.date.to_string()}, {"user_id", rec.user_id}, {"tokens", tokens}};
    out << obj.dump() << "\n";
  }
  return 0;
}

int run_sentiment(const std::string& input, const std::string& pos_path,
                  const std::string& neg_path, size_t sample_n, std::uint64_t seed,
                  const std::string& out_pos, const std::string& out_neg,
                  const std::string& counts_path, const std::string& name) {
  const auto parsed = parse_records_file(input, RecordFormat::kJsonl);
  if (parsed.skipped > 0)
    std::cerr << "warning: skipped " << parsed.skipped << " malformed record(s)\n";
  const auto lexicon = load_lexicon(pos_path, neg_path);
  std::vector<ScoredDoc> scored;
  scored.reserve(parsed.records.size());
  for (const auto& rec : parsed.records) scored.push_back(score_document(rec, lexicon));
  const auto split = split_by_polarity(scored);

  auto emit_side = [&](const std::vector<ScoredDoc>& side, const std::string& path) {
    const auto sampled = sample_without_replacement(side, sample_n, seed);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open output file: " + path);
    for (const auto& sd : sampled) {
      nlohmann::json obj{{"date", sd.record.date.to_string()},
                         {"user_id", sd.record.user_id},
                         {"text", sd.record.text},
                         {"score", sd.score}};
      out << obj.dump() << "\n";
    }
  };
  emit_side(split.positive, out_pos);
  emit_side(split.negative, out_neg);

  const std::string label = name.empty() ? fs::path(input).stem().string() : name;
  const std::string csv = sentiment_counts_csv(
      {SentimentCounts{label, split.positive.size(), split.negative.size(), split.discarded}});
  if (counts_path.empty()) {
    std::cout << csv;
  } else {
    write_text_file(counts_path, csv);
  }
  return 0;
}

int run_posfilter(const std::string& input, const std::string& name,
                  const std::string& out_path, const std::string& stoplist_path,
                  const std::string& tag_table_path) {
  StopList stops;
  if (!stoplist_path.empty()) stops = StopList::load(stoplist_path);

  // peek at the first record to recognize pre-tagged input
  bool pretagged = false;
  {
    std::ifstream probe(input);
    if (!probe) throw DataError("cannot open input file: " + input);
    std::string line;
    while (std::getline(probe, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      const auto obj = nlohmann::json::parse(line, nullptr, false);
      pretagged = obj.is_object() && obj.contains("tagged");
      break;
    }
  }

  WordSet ws;
  if (pretagged) {
    size_t skipped = 0;
    const auto docs = read_pretagged_jsonl(input, &skipped);
    if (skipped > 0) std::cerr << "warning: skipped " << skipped << " malformed line(s)\n";
    ws = build_word_set_pretagged(docs, name, stops);
  } else {
    if (tag_table_path.empty())
      throw std::invalid_argument("--tag-table is required unless the input is pre-tagged");
    const Tagger tagger = Tagger::load(tag_table_path);
    const auto parsed = parse_records_file(input, RecordFormat::kJsonl);
    if (parsed.skipped > 0)
      std::cerr << "warning: skipped " << parsed.skipped << " malformed record(s)\n";
    ws = build_word_set(parsed.records, name, stops, tagger);
  }
  if (ws.empty()) std::cerr << "warning: word set " << name << " is empty\n";
  write_word_set_file(out_path, ws);
  std::cout << "word set " << name << ": " << ws.total() << " tokens, " << ws.counts.size()
            << " distinct stems\n";
  return 0;
}

int run_matrix(const std::vector<std::string>& wordset_paths, const std::string& out_path) {
  std::vector<WordSet> sets;
  for (const auto& p : wordset_paths)
    sets.push_back(read_word_set_file(p, fs::path(p).stem().string()));
  const auto matrix = TermDocMatrix::build(sets);
  matrix.save(out_path);
  std::cout << "matrix: " << matrix.term_count() << " terms x " << matrix.set_count()
            << " sets\n";
  return 0;
}

int run_similarity(const std::string& matrix_path, const std::string& out_csv,
                   const std::string& out_svg, std::string out_json) {
  const auto matrix = TermDocMatrix::load(matrix_path);
  const auto sim = similarity_matrix(matrix);
  write_text_file(out_csv, similarity_csv(sim));
  if (out_json.empty()) out_json = fs::path(out_csv).replace_extension(".json").string();
  write_text_file(out_json, similarity_json(sim));
  if (!out_svg.empty()) write_text_file(out_svg, render_similarity_plot(sim));
  return 0;
}

int run_cluster(const std::string& matrix_path, size_t k, std::uint64_t seed, size_t restarts,
                size_t max_iter, bool no_normalize, const std::string& out_json,
                const std::string& out_svg) {
  const auto matrix = TermDocMatrix::load(matrix_path);
  KMeansOptions opt;
  opt.k = k;
  opt.seed = seed;
  opt.restarts = restarts;
  opt.max_iter = max_iter;
  opt.normalize = !no_normalize;
  const auto model = fit_kmeans(matrix, opt);
  write_text_file(out_json, kmeans_json(model));
  if (!out_svg.empty()) {
    if (k < 2) throw std::invalid_argument("silhouette plot requires --k >= 2");
    write_text_file(out_svg, render_silhouette_plot(silhouette(model, matrix), model));
  }
  std::cout << "total WCSS " << model.total_wcss << ", between/total "
            << model.between_over_total << "\n";
  return 0;
}

int run_topics(const std::string& matrix_path, size_t k, const std::string& select_range,
               double alpha, double beta, size_t iters, size_t burnin, std::uint64_t seed,
               size_t n_terms, const std::string& out_json, const std::string& out_svg) {
  const auto matrix = TermDocMatrix::load(matrix_path);
  size_t fit_k = k;
  TopicCountCurve curve;
  bool selected = false;
  if (!select_range.empty()) {
    const auto dots = select_range.find("..");
    if (dots == std::string::npos)
      throw std::invalid_argument("--select-k expects a range like 1..8");
    const size_t k_min = std::stoul(select_range.substr(0, dots));
    const size_t k_max = std::stoul(select_range.substr(dots + 2));
    curve = select_topic_count(matrix, k_min, k_max, seed);
    fit_k = curve.selected;
    selected = true;
    std::cout << "selected k = " << fit_k << "\n";
  }
  if (fit_k == 0) throw std::invalid_argument("give --k or --select-k");

  LdaConfig cfg;
  cfg.topics = fit_k;
  cfg.alpha = alpha;
  cfg.beta = beta;
  cfg.iterations = iters;
  cfg.burn_in = burnin;
  cfg.seed = seed;
  const auto model = fit_lda(matrix, cfg);
  write_text_file(out_json, topics_json(model, top_terms(model, std::min(n_terms, model.terms.size()))));
  if (!out_svg.empty()) {
    if (!selected) throw std::invalid_argument("--out-svg needs --select-k (it plots the WCSS curve)");
    write_text_file(out_svg,
                    render_elbow_plot({ElbowSeries{"wcss", curve.k_values, curve.wcss,
                                                   curve.selected}}));
  }
  return 0;
}

int run_pipeline_cmd(const std::string& config_path) {
  const auto validation = validate_config(config_path);
  if (!validation.errors.empty()) {
    std::cerr << "config errors:\n";
    for (const auto& e : validation.errors) std::cerr << "  - " << e << "\n";
    return 2;
  }
  const auto result = run_pipeline(*validation.config);
  std::cout << "pipeline complete: " << result.artifact_hashes.size()
            << " artifacts + manifest in " << result.output_dir << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semantic pattern analysis for polarity-labeled text corpora"};
  app.require_subcommand(1);

  // synth
  std::string sy_spec, sy_out, sy_truth;
  auto* synth = app.add_subcommand("synth", "generate a synthetic labeled corpus");
  synth->add_option("--spec", sy_spec, "synth spec JSON")->required();
  synth->add_option("--out", sy_out, "output records JSONL")->required();
  synth->add_option("--truth", sy_truth, "ground-truth sidecar JSON")->required();

  // ingest
  std::string in_input, in_format = "jsonl", in_keyword, in_out;
  auto* ingest = app.add_subcommand("ingest", "parse records and filter by keyword");
  ingest->add_option("--input", in_input)->required();
  ingest->add_option("--format", in_format, "jsonl or csv");
  ingest->add_option("--keyword", in_keyword)->required();
  ingest->add_option("--out", in_out, "matched records JSONL")->required();

  // preprocess
  std::string pp_input, pp_stoplist, pp_out;
  bool pp_no_stem = false;
  auto* preprocess = app.add_subcommand("preprocess", "tokenize, drop stop words, stem");
  preprocess->add_option("--input", pp_input)->required();
  preprocess->add_option("--stoplist", pp_stoplist)->required();
  preprocess->add_flag("--no-stem", pp_no_stem, "keep unstemmed tokens");
  preprocess->add_option("--out", pp_out, "tokens JSONL")->required();

  // sentiment
  std::string se_input, se_pos, se_neg, se_out_pos, se_out_neg, se_counts, se_name;
  size_t se_sample = 500;
  std::uint64_t se_seed = 0;
  auto* sentiment = app.add_subcommand("sentiment", "score and split by polarity, then sample");
  sentiment->add_option("--input", se_input)->required();
  sentiment->add_option("--pos", se_pos, "positive lexicon file")->required();
  sentiment->add_option("--neg", se_neg, "negative lexicon file")->required();
  sentiment->add_option("--sample", se_sample, "sample size per polarity");
  sentiment->add_option("--seed", se_seed, "sampling seed")->required();
  sentiment->add_option("--out-pos", se_out_pos)->required();
  sentiment->add_option("--out-neg", se_out_neg)->required();
  sentiment->add_option("--counts", se_counts, "counts CSV path (default: stdout)");
  sentiment->add_option("--name", se_name, "label for the counts row");

  // posfilter
  std::string pf_input, pf_name, pf_out, pf_stoplist, pf_tagtable;
  auto* posfilter = app.add_subcommand("posfilter",
                                       "keep adjectives/adverbs/verbs, stem, emit a word set");
  posfilter->add_option("--input", pf_input, "records JSONL or pre-tagged JSONL")->required();
  posfilter->add_option("--name", pf_name, "word-set label")->required();
  posfilter->add_option("--out", pf_out, "word-set file")->required();
  posfilter->add_option("--stoplist", pf_stoplist, "stop list (omit to keep everything)");
  posfilter->add_option("--tag-table", pf_tagtable, "word->tag TSV for the built-in tagger");

  // matrix
  std::vector<std::string> mx_wordsets;
  std::string mx_out;
  auto* matrix = app.add_subcommand("matrix", "build the term/word-set count matrix");
  matrix->add_option("--wordset", mx_wordsets, "word-set file (repeatable, column order)")
      ->required()
      ->expected(-1);
  matrix->add_option("--out", mx_out, "sparse matrix file")->required();

  // similarity
  std::string si_matrix, si_csv, si_svg, si_json;
  auto* similarity = app.add_subcommand("similarity", "pairwise cosine of word-set columns");
  similarity->add_option("--matrix", si_matrix)->required();
  similarity->add_option("--out-csv", si_csv)->required();
  similarity->add_option("--out-svg", si_svg, "correlation-dot plot");
  similarity->add_option("--out-json", si_json, "full-precision sidecar (default: csv path with .json)");

  // cluster
  std::string cl_matrix, cl_json, cl_svg;
  size_t cl_k = 2, cl_restarts = 10, cl_max_iter = 100;
  std::uint64_t cl_seed = 0;
  bool cl_no_normalize = false;
  auto* cluster = app.add_subcommand("cluster", "k-means over word-set columns");
  cluster->add_option("--matrix", cl_matrix)->required();
  cluster->add_option("--k", cl_k, "cluster count");
  cluster->add_option("--seed", cl_seed)->required();
  cluster->add_option("--restarts", cl_restarts);
  cluster->add_option("--max-iter", cl_max_iter);
  cluster->add_flag("--no-normalize", cl_no_normalize, "cluster raw counts instead of unit columns");
  cluster->add_option("--out-json", cl_json)->required();
  cluster->add_option("--out-svg", cl_svg, "silhouette plot");

  // topics
  std::string to_matrix, to_select, to_json, to_svg;
  size_t to_k = 0, to_iters = 2000, to_burnin = 500, to_terms = 10;
  double to_alpha = 0.0, to_beta = 0.1;
  std::uint64_t to_seed = 0;
  auto* topics = app.add_subcommand("topics", "fit LDA; optionally select k by WCSS elbow");
  topics->add_option("--matrix", to_matrix)->required();
  topics->add_option("--k", to_k, "topic count");
  topics->add_option("--select-k", to_select, "range like 1..8; overrides --k");
  topics->add_option("--alpha", to_alpha, "document-topic prior (default 50/k)");
  topics->add_option("--beta", to_beta, "topic-term prior");
  topics->add_option("--iters", to_iters, "Gibbs sweeps");
  topics->add_option("--burnin", to_burnin, "sweeps discarded before averaging");
  topics->add_option("--seed", to_seed)->required();
  topics->add_option("--terms", to_terms, "ranked terms per topic");
  topics->add_option("--out-json", to_json)->required();
  topics->add_option("--out-svg", to_svg, "WCSS-vs-k curve (needs --select-k)");

  // pipeline
  std::string pl_config;
  auto* pipeline = app.add_subcommand("pipeline", "run every stage from a JSON config");
  pipeline->add_option("--config", pl_config)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*synth) return run_synth(sy_spec, sy_out, sy_truth);
    if (*ingest) return run_ingest(in_input, in_format, in_keyword, in_out);
    if (*preprocess) return run_preprocess(pp_input, pp_stoplist, pp_no_stem, pp_out);
    if (*sentiment)
      return run_sentiment(se_input, se_pos, se_neg, se_sample, se_seed, se_out_pos,
                           se_out_neg, se_counts, se_name);
    if (*posfilter) return run_posfilter(pf_input, pf_name, pf_out, pf_stoplist, pf_tagtable);
    if (*matrix) return run_matrix(mx_wordsets, mx_out);
    if (*similarity) return run_similarity(si_matrix, si_csv, si_svg, si_json);
    if (*cluster)
      return run_cluster(cl_matrix, cl_k, cl_seed, cl_restarts, cl_max_iter, cl_no_normalize,
                         cl_json, cl_svg);
    if (*topics)
      return run_topics(to_matrix, to_k, to_select, to_alpha, to_beta, to_iters, to_burnin,
                        to_seed, to_terms, to_json, to_svg);
    if (*pipeline) return run_pipeline_cmd(pl_config);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
