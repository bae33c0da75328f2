#include "sempat/synth.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "sempat/errors.hpp"
#include "sempat/porter.hpp"
#include "sempat/rng.hpp"

namespace sempat {

namespace {

const std::vector<std::string> kKeywordPool = {
    "northmart",  "bluecart",   "shopnest",  "valuhive",   "primestop", "cartwild",
    "dealforge",  "goodsbarn",  "swiftmall", "trademeadow", "pricegrove", "stockpine",
};

const std::vector<std::string> kPositivePool = {
    "good",      "great",   "love",      "happy",    "awesome",   "excellent",
    "amazing",   "wonderful", "fantastic", "perfect", "nice",      "best",
    "enjoy",     "pleased", "superb",    "delighted", "brilliant", "glad",
    "thrilled",  "satisfied", "helpful",  "friendly", "fabulous",  "terrific",
};

const std::vector<std::string> kNegativePool = {
    "bad",       "terrible", "hate",       "awful",       "horrible",    "worst",
    "disappointed", "angry", "annoyed",    "broken",      "slow",        "rude",
    "dirty",     "useless",  "ugly",       "disgusting",  "frustrating", "poor",
    "sad",       "mad",      "pathetic",   "miserable",   "nasty",       "lousy",
};

// Suffixes whose rule tags keep a generated word through the JJ/RB/VB filter.
const std::vector<std::string> kContentSuffixes = {"ly", "ing", "ed", "ous", "ful", "able"};

const char kConsonants[] = "zvrplmnktgd";
const char kVowels[] = "aeiou";

// Strictly alternating cvcvc(vc) shape with a 'z' initial: no stop word,
// bundled lexicon entry, tag-table entry or keyword has that form, so the
// generated vocabulary cannot collide with anything the pipeline treats
// specially.
std::string make_base(Rng& rng) {
  std::string w;
  const size_t syllables = 2 + size_t(rng.below(2));
  for (size_t s = 0; s < syllables; s++) {
    w.push_back(s == 0 ? 'z' : kConsonants[rng.below(sizeof(kConsonants) - 1)]);
    w.push_back(kVowels[rng.below(sizeof(kVowels) - 1)]);
  }
  char last = kConsonants[rng.below(sizeof(kConsonants) - 1)];
  while (last == w.back()) last = kConsonants[rng.below(sizeof(kConsonants) - 1)];
  w.push_back(last);
  return w;
}

std::string junk_token(Rng& rng) {
  // plain consonant-heavy pseudo-noun; the tagger defaults it to NN
  std::string w = make_base(rng);
  w.push_back(kConsonants[rng.below(sizeof(kConsonants) - 1)]);
  return w;
}

}  // namespace

const std::vector<std::string>& synth_positive_pool() { return kPositivePool; }
const std::vector<std::string>& synth_negative_pool() { return kNegativePool; }

void SynthSpec::validate() const {
  if (n_keywords < 1) throw std::invalid_argument("n_keywords must be >= 1");
  if (n_keywords > kKeywordPool.size())
    throw std::invalid_argument("n_keywords must be <= " + std::to_string(kKeywordPool.size()));
  if (docs_per_set < 1) throw std::invalid_argument("docs_per_set must be >= 1");
  if (vocab_size_per_polarity < 1)
    throw std::invalid_argument("vocab_size_per_polarity must be >= 1");
  if (overlap_fraction < 0.0 || overlap_fraction >= 1.0)
    throw std::invalid_argument("overlap_fraction must be in [0, 1)");
  if (planted_topics < 1) throw std::invalid_argument("planted_topics must be >= 1");
  if (planted_topics > vocab_size_per_polarity)
    throw std::invalid_argument("planted_topics exceeds vocab_size_per_polarity");
  if (tokens_per_doc_min < 4) throw std::invalid_argument("tokens_per_doc_min must be >= 4");
  if (tokens_per_doc_max < tokens_per_doc_min)
    throw std::invalid_argument("tokens_per_doc_max must be >= tokens_per_doc_min");
  if (noise_rate < 0.0 || noise_rate > 0.5)
    throw std::invalid_argument("noise_rate must be in [0, 0.5]");
}

SynthSpec SynthSpec::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open synth spec: " + path);
  nlohmann::json obj = nlohmann::json::parse(in, nullptr, false);
  if (!obj.is_object()) throw DataError("synth spec is not a JSON object: " + path);
  SynthSpec spec;
  auto get_uint = [&](const char* key, size_t& out) {
    if (!obj.contains(key)) return;
    if (!obj[key].is_number_unsigned()) throw DataError(std::string("synth spec: ") + key +
                                                        " must be a nonnegative integer");
    out = obj[key].get<size_t>();
  };
  get_uint("n_keywords", spec.n_keywords);
  get_uint("docs_per_set", spec.docs_per_set);
  get_uint("vocab_size_per_polarity", spec.vocab_size_per_polarity);
  get_uint("planted_topics", spec.planted_topics);
  get_uint("tokens_per_doc_min", spec.tokens_per_doc_min);
  get_uint("tokens_per_doc_max", spec.tokens_per_doc_max);
  if (obj.contains("overlap_fraction")) spec.overlap_fraction = obj["overlap_fraction"].get<double>();
  if (obj.contains("noise_rate")) spec.noise_rate = obj["noise_rate"].get<double>();
  if (obj.contains("seed")) {
    if (!obj["seed"].is_number_unsigned()) throw DataError("synth spec: seed must be unsigned");
    spec.seed = obj["seed"].get<std::uint64_t>();
  }
  spec.validate();
  return spec;
}

SynthCorpus generate_corpus(const SynthSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);

  const std::vector<std::string> keywords(kKeywordPool.begin(),
                                          kKeywordPool.begin() + long(spec.n_keywords));

  // ---- unique pseudo-word surface forms -------------------------------
  std::set<std::string> reserved;  // everything a generated word must avoid
  for (const auto& w : kPositivePool) reserved.insert(w);
  for (const auto& w : kNegativePool) reserved.insert(w);
  for (const auto& w : keywords) reserved.insert(w);

  std::set<std::string> used_bases;
  std::set<std::string> used_stems;
  auto fresh_content_word = [&](size_t slot) -> std::pair<std::string, std::string> {
    while (true) {
      const std::string base = make_base(rng);
      if (used_bases.count(base)) continue;
      const std::string surface = base + kContentSuffixes[slot % kContentSuffixes.size()];
      if (reserved.count(surface)) continue;
      const std::string stem = porter_stem(surface);
      if (used_stems.count(stem)) continue;
      used_bases.insert(base);
      used_stems.insert(stem);
      reserved.insert(surface);
      return {surface, stem};
    }
  };

  const size_t V = spec.vocab_size_per_polarity;
  const size_t shared_count = size_t(std::llround(spec.overlap_fraction * double(V)));
  std::vector<std::string> shared, shared_stem;
  for (size_t i = 0; i < shared_count; i++) {
    auto [s, st] = fresh_content_word(i);
    shared.push_back(s);
    shared_stem.push_back(st);
  }
  auto build_vocab = [&](std::vector<std::string>& surface, std::vector<std::string>& stems) {
    surface = shared;
    stems = shared_stem;
    for (size_t i = shared.size(); i < V; i++) {
      auto [s, st] = fresh_content_word(i);
      surface.push_back(s);
      stems.push_back(st);
    }
  };
  std::vector<std::string> pos_vocab, pos_stems, neg_vocab, neg_stems;
  build_vocab(pos_vocab, pos_stems);
  build_vocab(neg_vocab, neg_stems);

  // ---- partition each vocabulary into planted topic supports ----------
  const size_t T = spec.planted_topics;
  auto partition = [&](const std::vector<std::string>& vocab) {
    std::vector<std::vector<std::string>> topics(T);
    for (size_t i = 0; i < vocab.size(); i++) topics[i % T].push_back(vocab[i]);
    return topics;
  };
  SynthTruth truth;
  truth.keywords = keywords;
  truth.positive_topics_surface = partition(pos_vocab);
  truth.negative_topics_surface = partition(neg_vocab);
  truth.positive_topics_stemmed = partition(pos_stems);
  truth.negative_topics_stemmed = partition(neg_stems);

  // ---- documents -------------------------------------------------------
  struct Draft {
    std::string text;
    SynthTruth::RecordTruth meta;
  };
  std::vector<Draft> drafts;
  drafts.reserve(spec.n_keywords * 2 * spec.docs_per_set);

  for (size_t ki = 0; ki < keywords.size(); ki++) {
    for (int polarity = 0; polarity < 2; polarity++) {
      const bool positive = polarity == 1;
      const auto& pool = positive ? kPositivePool : kNegativePool;
      const auto& topics = positive ? truth.positive_topics_surface
                                    : truth.negative_topics_surface;
      for (size_t d = 0; d < spec.docs_per_set; d++) {
        // keyword-biased topic: keeps the word sets of one keyword thematically skewed
        size_t topic = ki % T;
        if (T > 1 && rng.next_double() >= 0.85) {
          size_t other = size_t(rng.below(T - 1));
          if (other >= topic) other++;
          topic = other;
        }
        const size_t n_tokens = spec.tokens_per_doc_min +
                                size_t(rng.below(spec.tokens_per_doc_max -
                                                 spec.tokens_per_doc_min + 1));
        const size_t n_sentiment = 2 + size_t(rng.below(3));  // 2..4
        std::vector<std::string> tokens;
        tokens.push_back(keywords[ki]);
        for (size_t s = 0; s < n_sentiment; s++)
          tokens.push_back(pool[rng.below(pool.size())]);
        while (tokens.size() < n_tokens) {
          if (rng.next_double() < spec.noise_rate) {
            tokens.push_back(junk_token(rng));
          } else {
            const auto& support = topics[topic];
            tokens.push_back(support[rng.below(support.size())]);
          }
        }
        // keyword stays put only by chance: shuffle the token order
        for (size_t i = tokens.size(); i > 1; i--)
          std::swap(tokens[i - 1], tokens[size_t(rng.below(i))]);
        std::string text;
        for (size_t i = 0; i < tokens.size(); i++) {
          if (i) text.push_back(' ');
          text += tokens[i];
        }
        Draft draft;
        draft.text = std::move(text);
        draft.meta.keyword = keywords[ki];
        draft.meta.polarity = positive ? "positive" : "negative";
        draft.meta.topic = topic;
        drafts.push_back(std::move(draft));
      }
    }
  }

  // global shuffle, then dates/users in final order
  for (size_t i = drafts.size(); i > 1; i--)
    std::swap(drafts[i - 1], drafts[size_t(rng.below(i))]);

  SynthCorpus corpus;
  corpus.truth = std::move(truth);
  Date date{2012, 11, 5};
  auto next_day = [](Date d) {
    static const int days[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    int dmax = days[d.month - 1];
    const bool leap = (d.year % 4 == 0 && d.year % 100 != 0) || d.year % 400 == 0;
    if (d.month == 2 && leap) dmax = 29;
    if (++d.day > dmax) {
      d.day = 1;
      if (++d.month > 12) {
        d.month = 1;
        d.year++;
      }
    }
    return d;
  };
  for (size_t i = 0; i < drafts.size(); i++) {
    char uid[16];
    std::snprintf(uid, sizeof(uid), "u%06zu", i + 1);
    TweetRecord rec;
    rec.date = date;
    rec.user_id = uid;
    rec.text = std::move(drafts[i].text);
    drafts[i].meta.user_id = uid;
    corpus.records.push_back(std::move(rec));
    corpus.truth.records.push_back(std::move(drafts[i].meta));
    if ((i + 1) % 97 == 0) date = next_day(date);  // spread over the collection window
  }
  return corpus;
}

std::string SynthTruth::to_json() const {
  nlohmann::json obj;
  obj["keywords"] = keywords;
  obj["positive_topics_surface"] = positive_topics_surface;
  obj["negative_topics_surface"] = negative_topics_surface;
  obj["positive_topics_stemmed"] = positive_topics_stemmed;
  obj["negative_topics_stemmed"] = negative_topics_stemmed;
  nlohmann::json recs = nlohmann::json::array();
  for (const auto& r : records) {
    recs.push_back({{"user_id", r.user_id},
                    {"keyword", r.keyword},
                    {"polarity", r.polarity},
                    {"topic", r.topic}});
  }
  obj["records"] = std::move(recs);
  return obj.dump(2) + "\n";
}

}  // namespace sempat
