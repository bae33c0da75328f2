#include <doctest.h>

#include <set>

#include "sempat/porter.hpp"
#include "sempat/sentiment.hpp"
#include "sempat/synth.hpp"
#include "sempat/text.hpp"
#include "test_util.hpp"

using namespace sempat;

namespace {

SynthSpec small_spec() {
  SynthSpec spec;
  spec.n_keywords = 2;
  spec.docs_per_set = 10;
  spec.vocab_size_per_polarity = 12;
  spec.overlap_fraction = 0.0;
  spec.planted_topics = 3;
  spec.tokens_per_doc_min = 6;
  spec.tokens_per_doc_max = 10;
  spec.seed = 4242;
  return spec;
}

}  // namespace

TEST_CASE("record count is keywords x polarities x docs_per_set") {
  const auto corpus = generate_corpus(small_spec());
  CHECK(corpus.records.size() == 2 * 2 * 10);
  CHECK(corpus.truth.records.size() == corpus.records.size());
}

TEST_CASE("generation is deterministic per seed") {
  const auto a = generate_corpus(small_spec());
  const auto b = generate_corpus(small_spec());
  CHECK(a.records == b.records);
  CHECK(a.truth.to_json() == b.truth.to_json());

  auto spec = small_spec();
  spec.seed = 4243;
  const auto c = generate_corpus(spec);
  CHECK(a.records != c.records);
}

TEST_CASE("overlap 0 gives disjoint polarity vocabularies") {
  const auto corpus = generate_corpus(small_spec());
  std::set<std::string> pos, neg;
  for (const auto& topic : corpus.truth.positive_topics_surface)
    pos.insert(topic.begin(), topic.end());
  for (const auto& topic : corpus.truth.negative_topics_surface)
    neg.insert(topic.begin(), topic.end());
  CHECK(pos.size() == 12);
  CHECK(neg.size() == 12);
  for (const auto& w : pos) CHECK_FALSE(neg.count(w));

  auto spec = small_spec();
  spec.overlap_fraction = 0.5;
  const auto shared_corpus = generate_corpus(spec);
  std::set<std::string> pos2, neg2;
  for (const auto& t : shared_corpus.truth.positive_topics_surface) pos2.insert(t.begin(), t.end());
  for (const auto& t : shared_corpus.truth.negative_topics_surface) neg2.insert(t.begin(), t.end());
  size_t shared = 0;
  for (const auto& w : pos2) shared += neg2.count(w);
  CHECK(shared == 6);  // round(0.5 * 12)
}

TEST_CASE("planted sentiment pools are a subset of the bundled lexicon") {
  const auto lex = load_lexicon(testutil::data_path("lexicon_positive.txt"),
                                testutil::data_path("lexicon_negative.txt"));
  for (const auto& w : synth_positive_pool()) {
    CAPTURE(w);
    CHECK(lex.positive.count(w));
  }
  for (const auto& w : synth_negative_pool()) {
    CAPTURE(w);
    CHECK(lex.negative.count(w));
  }
}

TEST_CASE("every record scores with its planted polarity sign") {
  const auto lex = load_lexicon(testutil::data_path("lexicon_positive.txt"),
                                testutil::data_path("lexicon_negative.txt"));
  const auto corpus = generate_corpus(small_spec());
  for (size_t i = 0; i < corpus.records.size(); i++) {
    const int score = score_tokens(tokenize(corpus.records[i].text), lex);
    const auto& truth = corpus.truth.records[i];
    CAPTURE(corpus.records[i].text);
    if (truth.polarity == "positive") CHECK(score > 0);
    else CHECK(score < 0);
    CHECK(corpus.records[i].user_id == truth.user_id);
  }
}

TEST_CASE("generated text embeds its keyword and is keyword-exclusive") {
  const auto corpus = generate_corpus(small_spec());
  for (size_t i = 0; i < corpus.records.size(); i++) {
    const auto& truth = corpus.truth.records[i];
    CHECK(keyword_matches(corpus.records[i].text, truth.keyword));
    for (const auto& other : corpus.truth.keywords)
      if (other != truth.keyword) CHECK_FALSE(keyword_matches(corpus.records[i].text, other));
  }
}

TEST_CASE("planted vocabulary has unique stems matching the sidecar") {
  const auto corpus = generate_corpus(small_spec());
  std::set<std::string> stems;
  auto check_topics = [&](const std::vector<std::vector<std::string>>& surface,
                          const std::vector<std::vector<std::string>>& stemmed) {
    REQUIRE(surface.size() == stemmed.size());
    for (size_t t = 0; t < surface.size(); t++) {
      REQUIRE(surface[t].size() == stemmed[t].size());
      for (size_t i = 0; i < surface[t].size(); i++) {
        CHECK(porter_stem(surface[t][i]) == stemmed[t][i]);
        stems.insert(stemmed[t][i]);
      }
    }
  };
  check_topics(corpus.truth.positive_topics_surface, corpus.truth.positive_topics_stemmed);
  check_topics(corpus.truth.negative_topics_surface, corpus.truth.negative_topics_stemmed);
  CHECK(stems.size() == 24);  // 12 + 12, overlap 0, no stem collisions
}

TEST_CASE("spec validation rejects bad values") {
  auto spec = small_spec();
  spec.overlap_fraction = 1.0;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec = small_spec();
  spec.planted_topics = 100;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec = small_spec();
  spec.tokens_per_doc_max = 2;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec = small_spec();
  spec.n_keywords = 0;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
}

TEST_CASE("spec loads from json with defaults") {
  testutil::TempDir tmp("synthspec");
  testutil::write_file(tmp.file("s.json"),
                       R"({"n_keywords": 3, "docs_per_set": 5, "seed": 9})");
  const auto spec = SynthSpec::from_json_file(tmp.file("s.json"));
  CHECK(spec.n_keywords == 3);
  CHECK(spec.docs_per_set == 5);
  CHECK(spec.seed == 9);
  CHECK(spec.vocab_size_per_polarity == 60);  // default preserved

  testutil::write_file(tmp.file("bad.json"), R"({"n_keywords": -2})");
  CHECK_THROWS(static_cast<void>(SynthSpec::from_json_file(tmp.file("bad.json"))));
}
