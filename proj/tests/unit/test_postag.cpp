#include <doctest.h>

#include "sempat/errors.hpp"
#include "sempat/postag.hpp"
#include "sempat/rng.hpp"
#include "test_util.hpp"

using namespace sempat;

namespace {

const Tagger& bundled_tagger() {
  static const Tagger tagger = Tagger::load(testutil::data_path("pos_tags.tsv"));
  return tagger;
}

// Fig.-2-style sequence as it would arrive through the pre-tagged path.
std::vector<TaggedToken> fig2_sequence() {
  return {{"take", "VB"},     {"#valentine", "JJ"}, {"Best", "JJS"},  {"Price", "NN"},
          {"Bvlgari", "NNP"}, {"Women", "NNP"},     {"Eau", "NNP"},   {"De", "NNP"},
          {"Perfume", "NNP"}, {"Spray", "NNP"},     {"by", "IN"},     {"searched", "VBN"},
          {"and", "CC"},      {"for", "IN"},        {"Guide", "NNP"}, {"to", "TO"}};
}

}  // namespace

TEST_CASE("tagger lexicon and suffix rules") {
  const auto& tagger = bundled_tagger();
  CHECK(tagger.lexicon_size() > 4000);

  auto one = [&](const std::string& w) { return tagger.tag({w})[0].tag; };
  const std::string searched = one("searched");
  CHECK((searched == "VBD" || searched == "VBN"));
  CHECK(one("by") == "IN");
  CHECK(one("quirkly") == "RB");       // -ly rule, not in the table
  CHECK(one("zorbing") == "VBG");      // -ing rule
  CHECK(one("zorbed") == "VBD");       // -ed rule
  CHECK(one("zorbous") == "JJ");       // -ous rule
  CHECK(one("zorbful") == "JJ");       // -ful rule
  CHECK(one("zorbable") == "JJ");      // -able rule
  CHECK(one("xyzzt") == "NN");         // default
  CHECK(one("take") == "VB");
  CHECK(one("best") == "JJS");
  CHECK(one("price") == "NN");

  // capitalized away from the sentence start defaults to proper noun
  const auto tags = tagger.tag({"searched", "Bvlgari"});
  CHECK(tags[1].tag == "NNP");
  // ...but a table hit wins over capitalization
  const auto tags2 = tagger.tag({"the", "Best"});
  CHECK(tags2[1].tag == "JJS");
  // position 0 is not "mid-sentence"
  const auto tags3 = tagger.tag({"Zorbtown"});
  CHECK(tags3[0].tag == "NN");
}

TEST_CASE("tagger is deterministic") {
  const auto& tagger = bundled_tagger();
  const std::vector<std::string> tokens = {"i", "hate", "all", "of", "the", "evil",
                                           "old", "farts", "at", "costco"};
  CHECK(tagger.tag(tokens) == tagger.tag(tokens));
}

TEST_CASE("filter_content_words keeps exactly JJ*/RB*/VB* and strips sigils") {
  const auto got = filter_content_words(fig2_sequence());
  CHECK(got == std::vector<std::string>{"take", "valentine", "best", "searched"});

  CHECK(filter_content_words({{"price", "NN"}, {"guide", "NNP"}, {"to", "TO"}}).empty());
  CHECK(filter_content_words({}).empty());
}

TEST_CASE("retention rule is prefix membership in {JJ, RB, VB}") {
  const std::vector<std::string> inventory = {"NN",  "NNS", "NNP", "VB",  "VBD", "VBG",
                                              "VBN", "VBZ", "VBP", "JJ",  "JJR", "JJS",
                                              "RB",  "RBR", "RBS", "IN",  "CC",  "TO",
                                              "DT",  "PRP", "MD",  "WRB", "CD",  "UH"};
  Rng rng(99);
  for (int trial = 0; trial < 300; trial++) {
    std::vector<TaggedToken> tagged;
    for (size_t i = rng.below(25); i > 0; i--)
      tagged.push_back({"w" + std::to_string(i), inventory[rng.below(inventory.size())]});
    const auto kept = filter_content_words(tagged);
    size_t expected = 0;
    for (const auto& t : tagged) {
      const bool content = t.tag.rfind("JJ", 0) == 0 || t.tag.rfind("RB", 0) == 0 ||
                           t.tag.rfind("VB", 0) == 0;
      if (content) expected++;
    }
    CHECK(kept.size() == expected);
  }
}

TEST_CASE("build_word_set runs the full per-document chain") {
  const StopList stops = StopList::load(testutil::data_path("stopwords_english.txt"));
  const std::vector<TweetRecord> docs = {{Date{2012, 11, 5}, "u1", "I hate evil Costco"}};
  const auto ws = build_word_set(docs, "costco-negative", stops, bundled_tagger());
  CHECK(ws.name == "costco-negative");
  REQUIRE(ws.counts.size() == 2);
  CHECK(ws.counts.at("hate") == 1);
  CHECK(ws.counts.at("evil") == 1);
}

TEST_CASE("build_word_set edge cases") {
  const StopList stops;
  SUBCASE("no documents -> empty set") {
    const auto ws = build_word_set({}, "empty", stops, bundled_tagger());
    CHECK(ws.empty());
    CHECK(ws.total() == 0);
  }
  SUBCASE("duplicate documents double the multiplicities") {
    const TweetRecord doc{Date{2012, 11, 5}, "u1", "I hate evil Costco"};
    const auto once = build_word_set({doc}, "w", stops, bundled_tagger());
    const auto twice = build_word_set({doc, doc}, "w", stops, bundled_tagger());
    for (const auto& [word, count] : once.counts) CHECK(twice.counts.at(word) == 2 * count);
  }
  SUBCASE("stemming applies after filtering") {
    const TweetRecord doc{Date{2012, 11, 5}, "u1", "searching quickly"};
    const auto ws = build_word_set({doc}, "w", stops, bundled_tagger());
    CHECK(ws.counts.count("search"));   // searching -> VBG -> search
    CHECK(ws.counts.count("quickli"));  // quickly -> RB -> quickli
  }
}

TEST_CASE("pre-tagged jsonl reader") {
  testutil::TempDir tmp("pretagged");
  testutil::write_file(
      tmp.file("in.jsonl"),
      R"({"tagged":[["take","VB"],["Price","NN"]]})" "\n"
      "garbage\n"
      R"({"tagged":[["quickly","RB"]]})" "\n");
  size_t skipped = 0;
  const auto docs = read_pretagged_jsonl(tmp.file("in.jsonl"), &skipped);
  REQUIRE(docs.size() == 2);
  CHECK(skipped == 1);
  CHECK(docs[0][0] == TaggedToken{"take", "VB"});
  CHECK(docs[1][0] == TaggedToken{"quickly", "RB"});

  const auto ws = build_word_set_pretagged(docs, "pre", StopList());
  CHECK(ws.counts.count("take"));
  CHECK(ws.counts.count("quickli"));
  CHECK_FALSE(ws.counts.count("price"));
}

TEST_CASE("word-set file round trip with multiplicity expanded") {
  testutil::TempDir tmp("wordset");
  WordSet ws;
  ws.name = "w";
  ws.add("evil");
  ws.add("hate");
  ws.add("hate");
  write_word_set_file(tmp.file("w.txt"), ws);
  CHECK(testutil::read_file(tmp.file("w.txt")) == "evil\nhate\nhate\n");
  const auto back = read_word_set_file(tmp.file("w.txt"), "w");
  CHECK(back.counts == ws.counts);
  CHECK_THROWS_AS(read_word_set_file(tmp.file("missing.txt"), "x"), DataError);
}
