#include <doctest.h>

#include "sempat/errors.hpp"
#include "sempat/rng.hpp"
#include "sempat/sentiment.hpp"
#include "test_util.hpp"

using namespace sempat;

namespace {

const char* kCostcoTweet =
    "I hate all of the evil old farts at Costco. I also hate that I go to Costco.";

SentimentLexicon mini_lexicon() {
  SentimentLexicon lex;
  lex.negative = {"hate", "evil"};
  return lex;
}

// brute-force oracle: label each token independently and sum the signs
int score_oracle(const TokenList& tokens, const SentimentLexicon& lex) {
  int total = 0;
  for (const auto& t : tokens) {
    int label = 0;
    if (lex.positive.count(t)) label = 1;
    if (lex.negative.count(t)) label = -1;
    total += label;
  }
  return total;
}

}  // namespace

TEST_CASE("lexicon loading: comments, case folding, duplicates, conflicts") {
  testutil::TempDir tmp("lexicon");
  testutil::write_file(tmp.file("pos.txt"), "; header comment\ngood\nGood\n\nfine\n");
  testutil::write_file(tmp.file("neg.txt"), "bad\n");
  const auto lex = load_lexicon(tmp.file("pos.txt"), tmp.file("neg.txt"));
  CHECK(lex.positive.size() == 2);  // good + fine, case-folded dedup
  CHECK(lex.negative.size() == 1);

  testutil::write_file(tmp.file("neg2.txt"), "bad\nfine\n");
  CHECK_THROWS_WITH_AS(load_lexicon(tmp.file("pos.txt"), tmp.file("neg2.txt")),
                       doctest::Contains("fine"), DataError);
  CHECK_THROWS_AS(load_lexicon(tmp.file("missing.txt"), tmp.file("neg.txt")), DataError);
}

TEST_CASE("bundled lexicon files load cleanly") {
  const auto lex = load_lexicon(testutil::data_path("lexicon_positive.txt"),
                                testutil::data_path("lexicon_negative.txt"));
  CHECK(lex.positive.size() > 300);
  CHECK(lex.negative.size() > 300);
  CHECK(lex.negative.count("hate"));
  CHECK(lex.negative.count("evil"));
  CHECK(lex.positive.count("good"));
}

TEST_CASE("scoring counts occurrences, not types") {
  const auto tokens = tokenize(kCostcoTweet);
  CHECK(score_tokens(tokens, mini_lexicon()) == -3);  // hate twice, evil once

  // the full bundled lexicon introduces no additional hits on this tweet
  const auto full = load_lexicon(testutil::data_path("lexicon_positive.txt"),
                                 testutil::data_path("lexicon_negative.txt"));
  CHECK(score_tokens(tokens, full) == -3);

  CHECK(score_tokens({}, mini_lexicon()) == 0);
  SentimentLexicon pm;
  pm.positive = {"good"};
  pm.negative = {"bad"};
  CHECK(score_tokens({"good", "bad"}, pm) == 0);
}

TEST_CASE("scoring properties: additivity, negation antisymmetry, oracle agreement") {
  SentimentLexicon lex;
  lex.positive = {"alpha", "bravo", "charlie"};
  lex.negative = {"delta", "echo"};
  const std::vector<std::string> vocab = {"alpha", "bravo", "charlie", "delta",
                                          "echo",  "fox",   "golf"};
  Rng rng(2024);
  for (int trial = 0; trial < 1000; trial++) {
    TokenList d1, d2;
    for (size_t i = rng.below(12); i > 0; i--) d1.push_back(vocab[rng.below(vocab.size())]);
    for (size_t i = rng.below(12); i > 0; i--) d2.push_back(vocab[rng.below(vocab.size())]);
    TokenList cat = d1;
    cat.insert(cat.end(), d2.begin(), d2.end());
    CHECK(score_tokens(cat, lex) == score_tokens(d1, lex) + score_tokens(d2, lex));

    SentimentLexicon swapped;
    swapped.positive = lex.negative;
    swapped.negative = lex.positive;
    CHECK(score_tokens(d1, swapped) == -score_tokens(d1, lex));
    CHECK(score_tokens(d1, lex) == score_oracle(d1, lex));
  }
}

TEST_CASE("polarity split partitions and preserves order") {
  auto make = [](int score, const char* id) {
    ScoredDoc d;
    d.record.user_id = id;
    d.score = score;
    d.polarity = score > 0 ? Polarity::kPositive
                           : score < 0 ? Polarity::kNegative : Polarity::kNeutral;
    return d;
  };
  SUBCASE("mixed scores") {
    const auto split = split_by_polarity({make(2, "a"), make(-1, "b"), make(0, "c")});
    REQUIRE(split.positive.size() == 1);
    REQUIRE(split.negative.size() == 1);
    CHECK(split.positive[0].record.user_id == "a");
    CHECK(split.negative[0].record.user_id == "b");
    CHECK(split.discarded == 1);
  }
  SUBCASE("all zeros") {
    const auto split = split_by_polarity({make(0, "a"), make(0, "b")});
    CHECK(split.positive.empty());
    CHECK(split.negative.empty());
    CHECK(split.discarded == 2);
  }
  SUBCASE("all positive") {
    const auto split = split_by_polarity({make(1, "a"), make(3, "b")});
    CHECK(split.positive.size() == 2);
    CHECK(split.negative.empty());
  }
  SUBCASE("partition property on random scores") {
    Rng rng(5);
    for (int trial = 0; trial < 100; trial++) {
      std::vector<ScoredDoc> docs;
      for (size_t i = rng.below(40); i > 0; i--)
        docs.push_back(make(int(rng.below(7)) - 3, "x"));
      const auto split = split_by_polarity(docs);
      CHECK(split.positive.size() + split.negative.size() + split.discarded == docs.size());
    }
  }
}

TEST_CASE("sampling: undersized input, determinism, subset in original order") {
  std::vector<int> small = {1, 2, 3};
  CHECK(sample_without_replacement(small, 500, 7) == small);

  std::vector<int> big(1000);
  for (int i = 0; i < 1000; i++) big[i] = i;
  const auto s1 = sample_without_replacement(big, 500, 7);
  const auto s2 = sample_without_replacement(big, 500, 7);
  CHECK(s1 == s2);
  CHECK(s1.size() == 500);
  for (size_t i = 1; i < s1.size(); i++) CHECK(s1[i - 1] < s1[i]);  // original order
  const auto s3 = sample_without_replacement(big, 500, 8);
  CHECK(s1 != s3);  // different seed, different subset (overwhelmingly likely)

  CHECK_THROWS_AS(sample_without_replacement(big, 0, 7), std::invalid_argument);
}

TEST_CASE("sampling is roughly uniform") {
  std::vector<int> items(20);
  for (int i = 0; i < 20; i++) items[i] = i;
  std::vector<int> hits(20, 0);
  for (std::uint64_t seed = 0; seed < 2000; seed++)
    for (int x : sample_without_replacement(items, 5, seed)) hits[size_t(x)]++;
  for (int h : hits) {  // expectation 500 per item
    CHECK(h > 380);
    CHECK(h < 620);
  }
}
