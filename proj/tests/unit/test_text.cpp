#include <doctest.h>

#include "sempat/errors.hpp"
#include "sempat/rng.hpp"
#include "sempat/text.hpp"
#include "test_util.hpp"

using sempat::StopList;
using sempat::TokenList;
using sempat::tokenize;

TEST_CASE("tokenize lowercases and splits on non-letters") {
  CHECK(tokenize("Best Buy #1 DEAL!!") == TokenList{"best", "buy", "deal"});
  CHECK(tokenize("I hate all of the evil old farts at Costco.") ==
        TokenList{"i", "hate", "all", "of", "the", "evil", "old", "farts", "at", "costco"});
  CHECK(tokenize("12345 @@@") == TokenList{});
  CHECK(tokenize("") == TokenList{});
  CHECK(tokenize("#valentine") == TokenList{"valentine"});
  CHECK(tokenize("don't") == TokenList{"don", "t"});
  CHECK(tokenize("caf\xc3\xa9 fr\xc3\xbch") == TokenList{"caf", "fr", "h"});  // non-ASCII separates
}

TEST_CASE("tokenize output is a normalization fixpoint") {
  sempat::Rng rng(7);
  const std::string alphabet = "abcXYZ019 #@!.\xc3\xa9";
  for (int trial = 0; trial < 300; trial++) {
    std::string text;
    const size_t len = rng.below(60);
    for (size_t i = 0; i < len; i++) text.push_back(alphabet[rng.below(alphabet.size())]);
    const auto tokens = tokenize(text);
    std::string joined;
    for (const auto& t : tokens) {
      if (!joined.empty()) joined.push_back(' ');
      joined += t;
    }
    CHECK(tokenize(joined) == tokens);
  }
}

TEST_CASE("remove_stopwords keeps order and non-members") {
  const StopList stops(std::vector<std::string>{"i", "the"});
  CHECK(sempat::remove_stopwords({"i", "hate", "the", "evil"}, stops) ==
        TokenList{"hate", "evil"});
  CHECK(sempat::remove_stopwords({}, stops) == TokenList{});
  const StopList empty_stops;
  CHECK(sempat::remove_stopwords({"good", "good", "bad"}, empty_stops) ==
        TokenList{"good", "good", "bad"});
}

TEST_CASE("remove_stopwords output is a subsequence of its input") {
  sempat::Rng rng(11);
  const std::vector<std::string> vocab = {"a", "b", "c", "d", "e", "f"};
  const StopList stops(std::vector<std::string>{"b", "e"});
  for (int trial = 0; trial < 200; trial++) {
    TokenList tokens;
    for (size_t i = rng.below(30); i > 0; i--) tokens.push_back(vocab[rng.below(vocab.size())]);
    const auto kept = sempat::remove_stopwords(tokens, stops);
    size_t pos = 0;
    for (const auto& k : kept) {
      while (pos < tokens.size() && tokens[pos] != k) pos++;
      REQUIRE(pos < tokens.size());
      pos++;
      CHECK((k != "b" && k != "e"));
    }
  }
}

TEST_CASE("bundled stop list loads with comments ignored") {
  const auto stops = StopList::load(testutil::data_path("stopwords_english.txt"));
  CHECK(stops.size() == 174);
  CHECK(stops.contains("the"));
  CHECK(stops.contains("i"));
  CHECK(stops.contains("very"));
  CHECK_FALSE(stops.contains("hate"));
  CHECK_FALSE(stops.contains("good"));
}

TEST_CASE("stop list file load errors and normalization") {
  testutil::TempDir tmp("stoplist");
  testutil::write_file(tmp.file("s.txt"), "# comment\nThe\nAND\n\nor\n");
  const auto stops = StopList::load(tmp.file("s.txt"));
  CHECK(stops.size() == 3);
  CHECK(stops.contains("the"));
  CHECK(stops.contains("and"));
  CHECK(stops.contains("or"));
  CHECK_THROWS_AS(StopList::load(tmp.file("missing.txt")), sempat::DataError);
}
