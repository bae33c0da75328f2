#include <doctest.h>

#include <sstream>

#include "sempat/corpus.hpp"
#include "sempat/errors.hpp"
#include "test_util.hpp"

using namespace sempat;

TEST_CASE("date parsing is strict and calendar-aware") {
  CHECK(Date::parse("2012-11-05") == Date{2012, 11, 5});
  CHECK(Date::parse("2012-02-29") == Date{2012, 2, 29});  // leap year
  CHECK_FALSE(Date::parse("2013-02-29"));
  CHECK_FALSE(Date::parse("2012-13-01"));
  CHECK_FALSE(Date::parse("2012-00-10"));
  CHECK_FALSE(Date::parse("2012-11-31"));
  CHECK_FALSE(Date::parse("2012-1-05"));
  CHECK_FALSE(Date::parse("2012-11-05T10:00:00Z"));
  CHECK_FALSE(Date::parse("yesterday"));
  CHECK(Date{2012, 11, 5}.to_string() == "2012-11-05");
}

TEST_CASE("jsonl parsing maps fields and skips malformed lines") {
  std::istringstream in(
      R"({"date":"2012-11-05","user_id":"u1","text":"hi"})"
      "\n"
      R"({"date":"2012-11-06","user_id":"u2"})"
      "\n"
      R"({"date":"2012-11-07","user_id":"u3","text":"there"})"
      "\n");
  const auto res = parse_records(in, RecordFormat::kJsonl);
  REQUIRE(res.records.size() == 2);
  CHECK(res.skipped == 1);
  CHECK(res.records[0] == TweetRecord{Date{2012, 11, 5}, "u1", "hi"});
  CHECK(res.records[1].text == "there");
}

TEST_CASE("jsonl parsing edge cases") {
  SUBCASE("empty stream") {
    std::istringstream in("");
    const auto res = parse_records(in, RecordFormat::kJsonl);
    CHECK(res.records.empty());
    CHECK(res.skipped == 0);
  }
  SUBCASE("whitespace-only text is skipped") {
    std::istringstream in(R"({"date":"2012-11-05","user_id":"u1","text":"   "})" "\n");
    const auto res = parse_records(in, RecordFormat::kJsonl);
    CHECK(res.records.empty());
    CHECK(res.skipped == 1);
  }
  SUBCASE("invalid json and invalid date are skipped") {
    std::istringstream in("not json at all\n"
                          R"({"date":"2012-11-31","user_id":"u1","text":"x"})" "\n");
    const auto res = parse_records(in, RecordFormat::kJsonl);
    CHECK(res.records.empty());
    CHECK(res.skipped == 2);
  }
  SUBCASE("numeric user ids are stringified") {
    std::istringstream in(R"({"date":"2012-11-05","user_id":77,"text":"x"})" "\n");
    const auto res = parse_records(in, RecordFormat::kJsonl);
    REQUIRE(res.records.size() == 1);
    CHECK(res.records[0].user_id == "77");
  }
}

TEST_CASE("jsonl parsing distributes over stream concatenation") {
  const std::string a =
      R"({"date":"2012-11-05","user_id":"u1","text":"one"})" "\n"
      "garbage\n";
  const std::string b =
      R"({"date":"2012-11-06","user_id":"u2","text":"two"})" "\n";
  std::istringstream sa(a), sb(b), sab(a + b);
  const auto ra = parse_records(sa, RecordFormat::kJsonl);
  const auto rb = parse_records(sb, RecordFormat::kJsonl);
  const auto rab = parse_records(sab, RecordFormat::kJsonl);
  CHECK(rab.records.size() == ra.records.size() + rb.records.size());
  CHECK(rab.skipped == ra.skipped + rb.skipped);
  for (size_t i = 0; i < ra.records.size(); i++) CHECK(rab.records[i] == ra.records[i]);
  for (size_t i = 0; i < rb.records.size(); i++)
    CHECK(rab.records[ra.records.size() + i] == rb.records[i]);
}

TEST_CASE("csv parsing follows RFC 4180") {
  SUBCASE("quoted fields with commas, quotes and newlines") {
    std::istringstream in(
        "date,user_id,text\n"
        "2012-11-05,u1,\"hello, world\"\n"
        "2012-11-06,u2,\"she said \"\"hi\"\"\"\n"
        "2012-11-07,u3,\"line one\nline two\"\n");
    const auto res = parse_records(in, RecordFormat::kCsv);
    REQUIRE(res.records.size() == 3);
    CHECK(res.skipped == 0);
    CHECK(res.records[0].text == "hello, world");
    CHECK(res.records[1].text == "she said \"hi\"");
    CHECK(res.records[2].text == "line one\nline two");
  }
  SUBCASE("rows with wrong arity are skipped") {
    std::istringstream in("date,user_id,text\n2012-11-05,u1\n2012-11-06,u2,ok\n");
    const auto res = parse_records(in, RecordFormat::kCsv);
    CHECK(res.records.size() == 1);
    CHECK(res.skipped == 1);
  }
  SUBCASE("missing header is fatal") {
    std::istringstream in("2012-11-05,u1,hello\n");
    CHECK_THROWS_AS(parse_records(in, RecordFormat::kCsv), DataError);
  }
}

TEST_CASE("keyword filtering: case-insensitive, whitespace-collapsed substring") {
  const std::vector<TweetRecord> records = {
      {Date{2012, 11, 5}, "u1", "I love AMAZON deals"},
      {Date{2012, 11, 6}, "u2", "Best  Buy rocks"},
      {Date{2012, 11, 7}, "u3", "nothing relevant"},
  };
  CHECK(filter_by_keyword(records, "amazon").docs.size() == 1);
  const auto bb = filter_by_keyword(records, "best buy");
  REQUIRE(bb.docs.size() == 1);
  CHECK(bb.docs[0].user_id == "u2");
  CHECK(bb.name == "best buy");
  CHECK(filter_by_keyword(records, "costco").docs.empty());
  CHECK_THROWS_AS(filter_by_keyword(records, "   "), std::invalid_argument);
}

TEST_CASE("keyword filtering is a stable subsequence and idempotent") {
  std::vector<TweetRecord> records;
  for (int i = 0; i < 40; i++) {
    records.push_back(TweetRecord{Date{2012, 11, 5}, "u" + std::to_string(i),
                                  i % 3 == 0 ? "about ACME store #" + std::to_string(i)
                                             : "unrelated chatter " + std::to_string(i)});
  }
  const auto once = filter_by_keyword(records, "acme");
  const auto twice = filter_by_keyword(once.docs, "acme");
  CHECK(once.docs == twice.docs);
  size_t pos = 0;
  for (const auto& d : once.docs) {
    while (pos < records.size() && !(records[pos] == d)) pos++;
    REQUIRE(pos < records.size());
    pos++;
  }
}

TEST_CASE("record jsonl round trip") {
  const std::vector<TweetRecord> records = {
      {Date{2012, 11, 5}, "u1", "plain text"},
      {Date{2012, 12, 31}, "u2", "with \"quotes\" and, commas"},
  };
  std::ostringstream out;
  write_records_jsonl(out, records);
  std::istringstream in(out.str());
  const auto res = parse_records(in, RecordFormat::kJsonl);
  CHECK(res.skipped == 0);
  CHECK(res.records == records);
}
