#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sempat {

// Calendar date, day precision.
struct Date {
  int year = 0;
  int month = 0;
  int day = 0;

  // Strict YYYY-MM-DD, validated against the calendar (leap years included).
  static std::optional<Date> parse(std::string_view s);
  std::string to_string() const;

  auto operator<=>(const Date&) const = default;
};

struct TweetRecord {
  Date date;
  std::string user_id;
  std::string text;  // non-empty after whitespace trimming

  bool operator==(const TweetRecord&) const = default;
};

// Documents extracted with one keyword; order follows the input file.
struct DocumentSet {
  std::string name;
  std::vector<TweetRecord> docs;
};

enum class RecordFormat { kJsonl, kCsv };

struct ParseResult {
  std::vector<TweetRecord> records;
  size_t skipped = 0;  // malformed lines/rows, counted but not fatal
};

// Reads records from a stream. JSONL: one object per line with keys
// date/user_id/text. CSV: RFC 4180, header row required, columns
// date,user_id,text. Malformed entries are skipped and counted.
ParseResult parse_records(std::istream& in, RecordFormat format);
ParseResult parse_records_file(const std::string& path, RecordFormat format);

// Case-insensitive substring match after collapsing whitespace runs in both
// keyword and text to single spaces.
bool keyword_matches(std::string_view text, std::string_view keyword);

DocumentSet filter_by_keyword(const std::vector<TweetRecord>& records,
                              const std::string& keyword);

// One {"date":...,"user_id":...,"text":...} object per line.
void write_records_jsonl(std::ostream& out, const std::vector<TweetRecord>& records);
void write_records_jsonl_file(const std::string& path, const std::vector<TweetRecord>& records);

}  // namespace sempat
