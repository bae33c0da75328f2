#include "sempat/corpus.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "sempat/errors.hpp"

namespace sempat {

namespace {

bool is_ws(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
}

std::string collapse_ws_lower(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool in_ws = true;  // swallow leading whitespace
  for (char c : s) {
    if (is_ws(c)) {
      in_ws = true;
      continue;
    }
    if (in_ws && !out.empty()) out.push_back(' ');
    in_ws = false;
    if (c >= 'A' && c <= 'Z') c = char(c - 'A' + 'a');
    out.push_back(c);
  }
  return out;
}

std::string trim(std::string_view s) {
  size_t a = 0, b = s.size();
  while (a < b && is_ws(s[a])) a++;
  while (b > a && is_ws(s[b - 1])) b--;
  return std::string(s.substr(a, b - a));
}

bool leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

// Builds a record from raw field strings; empty optional means malformed.
std::optional<TweetRecord> make_record(std::string_view date_s,
                                       std::string_view user_s,
                                       std::string_view text_s) {
  const auto date = Date::parse(date_s);
  if (!date) return std::nullopt;
  std::string text = trim(text_s);
  if (text.empty()) return std::nullopt;
  return TweetRecord{*date, std::string(user_s), std::move(text)};
}

ParseResult parse_jsonl(std::istream& in) {
  ParseResult res;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;  // blank lines are not records
    nlohmann::json obj = nlohmann::json::parse(line, nullptr, false);
    if (!obj.is_object() || !obj.contains("date") || !obj.contains("user_id") ||
        !obj.contains("text") || !obj["date"].is_string() || !obj["text"].is_string()) {
      res.skipped++;
      continue;
    }
    std::string user;
    if (obj["user_id"].is_string()) {
      user = obj["user_id"].get<std::string>();
    } else if (obj["user_id"].is_number_integer()) {
      user = std::to_string(obj["user_id"].get<long long>());
    } else {
      res.skipped++;
      continue;
    }
    auto rec = make_record(obj["date"].get<std::string>(), user, obj["text"].get<std::string>());
    if (rec) {
      res.records.push_back(std::move(*rec));
    } else {
      res.skipped++;
    }
  }
  return res;
}

// RFC 4180 field reader; quoted fields may span lines. Returns one row per
// record; a dangling quote at EOF yields a final (malformed) row.
std::vector<std::vector<std::string>> read_csv_rows(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  char c;
  auto end_field = [&] {
    row.push_back(field);
    field.clear();
    quoted = false;
    field_started = false;
  };
  auto end_row = [&] {
    end_field();
    rows.push_back(row);
    row.clear();
  };
  while (in.get(c)) {
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          field.push_back('"');
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field_started && field.empty()) {
          quoted = true;
          field_started = true;
        } else {
          field.push_back(c);  // stray quote inside unquoted field
        }
        break;
      case ',':
        end_field();
        break;
      case '\r':
        break;
      case '\n':
        end_row();
        break;
      default:
        field.push_back(c);
        field_started = true;
    }
  }
  if (field_started || !field.empty() || !row.empty()) end_row();
  return rows;
}

ParseResult parse_csv(std::istream& in) {
  ParseResult res;
  auto rows = read_csv_rows(in);
  if (rows.empty()) throw DataError("csv input has no header row");
  const auto& header = rows.front();
  if (header.size() != 3 || trim(header[0]) != "date" || trim(header[1]) != "user_id" ||
      trim(header[2]) != "text") {
    throw DataError("csv header must be exactly: date,user_id,text");
  }
  for (size_t i = 1; i < rows.size(); i++) {
    const auto& row = rows[i];
    if (row.size() != 3) {
      res.skipped++;
      continue;
    }
    auto rec = make_record(row[0], row[1], row[2]);
    if (rec) {
      res.records.push_back(std::move(*rec));
    } else {
      res.skipped++;
    }
  }
  return res;
}

}  // namespace

std::optional<Date> Date::parse(std::string_view s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return std::nullopt;
  for (size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u})
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
  const int y = (s[0] - '0') * 1000 + (s[1] - '0') * 100 + (s[2] - '0') * 10 + (s[3] - '0');
  const int m = (s[5] - '0') * 10 + (s[6] - '0');
  const int d = (s[8] - '0') * 10 + (s[9] - '0');
  if (m < 1 || m > 12 || d < 1) return std::nullopt;
  static const int days[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  int dmax = days[m - 1];
  if (m == 2 && leap(y)) dmax = 29;
  if (d > dmax) return std::nullopt;
  return Date{y, m, d};
}

std::string Date::to_string() const {
  char buf[11];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
  return std::string(buf);
}

ParseResult parse_records(std::istream& in, RecordFormat format) {
  if (!in) throw DataError("unreadable input stream");
  return format == RecordFormat::kJsonl ? parse_jsonl(in) : parse_csv(in);
}

ParseResult parse_records_file(const std::string& path, RecordFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open input file: " + path);
  return parse_records(in, format);
}

bool keyword_matches(std::string_view text, std::string_view keyword) {
  const std::string t = collapse_ws_lower(text);
  const std::string k = collapse_ws_lower(keyword);
  if (k.empty()) return false;
  return t.find(k) != std::string::npos;
}

DocumentSet filter_by_keyword(const std::vector<TweetRecord>& records,
                              const std::string& keyword) {
  if (trim(keyword).empty()) throw std::invalid_argument("keyword must be non-empty");
  DocumentSet out;
  out.name = keyword;
  for (const auto& r : records)
    if (keyword_matches(r.text, keyword)) out.docs.push_back(r);
  return out;
}

void write_records_jsonl(std::ostream& out, const std::vector<TweetRecord>& records) {
  for (const auto& r : records) {
    nlohmann::json obj{{"date", r.date.to_string()}, {"user_id", r.user_id}, {"text", r.text}};
    out << obj.dump() << "\n";
  }
}

void write_records_jsonl_file(const std::string& path, const std::vector<TweetRecord>& records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open output file: " + path);
  write_records_jsonl(out, records);
}

}  // namespace sempat
