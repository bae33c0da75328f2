#include "sempat/postag.hpp"

#include <fstream>

#include <json.hpp>

#include "sempat/errors.hpp"
#include "sempat/porter.hpp"

namespace sempat {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    if (c >= 'A' && c <= 'Z') c = char(c - 'A' + 'a');
  return out;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

// Strips leading '#'/'@' so "#valentine" and "valentine" are one token.
std::string strip_sigils(std::string_view s) {
  size_t i = 0;
  while (i < s.size() && (s[i] == '#' || s[i] == '@')) i++;
  return std::string(s.substr(i));
}

std::string suffix_tag(const std::string& w) {
  if (w.size() > 3 && ends_with(w, "ly")) return "RB";
  if (w.size() > 4 && ends_with(w, "ing")) return "VBG";
  if (w.size() > 3 && ends_with(w, "ed")) return "VBD";
  if (ends_with(w, "ous") || ends_with(w, "ful") || ends_with(w, "able") ||
      ends_with(w, "ible"))
    return "JJ";
  return "";
}

}  // namespace

Tagger Tagger::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open tag table: " + path);
  Tagger tagger;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    lineno++;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size())
      throw DataError("tag table " + path + ": malformed line " + std::to_string(lineno));
    tagger.table_.emplace(lower(line.substr(0, tab)), line.substr(tab + 1));
  }
  return tagger;
}

std::vector<TaggedToken> Tagger::tag(const std::vector<std::string>& tokens) const {
  std::vector<TaggedToken> out;
  out.reserve(tokens.size());
  for (size_t i = 0; i < tokens.size(); i++) {
    const std::string& raw = tokens[i];
    const std::string norm = lower(strip_sigils(raw));
    std::string tag;
    if (auto it = table_.find(norm); it != table_.end()) {
      tag = it->second;
    } else if (i > 0 && !raw.empty() && raw[0] >= 'A' && raw[0] <= 'Z') {
      tag = "NNP";
    } else if (auto by_suffix = suffix_tag(norm); !by_suffix.empty()) {
      tag = by_suffix;
    } else {
      tag = "NN";
    }
    out.push_back(TaggedToken{raw, std::move(tag)});
  }
  return out;
}

std::vector<std::string> filter_content_words(const std::vector<TaggedToken>& tagged) {
  std::vector<std::string> out;
  for (const auto& t : tagged) {
    if (t.tag.rfind("JJ", 0) == 0 || t.tag.rfind("RB", 0) == 0 || t.tag.rfind("VB", 0) == 0) {
      std::string w = lower(strip_sigils(t.token));
      if (!w.empty()) out.push_back(std::move(w));
    }
  }
  return out;
}

int WordSet::total() const {
  int n = 0;
  for (const auto& [w, c] : counts) n += c;
  return n;
}

namespace {

void accumulate(WordSet& ws, const std::vector<std::string>& content_words,
                const StopList& stops) {
  for (const auto& w : content_words) {
    if (stops.contains(w)) continue;
    ws.add(porter_stem(w));
  }
}

}  // namespace

WordSet build_word_set(const std::vector<TweetRecord>& docs, const std::string& name,
                       const StopList& stops, const Tagger& tagger) {
  WordSet ws;
  ws.name = name;
  for (const auto& doc : docs) {
    const auto tagged = tagger.tag(tokenize(doc.text));
    accumulate(ws, filter_content_words(tagged), stops);
  }
  return ws;
}

WordSet build_word_set_pretagged(const std::vector<std::vector<TaggedToken>>& docs,
                                 const std::string& name, const StopList& stops) {
  WordSet ws;
  ws.name = name;
  for (const auto& tagged : docs) accumulate(ws, filter_content_words(tagged), stops);
  return ws;
}

std::vector<std::vector<TaggedToken>> read_pretagged_jsonl(const std::string& path,
                                                           size_t* skipped) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open pre-tagged input: " + path);
  std::vector<std::vector<TaggedToken>> docs;
  size_t bad = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    nlohmann::json obj = nlohmann::json::parse(line, nullptr, false);
    if (!obj.is_object() || !obj.contains("tagged") || !obj["tagged"].is_array()) {
      bad++;
      continue;
    }
    std::vector<TaggedToken> doc;
    bool ok = true;
    for (const auto& pair : obj["tagged"]) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string()) {
        ok = false;
        break;
      }
      doc.push_back(TaggedToken{pair[0].get<std::string>(), pair[1].get<std::string>()});
    }
    if (ok) {
      docs.push_back(std::move(doc));
    } else {
      bad++;
    }
  }
  if (skipped) *skipped = bad;
  return docs;
}

void write_word_set_file(const std::string& path, const WordSet& ws) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open output file: " + path);
  for (const auto& [word, count] : ws.counts)
    for (int i = 0; i < count; i++) out << word << "\n";
}

WordSet read_word_set_file(const std::string& path, const std::string& name) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open word-set file: " + path);
  WordSet ws;
  ws.name = name;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    ws.add(line);
  }
  return ws;
}

}  // namespace sempat
