#include "sempat/text.hpp"

#include <fstream>

#include "sempat/errors.hpp"

namespace sempat {

TokenList tokenize(std::string_view text) {
  TokenList out;
  std::string cur;
  for (const char ch : text) {
    const unsigned char c = static_cast<unsigned char>(ch);
    if (c >= 'A' && c <= 'Z') {
      cur.push_back(char(c - 'A' + 'a'));
    } else if (c >= 'a' && c <= 'z') {
      cur.push_back(char(c));
    } else if (!cur.empty()) {
      out.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

StopList::StopList(std::vector<std::string> words) {
  for (auto& w : words) words_.insert(std::move(w));
}

StopList StopList::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open stop list: " + path);
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    for (char& c : line)
      if (c >= 'A' && c <= 'Z') c = char(c - 'A' + 'a');
    words.push_back(line);
  }
  return StopList(std::move(words));
}

bool StopList::contains(std::string_view token) const {
  return words_.find(std::string(token)) != words_.end();
}

TokenList remove_stopwords(const TokenList& tokens, const StopList& stops) {
  TokenList out;
  out.reserve(tokens.size());
  for (const auto& t : tokens)
    if (!stops.contains(t)) out.push_back(t);
  return out;
}

}  // namespace sempat
