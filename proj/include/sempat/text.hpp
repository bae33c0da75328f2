#pragma once

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace sempat {

using TokenList = std::vector<std::string>;

// Lowercases and splits on everything that is not an ASCII letter: digits,
// punctuation, emoji, hashtag/mention sigils and non-ASCII letters all act
// as separators, so every token matches [a-z]+.
TokenList tokenize(std::string_view text);

// Exact-match stop word set over normalized tokens.
class StopList {
 public:
  StopList() = default;
  explicit StopList(std::vector<std::string> words);

  // Plain text, one word per line; '#' lines are comments.
  static StopList load(const std::string& path);

  bool contains(std::string_view token) const;
  size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

// Keeps exactly the tokens not present in `stops`, in order.
TokenList remove_stopwords(const TokenList& tokens, const StopList& stops);

}  // namespace sempat
