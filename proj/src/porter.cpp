// Porter stemmer, faithful to the 1980 rule tables. The word lives in a
// buffer with k = index of its last character and j = index of the last
// character of the stem once a candidate suffix has matched; rule
// conditions (measure, *v*, *d, *o) are evaluated on b[0..j]. Within a
// step only the longest matching suffix is considered; if its condition
// fails, the step makes no change.

#include "sempat/porter.hpp"

#include <cstring>

namespace sempat {

namespace {

class Stemmer {
 public:
  explicit Stemmer(std::string_view word) : b_(word), k_(int(word.size()) - 1), j_(0) {}

  std::string run() {
    if (k_ <= 0) return b_;  // zero- or one-letter words have no suffix
    step1ab();
    step1c();
    step2();
    step3();
    step4();
    step5();
    return b_.substr(0, size_t(k_ + 1));
  }

 private:
  std::string b_;
  int k_;
  int j_;

  bool cons(int i) const {
    switch (b_[size_t(i)]) {
      case 'a': case 'e': case 'i': case 'o': case 'u':
        return false;
      case 'y':
        return i == 0 ? true : !cons(i - 1);
      default:
        return true;
    }
  }

  // measure of b[0..j]: the m in [C](VC)^m[V]
  int m() const {
    int n = 0;
    int i = 0;
    while (true) {
      if (i > j_) return n;
      if (!cons(i)) break;
      i++;
    }
    i++;
    while (true) {
      while (true) {
        if (i > j_) return n;
        if (cons(i)) break;
        i++;
      }
      i++;
      n++;
      while (true) {
        if (i > j_) return n;
        if (!cons(i)) break;
        i++;
      }
      i++;
    }
  }

  bool double_cons(int i) const {
    return i >= 1 && b_[size_t(i)] == b_[size_t(i - 1)] && cons(i);
  }

  // *o: b[i-2..i] is cvc and the final consonant is not w, x or y
  bool cvc(int i) const {
    if (i < 2 || !cons(i) || cons(i - 1) || !cons(i - 2)) return false;
    const char c = b_[size_t(i)];
    return c != 'w' && c != 'x' && c != 'y';
  }

  bool ends(const char* s) {
    const int len = int(std::strlen(s));
    if (len > k_ + 1) return false;
    if (b_.compare(size_t(k_ - len + 1), size_t(len), s) != 0) return false;
    j_ = k_ - len;  // only a successful match moves j
    return true;
  }

  void set_to(const char* s) {
    const int len = int(std::strlen(s));
    b_.replace(size_t(j_ + 1), size_t(k_ - j_), s);
    k_ = j_ + len;
  }

  void step1ab() {
    if (b_[size_t(k_)] == 's') {
      if (ends("sses")) {
        k_ -= 2;
      } else if (ends("ies")) {
        set_to("i");
      } else if (k_ >= 1 && b_[size_t(k_ - 1)] != 's') {
        k_--;
      }
    }
    if (ends("eed")) {
      if (m() > 0) k_--;
    } else if ((ends("ed") || ends("ing")) && has_vowel_before_j()) {
      k_ = j_;
      if (ends("at")) {
        set_to("ate");
      } else if (ends("bl")) {
        set_to("ble");
      } else if (ends("iz")) {
        set_to("ize");
      } else if (double_cons(k_)) {
        const char c = b_[size_t(k_)];
        if (c != 'l' && c != 's' && c != 'z') k_--;
      } else if (m() == 1 && cvc(k_)) {
        set_to("e");
      }
    }
  }

  bool has_vowel_before_j() const {
    for (int i = 0; i <= j_; i++)
      if (!cons(i)) return true;
    return false;
  }

  void step1c() {
    if (ends("y") && has_vowel_before_j()) b_[size_t(k_)] = 'i';
  }

  struct Rule {
    const char* suffix;
    const char* replacement;
  };

  // Longest matching suffix in the table decides; fires only when the
  // stem's measure is positive.
  void apply_table(const Rule* rules, int count) {
    int best = -1;
    size_t best_len = 0;
    for (int i = 0; i < count; i++) {
      const size_t len = std::strlen(rules[i].suffix);
      if (len > best_len && len <= size_t(k_ + 1) &&
          b_.compare(size_t(k_ + 1) - len, len, rules[i].suffix) == 0) {
        best = i;
        best_len = len;
      }
    }
    if (best < 0) return;
    j_ = k_ - int(best_len);
    if (m() > 0) set_to(rules[best].replacement);
  }

  void step2() {
    static const Rule rules[] = {
        {"ational", "ate"}, {"ization", "ize"}, {"iveness", "ive"},
        {"fulness", "ful"}, {"ousness", "ous"}, {"tional", "tion"},
        {"biliti", "ble"},  {"entli", "ent"},   {"ousli", "ous"},
        {"ation", "ate"},   {"alism", "al"},    {"aliti", "al"},
        {"iviti", "ive"},   {"enci", "ence"},   {"anci", "ance"},
        {"izer", "ize"},    {"abli", "able"},   {"alli", "al"},
        {"ator", "ate"},    {"eli", "e"},
    };
    apply_table(rules, int(sizeof(rules) / sizeof(rules[0])));
  }

  void step3() {
    static const Rule rules[] = {
        {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
        {"ical", "ic"},  {"ness", ""},  {"ful", ""},
    };
    apply_table(rules, int(sizeof(rules) / sizeof(rules[0])));
  }

  void step4() {
    static const Rule rules[] = {
        {"ement", ""}, {"ance", ""}, {"ence", ""}, {"able", ""},
        {"ible", ""},  {"ment", ""}, {"ion", ""},  {"ant", ""},
        {"ent", ""},   {"ism", ""},  {"ate", ""},  {"iti", ""},
        {"ous", ""},   {"ive", ""},  {"ize", ""},  {"al", ""},
        {"er", ""},    {"ic", ""},   {"ou", ""},
    };
    int best = -1;
    size_t best_len = 0;
    for (int i = 0; i < int(sizeof(rules) / sizeof(rules[0])); i++) {
      const size_t len = std::strlen(rules[i].suffix);
      if (len > best_len && len <= size_t(k_ + 1) &&
          b_.compare(size_t(k_ + 1) - len, len, rules[i].suffix) == 0) {
        best = i;
        best_len = len;
      }
    }
    if (best < 0) return;
    j_ = k_ - int(best_len);
    if (m() <= 1) return;
    if (std::strcmp(rules[best].suffix, "ion") == 0) {
      const char c = j_ >= 0 ? b_[size_t(j_)] : '\0';
      if (c != 's' && c != 't') return;  // (m>1 and (*S or *T)) ION ->
    }
    set_to("");
  }

  void step5() {
    j_ = k_;
    if (b_[size_t(k_)] == 'e') {
      const int a = m();
      if (a > 1 || (a == 1 && !cvc(k_ - 1))) k_--;
    }
    j_ = k_;
    if (b_[size_t(k_)] == 'l' && double_cons(k_) && m() > 1) k_--;
  }
};

}  // namespace

std::string porter_stem(std::string_view token) {
  if (token.empty()) return std::string();
  return Stemmer(token).run();
}

}  // namespace sempat
