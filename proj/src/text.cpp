#include "wordlab/text.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace wordlab::text {

char letter_char(Letter l) {
  const char base = l.sign() > 0 ? 'a' : 'A';
  return static_cast<char>(base + l.index() - 1);
}

std::string format(const Word& w) {
  std::string out;
  out.reserve(w.size());
  for (Letter l : w) out.push_back(letter_char(l));
  return out;
}

std::string format(const CyclicWord& w) { return format(w.as_word()); }

std::string format(const Multiword& m) {
  std::string out;
  for (const auto& e : m) {
    if (!out.empty()) out.push_back(' ');
    out += format(e);
  }
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Word parse() {
    auto letters = sequence(0);
    if (pos_ != s_.size()) fail(pos_, "unbalanced ')'");
    return Word(letters);
  }

 private:
  [[noreturn]] void fail(std::size_t at, const std::string& why) const {
    std::string token = at < s_.size() ? std::string(1, s_[at]) : std::string("<end>");
    throw ParseError("cannot parse word at position " + std::to_string(at) +
                         " (token `" + token + "`): " + why,
                     token);
  }

  std::vector<Letter> sequence(int depth) {
    std::vector<Letter> out;
    while (pos_ < s_.size()) {
      const char c = s_[pos_];
      std::vector<Letter> item;
      if (c == '(') {
        const std::size_t open = pos_++;
        item = sequence(depth + 1);
        if (pos_ >= s_.size() || s_[pos_] != ')') fail(open, "missing ')'");
        ++pos_;
      } else if (c == ')') {
        if (depth == 0) fail(pos_, "unbalanced ')'");
        return out;
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        const bool lower = std::islower(static_cast<unsigned char>(c));
        const int index = (lower ? c - 'a' : c - 'A') + 1;
        item.push_back(Letter(index, lower ? 1 : -1));
        ++pos_;
      } else {
        fail(pos_, "unexpected character");
      }
      const int k = exponent();
      const std::size_t reps = static_cast<std::size_t>(k < 0 ? -k : k);
      if (k < 0) {
        std::reverse(item.begin(), item.end());
        for (auto& l : item) l = l.inverse();
      }
      for (std::size_t i = 0; i < reps; ++i) out.insert(out.end(), item.begin(), item.end());
    }
    return out;
  }

  int exponent() {
    if (pos_ >= s_.size() || s_[pos_] != '^') return 1;
    const std::size_t at = ++pos_;
    int k = 0;
    const char* first = s_.data() + pos_;
    const char* last = s_.data() + s_.size();
    auto [ptr, ec] = std::from_chars(first, last, k);
    if (ec != std::errc() || ptr == first) fail(at, "expected integer exponent");
    pos_ += static_cast<std::size_t>(ptr - first);
    return k;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view s) { return Parser(s).parse(); }

Multiword parse_multiword(std::string_view s) {
  std::vector<Word> entries;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) {
      const auto token = s.substr(i, j - i);
      Word w;
      try {
        w = parse_word(token);
      } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()) + " in entry `" + std::string(token) + "`",
                         e.token());
      }
      if (w.empty()) {
        throw ParseError("entry `" + std::string(token) + "` reduces to the identity",
                         std::string(token));
      }
      entries.push_back(std::move(w));
    }
    i = j;
  }
  return Multiword(std::move(entries));
}

int max_index(const Word& w) {
  int out = 0;
  for (Letter l : w) out = std::max(out, l.index());
  return out;
}

int max_index(const Multiword& m) {
  int out = 0;
  for (const auto& e : m) out = std::max(out, max_index(e));
  return out;
}

}  // namespace wordlab::text
