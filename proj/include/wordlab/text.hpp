#pragma once

#include <string>
#include <string_view>

#include "wordlab/word.hpp"

namespace wordlab::text {

/// `a`..`z` for x_1..x_26, uppercase for inverses.
char letter_char(Letter l);
std::string format(const Word& w);
std::string format(const CyclicWord& w);
std::string format(const Multiword& m);

/// Thrown on malformed word text; token() names the offending input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::string token)
      : Error(ErrorKind::Parse, what), token_(std::move(token)) {}
  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

/// Parses one word: letters, parenthesised groups and `^k` exponents
/// (k may be negative), e.g. `a(bA)^3B^2`.  The result is freely reduced.
Word parse_word(std::string_view s);
/// Whitespace-separated entries.  Trivial entries are rejected.
Multiword parse_multiword(std::string_view s);

/// Highest basis index used by the text (0 for an empty word).
int max_index(const Word& w);
int max_index(const Multiword& m);

}  // namespace wordlab::text
