#pragma once

#include <random>
#include <vector>

#include "wordlab/text.hpp"
#include "wordlab/word.hpp"

namespace test {

inline wordlab::Word W(const char* s) { return wordlab::text::parse_word(s); }
inline wordlab::CyclicWord C(const char* s) { return wordlab::CyclicWord(W(s)); }

inline std::vector<wordlab::Letter> random_raw(int rank, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 2 * rank - 1);
  std::vector<wordlab::Letter> out(n);
  for (auto& l : out) l = wordlab::Letter::from_code(pick(rng));
  return out;
}

inline wordlab::Word random_word(int rank, std::size_t n, std::mt19937_64& rng) {
  return wordlab::free_reduce(random_raw(rank, n, rng));
}

/// Cyclically reduced word of exact length n, by rejection on the seam.
inline wordlab::Word random_cyclic(int rank, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 2 * rank - 1);
  for (;;) {
    std::vector<wordlab::Letter> out;
    while (out.size() < n) {
      const auto l = wordlab::Letter::from_code(pick(rng));
      if (out.empty() || !l.is_inverse_of(out.back())) out.push_back(l);
    }
    if (n == 1 || !out.back().is_inverse_of(out.front())) return wordlab::Word(out);
  }
}

/// Plain O(n^2) substring oracle.
inline bool naive_contains(const std::vector<wordlab::Letter>& hay,
                           const std::vector<wordlab::Letter>& needle) {
  if (needle.size() > hay.size()) return false;
  for (std::size_t i = 0; i + needle.size() <= hay.size(); ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < needle.size() && ok; ++j) ok = hay[i + j] == needle[j];
    if (ok) return true;
  }
  return false;
}

}  // namespace test
