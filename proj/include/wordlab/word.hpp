#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "wordlab/error.hpp"

namespace wordlab {

/// Free basis x_1..x_r of fixed rank r >= 2.
class Basis {
 public:
  explicit Basis(int rank);

  int rank() const noexcept { return rank_; }
  /// Number of letters x_i^{+-1}, i.e. 2r.
  int letter_count() const noexcept { return 2 * rank_; }

 private:
  int rank_;
};

/// A basis letter x_i or its inverse.  Letters are ordered by index first
/// and then with the positive letter before its inverse; code() is the
/// position in that order (0..2r-1).
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(int index, int sign)
      : value_(static_cast<std::int8_t>(sign < 0 ? -index : index)) {}

  static constexpr Letter from_code(int code) {
    return Letter(code / 2 + 1, (code % 2) ? -1 : 1);
  }

  constexpr int index() const noexcept { return value_ < 0 ? -value_ : value_; }
  constexpr int sign() const noexcept { return value_ < 0 ? -1 : 1; }
  constexpr int code() const noexcept {
    return 2 * (index() - 1) + (value_ < 0 ? 1 : 0);
  }
  constexpr Letter inverse() const noexcept {
    Letter l;
    l.value_ = static_cast<std::int8_t>(-value_);
    return l;
  }
  constexpr bool is_inverse_of(Letter other) const noexcept {
    return value_ == -other.value_;
  }

  constexpr bool operator==(const Letter&) const = default;
  constexpr std::strong_ordering operator<=>(const Letter& o) const noexcept {
    return code() <=> o.code();
  }

 private:
  std::int8_t value_ = 1;
};

/// Freely reduced word.  The invariant is established by every constructor.
class Word {
 public:
  Word() = default;
  /// Freely reduces the given letter sequence.
  explicit Word(std::span<const Letter> raw);
  Word(std::initializer_list<Letter> raw);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  std::span<const Letter> letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  Word inverse() const;
  /// Product in F: concatenation followed by free reduction.
  friend Word operator*(const Word& lhs, const Word& rhs);

  bool operator==(const Word&) const = default;
  std::strong_ordering operator<=>(const Word& o) const;

  /// Builds from letters the caller guarantees to be freely reduced.
  static Word from_reduced(std::vector<Letter> letters);

 private:
  std::vector<Letter> letters_;
};

Word free_reduce(std::span<const Letter> raw);

/// Power u^k in F (k may be negative).
Word power(const Word& u, int k);

bool is_cyclically_reduced(const Word& w) noexcept;

struct CyclicReduction {
  /// Cyclically reduced, unrotated; empty iff w is trivial.
  Word core;
  Word conjugator;
};

/// Writes w = conjugator * core * conjugator^-1.
CyclicReduction cyclic_reduce(const Word& w);

/// Nonempty cyclically reduced word stored as its least rotation, so equal
/// cyclic words compare equal as sequences.
class CyclicWord {
 public:
  /// Throws if w is empty or not cyclically reduced.
  explicit CyclicWord(const Word& w);
  CyclicWord(std::initializer_list<Letter> letters);

  /// Canonical cyclic word of the conjugacy class of w; throws on trivial w.
  static CyclicWord of(const Word& w);

  std::size_t size() const noexcept { return letters_.size(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  /// Letter at position i read cyclically (any integer i).
  Letter at_cyclic(std::int64_t i) const;
  std::span<const Letter> letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  Word as_word() const { return Word::from_reduced(letters_); }
  CyclicWord inverse() const;

  bool operator==(const CyclicWord&) const = default;
  std::strong_ordering operator<=>(const CyclicWord& o) const;

 private:
  CyclicWord() = default;
  std::vector<Letter> letters_;
};

/// Finite collection of nonempty words, multiplicity allowed.
class Multiword {
 public:
  Multiword() = default;
  explicit Multiword(std::vector<Word> entries);
  Multiword(std::initializer_list<Word> entries);

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const Word& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Word> entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  /// Cyclic cores of all entries, in entry order.
  std::vector<CyclicWord> cyclic_cores() const;

 private:
  std::vector<Word> entries_;
};

struct Syllable {
  int index = 1;
  int exponent = 1;
  bool operator==(const Syllable&) const = default;
};

/// Drops the first and last ceil(|w|/3) letters; requires |w| >= 5.
Word middle_third(const Word& w);

bool contains_subword(std::span<const Letter> w, std::span<const Letter> t);
inline bool contains_subword(const Word& w, const Word& t) {
  return contains_subword(w.letters(), t.letters());
}

/// The free reduction of t occurs in c^k, c the cyclic core of w and
/// k = ceil(|t|/|c|) + 1.  Throws if w is trivial.
bool cyclically_contains(const Word& w, const Word& t);
bool cyclically_contains(const CyclicWord& c, const Word& t);

/// Syllables of the cyclic word; a run across the seam is one syllable.
std::vector<Syllable> syllables(const CyclicWord& w);
std::set<int> distinct_abs_powers(const CyclicWord& w, int index);

bool is_proper_power(const CyclicWord& w);
bool conjugate_cyclic(const CyclicWord& u, const CyclicWord& v);
bool is_unramified(const Multiword& m);

/// 2r(2r-1)^(n-1); throws ErrorKind::Overflow when it does not fit.
std::uint64_t sphere_count(int rank, int length);
/// Number of cyclically reduced words of length n: (2r-1)^n + (r-1)(-1)^n + r.
std::uint64_t cyclic_sphere_count(int rank, int length);

/// Letter helpers used throughout: x_i and x_i^-1.
constexpr Letter x(int i) { return Letter(i, 1); }
constexpr Letter x_inv(int i) { return Letter(i, -1); }

}  // namespace wordlab
