#include "wordlab/word.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace wordlab {

Basis::Basis(int rank) : rank_(rank) {
  if (rank < 2 || rank > 26) {
    throw Error(ErrorKind::InvalidArgument,
                "basis rank must be in 2..26, got " + std::to_string(rank));
  }
}

Word free_reduce(std::span<const Letter> raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter l : raw) {
    if (!out.empty() && out.back().is_inverse_of(l)) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word::from_reduced(std::move(out));
}

Word::Word(std::span<const Letter> raw) : letters_(free_reduce(raw).letters_) {}

Word::Word(std::initializer_list<Letter> raw)
    : Word(std::span<const Letter>(raw.begin(), raw.size())) {}

Word Word::from_reduced(std::vector<Letter> letters) {
  Word w;
  w.letters_ = std::move(letters);
  return w;
}

Word Word::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l = l.inverse();
  return from_reduced(std::move(out));
}

Word operator*(const Word& lhs, const Word& rhs) {
  std::size_t cancel = 0;
  const std::size_t n = lhs.size();
  while (cancel < n && cancel < rhs.size() &&
         lhs[n - 1 - cancel].is_inverse_of(rhs[cancel])) {
    ++cancel;
  }
  std::vector<Letter> out;
  out.reserve(n + rhs.size() - 2 * cancel);
  out.insert(out.end(), lhs.letters_.begin(), lhs.letters_.end() - cancel);
  out.insert(out.end(), rhs.letters_.begin() + cancel, rhs.letters_.end());
  return Word::from_reduced(std::move(out));
}

std::strong_ordering Word::operator<=>(const Word& o) const {
  return std::lexicographical_compare_three_way(
      letters_.begin(), letters_.end(), o.letters_.begin(), o.letters_.end());
}

Word power(const Word& u, int k) {
  const Word base = k < 0 ? u.inverse() : u;
  Word out;
  for (int i = 0; i < (k < 0 ? -k : k); ++i) out = out * base;
  return out;
}

bool is_cyclically_reduced(const Word& w) noexcept {
  return w.size() < 2 || !w.back().is_inverse_of(w.front());
}

CyclicReduction cyclic_reduce(const Word& w) {
  std::size_t peel = 0;
  const std::size_t n = w.size();
  while (2 * peel + 1 < n && w[n - 1 - peel].is_inverse_of(w[peel])) ++peel;
  auto letters = w.letters();
  return CyclicReduction{
      Word::from_reduced({letters.begin() + peel, letters.end() - peel}),
      Word::from_reduced({letters.begin(), letters.begin() + peel})};
}

namespace {

std::vector<Letter> least_rotation(std::span<const Letter> s) {
  const std::size_t n = s.size();
  std::size_t best = 0;
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      const Letter a = s[(r + i) % n];
      const Letter b = s[(best + i) % n];
      if (a != b) {
        if (a < b) best = r;
        break;
      }
    }
  }
  std::vector<Letter> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(s[(best + i) % n]);
  return out;
}

}  // namespace

CyclicWord::CyclicWord(const Word& w) {
  if (w.empty()) {
    throw Error(ErrorKind::InvalidArgument, "cyclic word must be nontrivial");
  }
  if (!is_cyclically_reduced(w)) {
    throw Error(ErrorKind::InvalidArgument, "word is not cyclically reduced");
  }
  letters_ = least_rotation(w.letters());
}

CyclicWord::CyclicWord(std::initializer_list<Letter> letters)
    : CyclicWord(Word(letters)) {}

CyclicWord CyclicWord::of(const Word& w) {
  return CyclicWord(cyclic_reduce(w).core);
}

Letter CyclicWord::at_cyclic(std::int64_t i) const {
  const auto n = static_cast<std::int64_t>(letters_.size());
  return letters_[static_cast<std::size_t>(((i % n) + n) % n)];
}

CyclicWord CyclicWord::inverse() const { return CyclicWord(as_word().inverse()); }

std::strong_ordering CyclicWord::operator<=>(const CyclicWord& o) const {
  return std::lexicographical_compare_three_way(
      letters_.begin(), letters_.end(), o.letters_.begin(), o.letters_.end());
}

Multiword::Multiword(std::vector<Word> entries) : entries_(std::move(entries)) {
  for (const auto& e : entries_) {
    if (e.empty()) {
      throw Error(ErrorKind::InvalidArgument, "multiword entries must be nontrivial");
    }
  }
}

Multiword::Multiword(std::initializer_list<Word> entries)
    : Multiword(std::vector<Word>(entries)) {}

std::vector<CyclicWord> Multiword::cyclic_cores() const {
  std::vector<CyclicWord> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(CyclicWord::of(e));
  return out;
}

Word middle_third(const Word& w) {
  const std::size_t l = w.size();
  if (l < 5) {
    throw Error(ErrorKind::Precondition,
                "middle third needs length >= 5, got " + std::to_string(l));
  }
  const std::size_t cut = (l + 2) / 3;
  auto letters = w.letters();
  return Word::from_reduced({letters.begin() + cut, letters.end() - cut});
}

bool contains_subword(std::span<const Letter> w, std::span<const Letter> t) {
  if (t.empty()) {
    throw Error(ErrorKind::Precondition, "subword pattern must be nonempty");
  }
  return std::search(w.begin(), w.end(), t.begin(), t.end()) != w.end();
}

bool cyclically_contains(const CyclicWord& c, const Word& t) {
  if (t.empty()) {
    throw Error(ErrorKind::Precondition, "subword pattern must be nonempty");
  }
  const std::size_t n = c.size();
  const std::size_t k = (t.size() + n - 1) / n + 1;
  std::vector<Letter> buf;
  buf.reserve(n * k);
  for (std::size_t i = 0; i < k; ++i) {
    buf.insert(buf.end(), c.begin(), c.end());
  }
  return contains_subword(buf, t.letters());
}

bool cyclically_contains(const Word& w, const Word& t) {
  auto core = cyclic_reduce(w).core;
  if (core.empty()) {
    throw Error(ErrorKind::Precondition,
                "cyclic containment needs a nontrivial word");
  }
  return cyclically_contains(CyclicWord(core), t);
}

std::vector<Syllable> syllables(const CyclicWord& w) {
  const std::size_t n = w.size();
  // Start right after an index change so no run crosses the seam.
  std::size_t start = 0;
  while (start < n && w[start].index() == w[(start + n - 1) % n].index()) ++start;
  if (start == n) {
    return {Syllable{w[0].index(), w[0].sign() * static_cast<int>(n)}};
  }
  std::vector<Syllable> out;
  for (std::size_t i = 0; i < n; ++i) {
    const Letter l = w[(start + i) % n];
    if (!out.empty() && out.back().index == l.index()) {
      out.back().exponent += l.sign();
    } else {
      out.push_back(Syllable{l.index(), l.sign()});
    }
  }
  return out;
}

std::set<int> distinct_abs_powers(const CyclicWord& w, int index) {
  std::set<int> out;
  for (const auto& s : syllables(w)) {
    if (s.index == index) out.insert(s.exponent < 0 ? -s.exponent : s.exponent);
  }
  return out;
}

bool is_proper_power(const CyclicWord& w) {
  const std::size_t n = w.size();
  for (std::size_t period = 1; period < n; ++period) {
    if (n % period != 0) continue;
    bool periodic = true;
    for (std::size_t i = period; i < n && periodic; ++i) {
      periodic = w[i] == w[i - period];
    }
    if (periodic) return true;
  }
  return false;
}

bool conjugate_cyclic(const CyclicWord& u, const CyclicWord& v) { return u == v; }

bool is_unramified(const Multiword& m) {
  const auto cores = m.cyclic_cores();
  for (std::size_t i = 0; i < cores.size(); ++i) {
    if (is_proper_power(cores[i])) return false;
    const CyclicWord inv = cores[i].inverse();
    for (std::size_t j = i + 1; j < cores.size(); ++j) {
      if (conjugate_cyclic(cores[i], cores[j]) || conjugate_cyclic(inv, cores[j])) {
        return false;
      }
    }
  }
  return true;
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b) {
    throw Error(ErrorKind::Overflow, "word count exceeds 64-bit range");
  }
  return a * b;
}

std::uint64_t checked_pow(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

}  // namespace

std::uint64_t sphere_count(int rank, int length) {
  Basis basis(rank);
  if (length < 1) {
    throw Error(ErrorKind::Precondition, "sphere length must be >= 1");
  }
  const std::uint64_t q = static_cast<std::uint64_t>(2 * basis.rank() - 1);
  return checked_mul(static_cast<std::uint64_t>(2 * basis.rank()),
                     checked_pow(q, length - 1));
}

std::uint64_t cyclic_sphere_count(int rank, int length) {
  Basis basis(rank);
  if (length < 1) {
    throw Error(ErrorKind::Precondition, "sphere length must be >= 1");
  }
  const auto r = static_cast<std::uint64_t>(basis.rank());
  const std::uint64_t main = checked_pow(2 * r - 1, length);
  // (r-1)(-1)^n + r is 1 for odd n and 2r-1 for even n.
  const std::uint64_t tail = (length % 2 == 0) ? 2 * r - 1 : 1;
  if (main > std::numeric_limits<std::uint64_t>::max() - tail) {
    throw Error(ErrorKind::Overflow, "word count exceeds 64-bit range");
  }
  return main + tail;
}

}  // namespace wordlab
