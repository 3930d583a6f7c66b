#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wordlab/word.hpp"

namespace wordlab {

/// Whitehead automorphism.
///
/// Type 1 is a signed permutation of the basis, given by the images of
/// x_1..x_r.  Type 2 is a pair (a, A) with a in A and a^-1 not in A; on a
/// basis letter x other than a^{+-1} it acts by
///
///   x -> a^-1 x a   if x, x^-1 in A
///   x -> x a        if only x in A
///   x -> a^-1 x     if only x^-1 in A
///   x -> x          otherwise
///
/// and it fixes a.
class WhiteheadAutomorphism {
 public:
  enum class Kind { Type1, Type2 };

  /// images[i] is the image of x_{i+1}; must be a signed permutation.
  static WhiteheadAutomorphism type1(std::vector<Letter> images);
  /// `set` must contain the multiplier and not its inverse.
  static WhiteheadAutomorphism type2(Letter multiplier, std::span<const Letter> set,
                                     const Basis& basis);

  Kind kind() const noexcept { return kind_; }
  int rank() const noexcept { return static_cast<int>(images_.size()); }
  Letter multiplier() const noexcept { return multiplier_; }
  /// Letters of A as a bitmask over Letter::code().
  std::uint64_t set_mask() const noexcept { return set_mask_; }

  /// Image of a single letter.
  const Word& image(Letter l) const;
  Word apply(const Word& w) const;

 private:
  WhiteheadAutomorphism() = default;
  void fill_inverse_images();

  Kind kind_ = Kind::Type1;
  Letter multiplier_;
  std::uint64_t set_mask_ = 0;
  std::vector<Word> images_;          // x_1..x_r
  std::vector<Word> inverse_images_;  // x_1^-1..x_r^-1
};

inline Word apply(const WhiteheadAutomorphism& aut, const Word& w) { return aut.apply(w); }

/// Every type-2 automorphism: multipliers in letter order, and for each the
/// 2^{2r-2} subsets of the remaining letters by binary counter.
std::vector<WhiteheadAutomorphism> all_whitehead_automorphisms(const Basis& basis);

/// Every signed permutation of the basis (2^r r! of them).
std::vector<WhiteheadAutomorphism> all_signed_permutations(const Basis& basis);

/// |[w]|, the length of the cyclic core.
std::size_t conjugacy_length(const Word& w);

/// No type-2 automorphism strictly shortens the total conjugacy length.
bool is_whitehead_minimal(std::span<const CyclicWord> m, const Basis& basis);
bool is_whitehead_minimal(const Multiword& m, const Basis& basis);
/// Basis rank inferred from the letters used (at least 2).
bool is_whitehead_minimal(const Multiword& m);

struct Minimization {
  std::vector<CyclicWord> result;
  std::vector<WhiteheadAutomorphism> applied;
};

/// Greedy descent: repeatedly applies the first automorphism (in the
/// all_whitehead_automorphisms order) that strictly shortens the total
/// conjugacy length.
Minimization minimize(const Multiword& m, const Basis& basis);
Minimization minimize(const Multiword& m);

/// max(2, highest basis index used).
Basis inferred_basis(const Multiword& m);

}  // namespace wordlab
