#include "wordlab/minimality.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace wordlab {

namespace {

bool in_mask(std::uint64_t mask, Letter l) { return (mask >> l.code()) & 1u; }

std::size_t total_conjugacy_length(std::span<const CyclicWord> m,
                                   const WhiteheadAutomorphism& aut) {
  std::size_t total = 0;
  for (const auto& w : m) total += conjugacy_length(aut.apply(w.as_word()));
  return total;
}

std::size_t total_length(std::span<const CyclicWord> m) {
  std::size_t total = 0;
  for (const auto& w : m) total += w.size();
  return total;
}

const std::vector<WhiteheadAutomorphism>& cached_automorphisms(const Basis& basis) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const std::vector<WhiteheadAutomorphism>>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[basis.rank()];
  if (!slot) {
    slot = std::make_unique<const std::vector<WhiteheadAutomorphism>>(
        all_whitehead_automorphisms(basis));
  }
  return *slot;
}

}  // namespace

WhiteheadAutomorphism WhiteheadAutomorphism::type1(std::vector<Letter> images) {
  const int r = static_cast<int>(images.size());
  std::vector<bool> seen(static_cast<std::size_t>(r) + 1, false);
  for (Letter l : images) {
    if (l.index() > r || seen[static_cast<std::size_t>(l.index())]) {
      throw Error(ErrorKind::InvalidArgument, "type 1 images must permute the basis");
    }
    seen[static_cast<std::size_t>(l.index())] = true;
  }
  WhiteheadAutomorphism aut;
  aut.kind_ = Kind::Type1;
  for (Letter l : images) aut.images_.push_back(Word{l});
  aut.fill_inverse_images();
  return aut;
}

WhiteheadAutomorphism WhiteheadAutomorphism::type2(Letter multiplier,
                                                   std::span<const Letter> set,
                                                   const Basis& basis) {
  std::uint64_t mask = 0;
  for (Letter l : set) {
    if (l.index() > basis.rank()) {
      throw Error(ErrorKind::InvalidArgument, "type 2 set letter outside basis");
    }
    mask |= std::uint64_t{1} << l.code();
  }
  if (multiplier.index() > basis.rank() || !in_mask(mask, multiplier) ||
      in_mask(mask, multiplier.inverse())) {
    throw Error(ErrorKind::InvalidArgument,
                "type 2 set must contain the multiplier and not its inverse");
  }
  WhiteheadAutomorphism aut;
  aut.kind_ = Kind::Type2;
  aut.multiplier_ = multiplier;
  aut.set_mask_ = mask;
  const Word a{multiplier};
  const Word a_inv{multiplier.inverse()};
  for (int i = 1; i <= basis.rank(); ++i) {
    const Letter xi = x(i);
    const Word base{xi};
    if (i == multiplier.index()) {
      aut.images_.push_back(base);
      continue;
    }
    const bool fwd = in_mask(mask, xi);
    const bool bwd = in_mask(mask, xi.inverse());
    Word img = base;
    if (bwd) img = a_inv * img;
    if (fwd) img = img * a;
    aut.images_.push_back(std::move(img));
  }
  aut.fill_inverse_images();
  return aut;
}

void WhiteheadAutomorphism::fill_inverse_images() {
  inverse_images_.clear();
  for (const auto& img : images_) inverse_images_.push_back(img.inverse());
}

const Word& WhiteheadAutomorphism::image(Letter l) const {
  if (l.index() > rank()) {
    throw Error(ErrorKind::InvalidArgument, "letter outside automorphism rank");
  }
  const auto i = static_cast<std::size_t>(l.index() - 1);
  return l.sign() > 0 ? images_[i] : inverse_images_[i];
}

Word WhiteheadAutomorphism::apply(const Word& w) const {
  std::vector<Letter> raw;
  raw.reserve(w.size() * 3);
  for (Letter l : w) {
    const auto img = image(l).letters();
    raw.insert(raw.end(), img.begin(), img.end());
  }
  return free_reduce(raw);
}

std::vector<WhiteheadAutomorphism> all_whitehead_automorphisms(const Basis& basis) {
  std::vector<WhiteheadAutomorphism> out;
  const int letters = basis.letter_count();
  for (int c = 0; c < letters; ++c) {
    const Letter a = Letter::from_code(c);
    std::vector<Letter> others;
    for (int d = 0; d < letters; ++d) {
      if (Letter::from_code(d).index() != a.index()) others.push_back(Letter::from_code(d));
    }
    const std::uint64_t subsets = std::uint64_t{1} << others.size();
    for (std::uint64_t bits = 0; bits < subsets; ++bits) {
      std::vector<Letter> set{a};
      for (std::size_t k = 0; k < others.size(); ++k) {
        if ((bits >> k) & 1u) set.push_back(others[k]);
      }
      out.push_back(WhiteheadAutomorphism::type2(a, set, basis));
    }
  }
  return out;
}

std::vector<WhiteheadAutomorphism> all_signed_permutations(const Basis& basis) {
  std::vector<int> perm(static_cast<std::size_t>(basis.rank()));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<WhiteheadAutomorphism> out;
  do {
    for (std::uint32_t signs = 0; signs < (1u << basis.rank()); ++signs) {
      std::vector<Letter> images;
      for (std::size_t i = 0; i < perm.size(); ++i) {
        images.push_back(Letter(perm[i], ((signs >> i) & 1u) ? -1 : 1));
      }
      out.push_back(WhiteheadAutomorphism::type1(std::move(images)));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::size_t conjugacy_length(const Word& w) { return cyclic_reduce(w).core.size(); }

Basis inferred_basis(const Multiword& m) {
  int r = 2;
  for (const auto& e : m) {
    for (Letter l : e) r = std::max(r, l.index());
  }
  return Basis(r);
}

bool is_whitehead_minimal(std::span<const CyclicWord> m, const Basis& basis) {
  const std::size_t current = total_length(m);
  for (const auto& aut : cached_automorphisms(basis)) {
    if (total_conjugacy_length(m, aut) < current) return false;
  }
  return true;
}

bool is_whitehead_minimal(const Multiword& m, const Basis& basis) {
  const auto cores = m.cyclic_cores();
  return is_whitehead_minimal(std::span<const CyclicWord>(cores), basis);
}

bool is_whitehead_minimal(const Multiword& m) {
  return is_whitehead_minimal(m, inferred_basis(m));
}

Minimization minimize(const Multiword& m, const Basis& basis) {
  Minimization out{m.cyclic_cores(), {}};
  const auto& autos = cached_automorphisms(basis);
  std::size_t current = total_length(out.result);
  bool improved = true;
  while (improved) {
    improved = false;
    for (const auto& aut : autos) {
      if (total_conjugacy_length(out.result, aut) < current) {
        for (auto& w : out.result) w = CyclicWord::of(aut.apply(w.as_word()));
        current = total_length(out.result);
        out.applied.push_back(aut);
        improved = true;
        break;
      }
    }
  }
  return out;
}

Minimization minimize(const Multiword& m) { return minimize(m, inferred_basis(m)); }

}  // namespace wordlab
