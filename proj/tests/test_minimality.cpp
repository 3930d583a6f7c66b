#include <doctest.h>

#include "oracles.hpp"
#include "support.hpp"
#include "wordlab/minimality.hpp"

using namespace wordlab;
using test::C;
using test::W;

TEST_CASE("apply examples") {
  const Basis r2(2);
  const std::vector<Letter> set1{x(2), x(1)};
  const auto t = WhiteheadAutomorphism::type2(x(2), set1, r2);
  CHECK(t.apply(W("a")) == W("ab"));
  CHECK(t.apply(W("b")) == W("b"));

  const auto id = WhiteheadAutomorphism::type1({x(1), x(2)});
  CHECK(id.apply(W("abAAbab")) == W("abAAbab"));

  const std::vector<Letter> set2{x_inv(2), x(1)};
  const auto u = WhiteheadAutomorphism::type2(x_inv(2), set2, r2);
  CHECK(u.apply(W("ab")) == W("a"));

  // Both x and x^-1 in A conjugates.
  const std::vector<Letter> set3{x(2), x(1), x_inv(1)};
  const auto v = WhiteheadAutomorphism::type2(x(2), set3, r2);
  CHECK(v.apply(W("a")) == W("Bab"));
  const std::vector<Letter> set4{x(2), x_inv(1)};
  CHECK(WhiteheadAutomorphism::type2(x(2), set4, r2).apply(W("a")) == W("Ba"));
}

TEST_CASE("automorphism validation") {
  const Basis r2(2);
  const std::vector<Letter> bad{x(1), x_inv(1)};
  CHECK_THROWS(WhiteheadAutomorphism::type2(x(1), bad, r2));
  const std::vector<Letter> missing{x(2)};
  CHECK_THROWS(WhiteheadAutomorphism::type2(x(1), missing, r2));
  CHECK_THROWS(WhiteheadAutomorphism::type1({x(1), x_inv(1)}));
}

TEST_CASE("automorphism counts") {
  CHECK(all_whitehead_automorphisms(Basis(2)).size() == 16);
  CHECK(all_whitehead_automorphisms(Basis(3)).size() == 96);
  CHECK(all_whitehead_automorphisms(Basis(4)).size() == 512);
  CHECK(all_signed_permutations(Basis(2)).size() == 8);
  CHECK(all_signed_permutations(Basis(3)).size() == 48);
  const auto auts = all_whitehead_automorphisms(Basis(2));
  CHECK(auts.front().multiplier() == x(1));
  CHECK(auts.back().multiplier() == x_inv(2));
}

TEST_CASE("type 2 automorphisms are invertible") {
  // (a, A) composed with (a^-1, A - a + a^-1) is the identity.
  const Basis r3(3);
  for (const auto& aut : all_whitehead_automorphisms(r3)) {
    const Letter a = aut.multiplier();
    std::vector<Letter> inv_set{a.inverse()};
    for (int c = 0; c < 6; ++c) {
      const Letter l = Letter::from_code(c);
      if ((aut.set_mask() >> c & 1) && l != a) inv_set.push_back(l);
    }
    const auto back = WhiteheadAutomorphism::type2(a.inverse(), inv_set, r3);
    for (int i = 1; i <= 3; ++i) CHECK(back.apply(aut.apply(Word{x(i)})) == Word{x(i)});
  }
}

TEST_CASE("apply respects composition") {
  std::mt19937_64 rng(20);
  const Basis r3(3);
  auto moves = all_whitehead_automorphisms(r3);
  for (auto& p : all_signed_permutations(r3)) moves.push_back(p);
  for (int trial = 0; trial < 300; ++trial) {
    const auto& s = moves[rng() % moves.size()];
    const auto& t = moves[rng() % moves.size()];
    const Word w = test::random_word(3, 20, rng);
    // Letterwise composition: substitute s(t(x)) for each letter x of w.
    std::vector<Letter> raw;
    for (Letter l : w) {
      const Word img = s.apply(t.image(l));
      raw.insert(raw.end(), img.begin(), img.end());
    }
    CHECK(s.apply(t.apply(w)) == free_reduce(raw));
  }
}

TEST_CASE("signed permutations preserve conjugacy length") {
  std::mt19937_64 rng(21);
  const auto perms = all_signed_permutations(Basis(3));
  for (int trial = 0; trial < 300; ++trial) {
    const Word w = test::random_word(3, 20, rng);
    const auto& p = perms[rng() % perms.size()];
    CHECK(conjugacy_length(p.apply(w)) == conjugacy_length(w));
  }
}

TEST_CASE("minimality examples") {
  CHECK(is_whitehead_minimal(Multiword{W("abAB")}));
  CHECK_FALSE(is_whitehead_minimal(Multiword{W("ab")}));
  CHECK(is_whitehead_minimal(Multiword{W("a")}));
  CHECK(conjugacy_length(W("abcBA")) == 1);
}

TEST_CASE("minimize examples") {
  auto r = minimize(Multiword{W("ab")});
  REQUIRE(r.result.size() == 1);
  CHECK(r.result[0].size() == 1);
  CHECK(r.applied.size() == 1);

  r = minimize(Multiword{W("a")});
  CHECK(r.result == std::vector{C("a")});
  CHECK(r.applied.empty());

  r = minimize(Multiword{W("abAB")});
  CHECK(r.result == std::vector{C("abAB")});
  CHECK(r.applied.empty());
}

TEST_CASE("minimize properties") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const int rank = 2 + static_cast<int>(rng() % 2);
    std::vector<Word> entries;
    std::size_t before = 0;
    for (int k = 0; k < 2; ++k) {
      const Word w = test::random_word(rank, 12, rng);
      if (w.empty()) continue;
      entries.push_back(w);
      before += conjugacy_length(w);
    }
    if (entries.empty()) continue;
    const Basis basis(rank);
    const Multiword m(entries);
    const auto r = minimize(m, basis);
    std::size_t after = 0;
    std::vector<Word> out;
    for (const auto& c : r.result) {
      after += c.size();
      out.push_back(c.as_word());
    }
    CHECK(after <= before);
    CHECK((after == before) == is_whitehead_minimal(m, basis));
    CHECK(is_whitehead_minimal(Multiword(out), basis));
    const auto again = minimize(Multiword(out), basis);
    CHECK(again.result == r.result);
    CHECK(again.applied.empty());
  }
}

TEST_CASE("minimality agrees with the search oracle on short words") {
  const Basis r2(2);
  std::set<CyclicWord> seen;
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const Word w = cyclic_reduce(test::random_word(2, 1 + rng() % 8, rng)).core;
    if (w.empty()) continue;
    const CyclicWord c(w);
    if (!seen.insert(c).second) continue;
    CHECK(is_whitehead_minimal(std::vector{c}, r2) == test::minimal_by_search({c}, r2, 2));
  }
}
