#include <doctest.h>

#include <set>

#include "support.hpp"
#include "wordlab/criteria.hpp"
#include "wordlab/minimality.hpp"
#include "wordlab/whitehead_graph.hpp"

using namespace wordlab;
using test::C;
using test::W;

namespace {

std::vector<Word> three_letter_words(int rank) {
  std::vector<Word> out;
  const int L = 2 * rank;
  for (int a = 0; a < L; ++a)
    for (int b = 0; b < L; ++b)
      for (int c = 0; c < L; ++c) {
        const std::vector<Letter> raw{Letter::from_code(a), Letter::from_code(b),
                                      Letter::from_code(c)};
        const Word w = free_reduce(raw);
        if (w.size() == 3) out.push_back(w);
      }
  return out;
}

/// Fullness straight from the definition, with containment by naive search
/// in a long enough power of each core.
bool full_oracle(const Multiword& m, int rank) {
  std::vector<std::vector<Letter>> powers;
  for (const auto& e : m) {
    const Word c = cyclic_reduce(e).core;
    std::vector<Letter> hay;
    while (hay.size() < c.size() + 3) hay.insert(hay.end(), c.begin(), c.end());
    powers.push_back(hay);
  }
  for (const Word& t : three_letter_words(rank)) {
    const Word ti = t.inverse();
    bool hit = false;
    for (const auto& hay : powers) {
      hit = hit || test::naive_contains(hay, {t.begin(), t.end()}) ||
            test::naive_contains(hay, {ti.begin(), ti.end()});
    }
    if (!hit) return false;
  }
  return true;
}

/// Cyclically reduced word of the given length with no cancellation against
/// `before` on its left and `after` on its right.
Word padding(int rank, std::size_t n, Letter before, Letter after, std::mt19937_64& rng) {
  for (;;) {
    const Word w = test::random_word(rank, n + 8, rng);
    if (w.size() < n) continue;
    const Word p = Word::from_reduced({w.begin(), w.begin() + static_cast<long>(n)});
    if (!p.front().is_inverse_of(before) && !p.back().is_inverse_of(after)) return p;
  }
}

/// Uniform full cyclic word; lengths are chosen so that fullness is common.
Word random_full_word(int rank, std::mt19937_64& rng) {
  const std::size_t n = rank == 2 ? 100 : rank == 3 ? 400 : 1200;
  for (;;) {
    const Word c = test::random_cyclic(rank, n, rng);
    if (is_full(Multiword{c}, Basis(rank))) return c;
  }
}

}  // namespace

TEST_CASE("three-letter word count") {
  CHECK(three_letter_words(2).size() == 36);
  CHECK(three_letter_words(3).size() == 150);
}

TEST_CASE("is_full examples") {
  CHECK_FALSE(is_full(Multiword{W("ab")}, Basis(2)));
  CHECK(is_full(Multiword{build_poison_word(Basis(2))}, Basis(2)));
  CHECK_FALSE(is_full(Multiword{W("BaabAAA")}, Basis(2)));
  CHECK_FALSE(full_oracle(Multiword{W("BaabAAA")}, 2));
}

TEST_CASE("is_full agrees with the enumeration oracle") {
  std::mt19937_64 rng(30);
  int fulls = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const int rank = 2 + static_cast<int>(rng() % 2);
    std::vector<Word> entries;
    for (int k = 0; k < 1 + static_cast<int>(rng() % 2); ++k) {
      const Word w = test::random_word(rank, 20 + rng() % 60, rng);
      if (!cyclic_reduce(w).core.empty()) entries.push_back(w);
    }
    if (entries.empty()) continue;
    const Multiword m(entries);
    const bool full = is_full(m, Basis(rank));
    fulls += full;
    CHECK(full == full_oracle(m, rank));
  }
  CHECK(fulls > 20);
}

TEST_CASE("is_full is symmetric") {
  std::mt19937_64 rng(31);
  const auto perms = all_signed_permutations(Basis(3));
  for (int trial = 0; trial < 300; ++trial) {
    const Word w = cyclic_reduce(test::random_word(3, 80, rng)).core;
    if (w.empty()) continue;
    const bool full = is_full(Multiword{w}, Basis(3));
    CHECK(is_full(Multiword{w.inverse()}, Basis(3)) == full);
    CHECK(is_full(Multiword{perms[rng() % perms.size()].apply(w)}, Basis(3)) == full);
  }
}

TEST_CASE("free_splitting_obstructed") {
  CHECK_FALSE(free_splitting_obstructed(Multiword{W("ab")}));
  CHECK(free_splitting_obstructed(Multiword{W("abAB")}));
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 50; ++trial) {
    const int rank = 2 + static_cast<int>(rng() % 3);
    const Word w = random_full_word(rank, rng);
    const Basis basis(rank);
    CHECK(free_splitting_obstructed(Multiword{w}, basis));
    const auto g = classical_whitehead_graph(Multiword{w}, basis);
    CHECK(is_complete(g));
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
      for (std::size_t j = i + 1; j < g.vertex_count(); ++j)
        CHECK_FALSE(has_cut_pair(g, g.vertices()[i], g.vertices()[j]));
  }
}

TEST_CASE("cyclic_splitting_witness_check") {
  CHECK(cyclic_splitting_witness_check(Multiword{W("ab")}, W("a"), 1) == 2);
  CHECK_THROWS_AS(cyclic_splitting_witness_check(Multiword{W("ab")}, W("a"), 0), Error);
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 30; ++trial) {
    const int rank = 2 + static_cast<int>(rng() % 2);
    const Word w = random_full_word(rank, rng);
    for (int k = 0; k < 5; ++k) {
      const Word v = cyclic_reduce(test::random_word(rank, 1 + rng() % 6, rng)).core;
      if (v.empty()) continue;
      for (int periods = 1; periods <= 3; ++periods) {
        CHECK(cyclic_splitting_witness_check(Multiword{w}, v, periods, Basis(rank)) == 1);
      }
    }
  }
}

TEST_CASE("few_powers_obstruction") {
  const Word t = build_poison_word(Basis(2));
  const auto hit = few_powers_obstruction(Multiword{t});
  REQUIRE(hit);
  CHECK(hit->index == 1);
  for (int p : {1, 2, 3, 4}) CHECK(hit->powers.count(p));
  CHECK_FALSE(few_powers_obstruction(Multiword{W("abAB")}));
  CHECK_FALSE(few_powers_obstruction(Multiword{W("aabAAb")}).has_value());

  auto reason = [](const Multiword& m) {
    try {
      few_powers_obstruction(m);
    } catch (const CriterionPrecondition& e) {
      return std::optional(e.reason());
    }
    return std::optional<CriterionPrecondition::Reason>();
  };
  CHECK(reason(Multiword{W("abA")}) == CriterionPrecondition::Reason::NotCyclicallyReduced);
  CHECK(reason(Multiword{W("abAB"), W("abAB")}) == CriterionPrecondition::Reason::NotUnramified);
  CHECK(reason(Multiword{W("ab")}) == CriterionPrecondition::Reason::NotWhiteheadMinimal);
}

TEST_CASE("not_virtually_geometric examples") {
  const Word t = build_poison_word(Basis(2));
  // t itself is full, so its graph is complete and it is minimal.
  const auto r = not_virtually_geometric(Multiword{t});
  CHECK(r.unramified);
  CHECK(r.whitehead_minimal);
  CHECK(r.full);
  CHECK(r.free_splitting_obstructed);
  CHECK(r.verdict == Verdict::NotVirtuallyGeometric);

  const auto c = not_virtually_geometric(Multiword{W("abAB")});
  CHECK_FALSE(c.full);
  CHECK(c.verdict == Verdict::Inconclusive);
  CHECK(not_virtually_geometric(Multiword{W("a")}).verdict == Verdict::Inconclusive);
  CHECK_THROWS(not_virtually_geometric(Multiword{}));
}

TEST_CASE("report serialization") {
  const auto kv = to_key_values(not_virtually_geometric(Multiword{W("abAB")}));
  std::vector<std::string> keys;
  for (const auto& [k, v] : kv) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"unramified", "whitehead_minimal", "full", "power_index",
                                         "powers", "free_split_obstructed", "planar",
                                         "verdict"});
  CHECK(kv[2].second == "false");
  CHECK(kv[7].second == "inconclusive");
  CHECK(verdict_name(Verdict::NotVirtuallyGeometric) == "not_virtually_geometric");
}

TEST_CASE("verdict is sound under fuzzing") {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 400; ++trial) {
    const int rank = 2 + static_cast<int>(rng() % 2);
    std::vector<Word> entries;
    for (int k = 0; k < 1 + static_cast<int>(rng() % 2); ++k) {
      const Word w = test::random_word(rank, 5 + rng() % 80, rng);
      if (!cyclic_reduce(w).core.empty()) entries.push_back(w);
    }
    if (entries.empty()) continue;
    const Multiword m(entries);
    const auto r = not_virtually_geometric(m, Basis(rank));
    if (r.verdict != Verdict::NotVirtuallyGeometric) continue;
    CHECK(r.unramified);
    CHECK(r.whitehead_minimal);
    CHECK(r.full);
    REQUIRE(r.max_power_witness);
    CHECK(r.max_power_witness->powers.size() >= 4);
  }
}

TEST_CASE("poison word") {
  const Word t2 = build_poison_word(Basis(2));
  CHECK(Word::from_reduced({t2.begin(), t2.begin() + 14}) == W("abaabaaabaaaab"));
  for (int rank = 2; rank <= 4; ++rank) {
    const Word t = build_poison_word(Basis(rank));
    CHECK(free_reduce(t.letters()) == t);
    for (const Word& s : three_letter_words(rank)) CHECK(contains_subword(t, s));
    const Word tail = three_letter_covering_word(Basis(rank));
    CHECK(tail.front() == x(1));
    CHECK(tail.back() == x(2));
    const auto powers = distinct_abs_powers(CyclicWord(t), 1);
    for (int p : {1, 2, 3, 4}) CHECK(powers.count(p));
  }
  CHECK_THROWS(build_poison_word(Basis(1)));
}

TEST_CASE("padded poison words are full with four powers") {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 100; ++trial) {
    const int rank = 2 + static_cast<int>(rng() % 2);
    const Word t = build_poison_word(Basis(rank));
    const Word u = padding(rank, 1 + rng() % 30, t.back(), t.front(), rng);
    // u t is cyclically reduced with no cancellation at either seam.
    const Word w = t * u;
    REQUIRE(w.size() == t.size() + u.size());
    REQUIRE(is_cyclically_reduced(w));
    CHECK(is_full(Multiword{w}, Basis(rank)));
    CHECK(distinct_abs_powers(CyclicWord(w), 1).size() >= 4);
    CHECK(is_poisoned(w, t));
  }
}

TEST_CASE("is_poisoned") {
  CHECK(is_poisoned(W("aab") * W("abAb") * W("bb"), W("abAb")));
  CHECK(is_poisoned(W("abA"), W("b")));
  // t straddles the seam of the core.
  CHECK(is_poisoned(W("baaab"), W("bbaa")));
  CHECK_FALSE(is_poisoned(W("abab"), W("aa")));
  CHECK_THROWS(is_poisoned(W("ab"), Word{}));

  std::mt19937_64 rng(36);
  for (int trial = 0; trial < 1000; ++trial) {
    const Word w = test::random_word(2, 3 + rng() % 10, rng);
    const Word t = test::random_word(2, 1 + rng() % 4, rng);
    const Word c = cyclic_reduce(w).core;
    if (t.empty() || c.empty()) continue;
    std::vector<Letter> cc(c.begin(), c.end());
    cc.insert(cc.end(), c.begin(), c.end());
    const bool oracle = t.size() <= c.size() && test::naive_contains(cc, {t.begin(), t.end()});
    CHECK(is_poisoned(w, t) == oracle);
  }
}
