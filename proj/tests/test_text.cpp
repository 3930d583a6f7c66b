#include <doctest.h>

#include "support.hpp"
#include "wordlab/experiments.hpp"
#include "wordlab/text.hpp"

using namespace wordlab;
using test::W;

TEST_CASE("letters print as a-z and A-Z") {
  CHECK(text::letter_char(x(1)) == 'a');
  CHECK(text::letter_char(x_inv(2)) == 'B');
  CHECK(text::letter_char(x(26)) == 'z');
  CHECK(text::format(Word{x(1), x_inv(3)}) == "aC");
  CHECK(text::format(Word{}).empty());
}

TEST_CASE("parse_word grammar") {
  CHECK(text::parse_word("aA") == Word{});
  CHECK(text::parse_word("a^3") == W("aaa"));
  CHECK(text::parse_word("(ab)^2") == W("abab"));
  CHECK(text::parse_word("(ab)^-2") == W("BABA"));
  CHECK(text::parse_word("a(bA)^3B^2") == free_reduce(W("abAbAbA").letters()) * W("BB"));
  CHECK(text::parse_word("a^0b") == W("b"));
}

TEST_CASE("parse errors name the offending token") {
  auto token = [](std::string_view s) {
    try {
      text::parse_word(s);
    } catch (const text::ParseError& e) {
      CHECK(e.kind() == ErrorKind::Parse);
      return e.token();
    }
    return std::string("<none>");
  };
  CHECK(token("ab@") == "@");
  CHECK(token("(ab") == "(");
  CHECK(token("ab)") == ")");
  CHECK(token("a^") == "<end>");
  CHECK(token("a1") == "1");
}

TEST_CASE("parse_multiword") {
  const auto m = text::parse_multiword("  ab   aB\tb ");
  REQUIRE(m.size() == 3);
  CHECK(m[1] == W("aB"));
  CHECK(text::format(m) == "ab aB b");
  CHECK(text::parse_multiword("").empty());
  CHECK_THROWS_AS(text::parse_multiword("ab aA"), text::ParseError);
  CHECK(text::max_index(m) == 2);
  CHECK(text::max_index(W("aZ")) == 26);
}

TEST_CASE("print and parse round trip") {
  for (int r = 2; r <= 3; ++r) {
    for (int n = 1; n <= 6; ++n) {
      for_each_word(r, n, Universe::Reduced, [](const Word& w) {
        const auto s = text::format(w);
        REQUIRE(text::parse_word(s) == w);
      });
    }
  }
  std::mt19937_64 rng(50);
  for (int i = 0; i < 200; ++i) {
    const Word w = test::random_word(26, 40, rng);
    CHECK(text::parse_word(text::format(w)) == w);
  }
}
