#include "doctest.h"
#include "support/generators.hpp"
#include "symtorsion/errors.hpp"
#include "symtorsion/literal.hpp"

using namespace symt;
using namespace symt::testing;

TEST_CASE("literal forms") {
  const auto l = Lattice::laurent();
  CHECK(format_literal(parse_literal("g(1) + 1", l)) == "1 + 1*g(1)");
  CHECK(format_literal(parse_literal(" - 2/4 * g( -1 ) ", l)) == "-1/2*g(-1)");
  CHECK(format_literal(parse_literal("g(1) + g(1)", l)) == "2*g(1)");
  CHECK(format_literal(parse_literal("g(1) - g(1)", l)) == "0");
  CHECK(format_literal(parse_literal("0 @cutoff=5/2", l)) == "0 @cutoff=5/2");
  CHECK(format_literal(parse_literal("1 + g(3) @cutoff=2", l)) == "1 @cutoff=2");
  CHECK(format_literal(parse_literal("g(0)", l)) == "1");
}

TEST_CASE("literal errors carry positions") {
  const auto l = Lattice::laurent();
  try {
    parse_literal("1 + * g(1)", l, 4, 10);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() >= 10);
  }
  CHECK_THROWS_AS(parse_literal("g(1,2)", l), ParseError);
  CHECK_THROWS_AS(parse_literal("", l), ParseError);
  CHECK_THROWS_AS(parse_literal("1/0", l), ParseError);
  CHECK_THROWS_AS(parse_literal("1 @cutoff=", l), ParseError);
  CHECK_THROWS_AS(parse_literal("g(1", l), ParseError);
}

TEST_CASE("format then parse is the identity") {
  Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    const LatticePtr l = random_lattice(rng);
    NovikovElement a = random_poly(rng, l, 5, 4);
    if (coin(rng)) a = a.truncated(random_rational(rng, 9, 4));
    CHECK(parse_literal(format_literal(a), l) == a);
  }
}

TEST_CASE("literal parser never crashes") {
  Rng rng(22);
  const std::string alphabet = "g(),+-*/@=cutof 0123456789";
  const auto l = Lattice::laurent();
  for (int i = 0; i < 2000; ++i) {
    std::string s;
    const int n = uniform(rng, 0, 16);
    for (int k = 0; k < n; ++k) s += alphabet[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(alphabet.size()) - 1))];
    try {
      parse_literal(s, l);
    } catch (const ParseError&) {
    }
  }
}
