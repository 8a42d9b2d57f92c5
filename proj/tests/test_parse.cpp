#include "doctest.h"

#include "jcheck/parse.hpp"
#include "support/random_poly.hpp"

using namespace jcheck;

TEST_CASE("parse examples") {
  auto q2 = make_ring(FieldSpec(), 2);
  Polynomial f = parse_polynomial("X1 + X2^2", q2);
  CHECK(f == Polynomial::variable(q2, 0) + Polynomial::variable(q2, 1).pow(2));

  auto f3 = make_ring(FieldSpec(3), {"X"});
  Polynomial g = parse_polynomial("X - X^3", f3);
  CHECK(g == parse_polynomial("X + 2*X^3", f3));
  CHECK(to_string(g) == "2*X^3 + X");

  auto f5 = make_ring(FieldSpec(5), {"X"});
  CHECK_THROWS_WITH_AS(parse_polynomial("1/2*X", f5), doctest::Contains("rational literal in finite field"),
                       ParseError);
  CHECK(parse_polynomial("3*X", f5) == parse_polynomial("-2*X", f5));
}

TEST_CASE("precedence and unary minus") {
  auto r = make_ring(FieldSpec(), {"X", "Y"});
  CHECK(parse_polynomial("-X^2", r) == -(parse_polynomial("X", r).pow(2)));
  CHECK(parse_polynomial("2*X^2*Y - -Y", r) == parse_polynomial("2*X^2*Y + Y", r));
  CHECK(parse_polynomial("(X+Y)^2", r) == parse_polynomial("X^2 + 2*X*Y + Y^2", r));
  CHECK(parse_polynomial("X - Y - X", r) == parse_polynomial("-Y", r));
  CHECK(parse_polynomial("3/6*X", r) == parse_polynomial("1/2*X", r));
  CHECK(parse_polynomial("X^0", r) == Polynomial::constant(r, 1));
}

TEST_CASE("errors carry positions") {
  auto r = make_ring(FieldSpec(), {"X", "Y"});
  try {
    parse_polynomial("X + Z", r, 4);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 5);
    CHECK(std::string(e.what()).find("unknown variable 'Z'") != std::string::npos);
  }
  CHECK_THROWS_WITH_AS(parse_polynomial("2X", r), doctest::Contains("implicit multiplication"), ParseError);
  CHECK_THROWS_WITH_AS(parse_polynomial("X Y", r), doctest::Contains("implicit multiplication"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("X^Y", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("(X + 1", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("X +", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("1/0", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("X $ 1", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("X^-1", r), ParseError);
}

TEST_CASE("print/parse round trip") {
  Rng rng(17);
  for (std::uint32_t p : {0u, 2u, 3u, 101u}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      auto ring = make_ring(FieldSpec(p), n);
      for (int i = 0; i < 100; ++i) {
        Polynomial f = jcheck::testing::random_polynomial(ring, rng, 6, 6, 1000);
        if (p == 0 && i % 2) f *= FieldElement(FieldSpec(), mpq_class(-7, 3));
        std::string text = to_string(f);
        Polynomial back = parse_polynomial(text, ring);
        REQUIRE(back == f);
        REQUIRE(to_string(back) == text);
      }
    }
  }
}
