#include "doctest.h"

#include "jcheck/field.hpp"

using namespace jcheck;

namespace {

FieldElement q(long num, long den = 1) { return FieldElement(FieldSpec(), mpq_class(num, den)); }

}  // namespace

TEST_CASE("FieldSpec construction and spelling") {
  CHECK(FieldSpec::parse("Q").is_rational());
  CHECK(FieldSpec::parse("F3").characteristic() == 3);
  CHECK(FieldSpec::parse("F101").name() == "F101");
  CHECK_THROWS_AS(FieldSpec(4), FieldError);
  CHECK_THROWS_AS(FieldSpec(1), FieldError);
  CHECK_THROWS_AS(FieldSpec::parse("F"), FieldError);
  CHECK_THROWS_AS(FieldSpec::parse("F9"), FieldError);
  CHECK_THROWS_AS(FieldSpec::parse("Z"), FieldError);
  CHECK(FieldSpec(2147483647u).characteristic() == 2147483647u);
}

TEST_CASE("arithmetic examples") {
  FieldSpec f5(5), f7(7), f2(2);
  CHECK(FieldElement(f5, 3) + FieldElement(f5, 4) == FieldElement(f5, 2));
  CHECK(q(1, 2) + q(1, 3) == q(5, 6));
  CHECK(FieldElement(f7, 3) * FieldElement(f7, 5) == FieldElement(f7, 1));
  CHECK(FieldElement(f7, 3).inverse() == FieldElement(f7, 5));
  CHECK(q(2, 3).inverse() == q(3, 2));
  CHECK(FieldElement(f2, 1).inverse() == FieldElement(f2, 1));
  CHECK(FieldElement(f5, -1).residue() == 4);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(FieldElement::zero(FieldSpec(7)).inverse(), DivisionByZero);
  CHECK_THROWS_AS(q(0).inverse(), DivisionByZero);
  CHECK_THROWS_AS(FieldElement(FieldSpec(5), 1) + FieldElement(FieldSpec(7), 1), FieldError);
  CHECK_THROWS_AS(FieldElement(FieldSpec(5), 1) * q(1), FieldError);
  CHECK_THROWS_AS(FieldElement(FieldSpec(5), mpq_class(1, 2)), FieldError);
}

TEST_CASE("rationals are canonical") {
  CHECK(q(2, 4) == q(1, 2));
  CHECK(q(1, -2) == q(-1, 2));
  CHECK(q(-1, 2).rational().get_den() == 2);
  CHECK(q(6, 3).to_string() == "2");
  CHECK(q(-3, 2).to_string() == "-3/2");
}

TEST_CASE("field axioms on random triples") {
  for (std::uint32_t p : {0u, 2u, 7u, 101u}) {
    FieldSpec field(p);
    Rng rng(1234 + p);
    for (int i = 0; i < 10000; ++i) {
      FieldElement a = random_element(field, rng, 50);
      FieldElement b = random_element(field, rng, 50);
      FieldElement c = random_element(field, rng, 50);
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE(a + b == b + a);
      REQUIRE(a * b == b * a);
      REQUIRE(a - a == FieldElement::zero(field));
      if (!a.is_zero()) REQUIRE(a * a.inverse() == FieldElement::one(field));
      // Structural equality iff the difference vanishes.
      REQUIRE((a == b) == (a - b).is_zero());
    }
  }
}

TEST_CASE("Fermat: a^p = a in F_p, exhaustively for p <= 101") {
  for (std::uint32_t p = 2; p <= 101; ++p) {
    if (!is_prime(p)) continue;
    FieldSpec field(p);
    for (long a = 0; a < static_cast<long>(p); ++a) {
      FieldElement x(field, a);
      REQUIRE(x.pow(p) == x);
    }
  }
}

TEST_CASE("random_element contract") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    FieldElement x = random_element(FieldSpec(2), a);
    FieldElement y = random_element(FieldSpec(2), b);
    CHECK(x == y);
    CHECK(x.residue() < 2);
  }
  Rng r(7);
  for (int i = 0; i < 1000; ++i) {
    FieldElement x = random_element(FieldSpec(), r, 10);
    CHECK(abs(x.rational().get_num()) <= 10);
    CHECK(x.rational().get_den() <= 10);
  }
}
