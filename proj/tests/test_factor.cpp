#include "doctest.h"

#include <algorithm>
#include <functional>

#include "jcheck/factor.hpp"
#include "jcheck/parse.hpp"
#include "support/divisor_oracle.hpp"
#include "support/random_poly.hpp"

using namespace jcheck;
using jcheck::testing::all_monic;
using jcheck::testing::brute_irreducible;

namespace {

Polynomial P(const RingPtr& ring, const char* text) { return parse_polynomial(text, ring); }

std::vector<std::string> printed(const Factorization& f) {
  std::vector<std::string> out;
  for (const auto& x : f.factors) out.push_back(to_string(x.polynomial) + "^" + std::to_string(x.multiplicity));
  return out;
}

void check_factorization_shape(const Polynomial& f, const Factorization& fac) {
  CHECK(fac.expand(f.ring()) == f);
  for (std::size_t i = 0; i < fac.factors.size(); ++i) {
    const auto& g = fac.factors[i].polynomial;
    CHECK(fac.factors[i].multiplicity >= 1);
    CHECK(g.leading_term().coefficient.is_one());
    for (std::size_t j = i + 1; j < fac.factors.size(); ++j) CHECK(g != fac.factors[j].polynomial);
  }
}

}  // namespace

TEST_CASE("univariate examples over prime fields") {
  auto r2 = make_ring(FieldSpec::prime(2), {"X"});
  auto f = factor_univariate(P(r2, "X^2 + 1"));
  CHECK(printed(f) == std::vector<std::string>{"X + 1^2"});
  CHECK(f.unit.is_one());

  auto r3 = make_ring(FieldSpec::prime(3), {"X"});
  auto g = factor_univariate(P(r3, "X - X^3"));
  CHECK(g.unit == FieldElement(FieldSpec::prime(3), -1));
  CHECK(printed(g) == std::vector<std::string>{"X^1", "X + 1^1", "X + 2^1"});
  CHECK(factor_univariate(P(r3, "X^2 + 1")).factors.size() == 1);
  CHECK(is_irreducible_multivariate(P(r3, "X^2 + 1")));
  CHECK_FALSE(is_primary_element(P(r3, "X - X^3")));
}

TEST_CASE("univariate examples over Q") {
  auto r = make_ring(FieldSpec::rationals(), {"X"});
  CHECK(printed(factor_univariate_q(P(r, "X^2 - 1"))) == std::vector<std::string>{"X + 1^1", "X - 1^1"});
  CHECK(printed(factor_univariate_q(P(r, "X^2 + 1"))) == std::vector<std::string>{"X^2 + 1^1"});
  CHECK(printed(factor_univariate_q(P(r, "X^3 - X"))) == std::vector<std::string>{"X^1", "X + 1^1", "X - 1^1"});
  auto h = factor_univariate_q(P(r, "6*X^2 + 5*X + 1"));
  CHECK(h.unit == FieldElement(FieldSpec::rationals(), 6));
  CHECK(printed(h) == std::vector<std::string>{"X + 1/2^1", "X + 1/3^1"});
  // Irreducible modulo no prime: X^4 + 1 splits mod every p.
  CHECK(printed(factor_univariate_q(P(r, "X^4 + 1"))) == std::vector<std::string>{"X^4 + 1^1"});
  CHECK(printed(factor_univariate_q(P(r, "X^4 - 4"))) == std::vector<std::string>{"X^2 + 2^1", "X^2 - 2^1"});
  CHECK_THROWS_AS(factor_univariate_q(P(r, "X^13 + 1")), SizeRefusal);
  CHECK_THROWS_AS(factor_univariate_q(P(r, "3")), FactorError);
}

TEST_CASE("multivariate examples") {
  auto r3 = make_ring(FieldSpec::prime(3), {"X1", "X2"});
  CHECK(is_irreducible_multivariate(P(r3, "X1^2 + X2^2")));
  CHECK_FALSE(is_irreducible_multivariate(P(r3, "X1*X2")));
  CHECK(is_irreducible_multivariate(P(r3, "X1 + X2^2")));
  CHECK(is_primary_element(P(r3, "X1^2")));
  CHECK_FALSE(is_primary_element(P(r3, "X1*X2")));

  auto rq = make_ring(FieldSpec::rationals(), {"X1", "X2"});
  CHECK(is_irreducible_multivariate(P(rq, "X1^2 + X2^2")));
  CHECK_FALSE(is_irreducible_multivariate(P(rq, "X1^2 - X2^2")));
  auto fac = factor_small(P(rq, "X1^2*X2 - X2^3"));
  CHECK(fac.factors.size() == 3);
  check_factorization_shape(P(rq, "X1^2*X2 - X2^3"), fac);
}

TEST_CASE("bounds are refusals") {
  auto rq = make_ring(FieldSpec::rationals(), {"X1", "X2", "X3", "X4"});
  CHECK_THROWS_AS(is_irreducible_multivariate(P(rq, "X1*X2 + X3*X4")), SizeRefusal);
  CHECK_THROWS_AS(is_irreducible_multivariate(P(rq, "X1^4 + X2")), SizeRefusal);
  auto r = make_ring(FieldSpec::prime(103), {"X1", "X2"});
  CHECK_THROWS_AS(is_irreducible_multivariate(P(r, "X1^2 + X2")), SizeRefusal);
  auto r5 = make_ring(FieldSpec::prime(5), {"X1", "X2"});
  CHECK_THROWS_AS(is_irreducible_multivariate(P(r5, "X1^5 + X2")), SizeRefusal);
  CHECK_THROWS_AS(is_irreducible_multivariate(P(r5, "2")), FactorError);
}

TEST_CASE("univariate irreducibility agrees with exhaustive divisor search") {
  Rng rng(11);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    auto ring = make_ring(FieldSpec::prime(p), {"X"});
    std::vector<Polynomial> small = all_monic(ring, 3);
    for (int trial = 0; trial < 150; ++trial) {
      unsigned d = std::uniform_int_distribution<unsigned>(1, 6)(rng);
      Polynomial f = testing::random_univariate(ring, rng, d, false);
      if (f.is_zero() || f.is_constant()) continue;
      auto fac = factor_univariate(f);
      check_factorization_shape(f, fac);
      for (const auto& x : fac.factors) CHECK(brute_irreducible(x.polynomial, small));
      bool irreducible = fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
      CHECK(irreducible == brute_irreducible(f, small));
    }
  }
}

TEST_CASE("large characteristic and degree") {
  auto ring = make_ring(FieldSpec::prime(1000003), {"X"});
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    Polynomial a = testing::random_univariate(ring, rng, 5, true);
    Polynomial b = testing::random_univariate(ring, rng, 7, true);
    Polynomial f = a * b * b;
    auto fac = factor_univariate(f);
    check_factorization_shape(f, fac);
    unsigned total = 0;
    for (const auto& x : fac.factors) total += *x.polynomial.total_degree() * x.multiplicity;
    CHECK(total == 19);
  }
  auto r2 = make_ring(FieldSpec::prime(2), {"X"});
  Polynomial f = P(r2, "X^64 + X");
  auto fac = factor_univariate(f);
  check_factorization_shape(f, fac);
  // X^64 - X is the product of all monic irreducibles of degree 1, 2, 3, 6.
  CHECK(fac.factors.size() == 2 + 1 + 2 + 9);
}

TEST_CASE("products of known irreducibles over Q") {
  auto ring = make_ring(FieldSpec::rationals(), {"X"});
  const char* pieces[] = {"X - 2", "X + 3", "X^2 + 1", "X^2 - 3", "X^2 + X + 1", "X^3 - 2", "X^4 + 1", "3*X - 1"};
  Rng rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    Polynomial f = Polynomial::constant(ring, FieldElement(ring->field(), (trial % 5) - 2 == 0 ? 7 : (trial % 5) - 2));
    std::vector<std::string> expected;
    unsigned degree = 0;
    std::vector<int> uses(std::size(pieces), 0);
    for (int k = 0; k < 3; ++k) {
      std::size_t i = std::uniform_int_distribution<std::size_t>(0, std::size(pieces) - 1)(rng);
      Polynomial g = P(ring, pieces[i]);
      if (degree + *g.total_degree() > 12) continue;
      degree += *g.total_degree();
      f *= g;
      ++uses[i];
    }
    if (f.is_constant()) continue;
    auto fac = factor_univariate_q(f);
    check_factorization_shape(f, fac);
    for (std::size_t i = 0; i < std::size(pieces); ++i) {
      if (uses[i] == 0) continue;
      Polynomial g = make_monic(P(ring, pieces[i]));
      auto it = std::find_if(fac.factors.begin(), fac.factors.end(), [&](const Factor& x) { return x.polynomial == g; });
      REQUIRE(it != fac.factors.end());
      CHECK(it->multiplicity == static_cast<unsigned>(uses[i]));
    }
  }
}

TEST_CASE("cubic irreducibility over Q matches the rational root test") {
  auto ring = make_ring(FieldSpec::rationals(), {"X"});
  Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial f = testing::random_univariate(ring, rng, 3, false, 6);
    if (!f.total_degree() || *f.total_degree() < 2) continue;
    bool has_root = false;
    // Candidate roots a/b with |a|, |b| <= 6 cover every root of an integer
    // polynomial with coefficients bounded by 6.
    for (long a = -6; a <= 6 && !has_root; ++a) {
      for (long b = 1; b <= 6 && !has_root; ++b) {
        std::vector<FieldElement> pt{FieldElement(ring->field(), mpq_class(a, b))};
        has_root = f.evaluate(pt).is_zero();
      }
    }
    CHECK(is_irreducible_multivariate(f) == !has_root);
  }
}

TEST_CASE("multivariate irreducibility agrees with brute force over small fields") {
  Rng rng(21);
  for (std::uint32_t p : {2u, 3u}) {
    auto ring = make_ring(FieldSpec::prime(p), {"X1", "X2"});
    std::vector<Polynomial> small = all_monic(ring, 2);
    for (int trial = 0; trial < 120; ++trial) {
      Polynomial f = trial % 2 == 0
                         ? testing::random_polynomial(ring, rng, 4, 6)
                         : testing::random_polynomial(ring, rng, 2, 4) * testing::random_polynomial(ring, rng, 2, 4);
      if (f.is_zero() || f.is_constant() || *f.total_degree() > 4) continue;
      auto fac = factor_small(f);
      check_factorization_shape(f, fac);
      for (const auto& x : fac.factors) CHECK(brute_irreducible(x.polynomial, small));
      CHECK(is_irreducible_multivariate(f) == brute_irreducible(f, small));
    }
  }
}

TEST_CASE("three variables") {
  auto ring = make_ring(FieldSpec::prime(5), {"X1", "X2", "X3"});
  Polynomial f = P(ring, "(X1 + X3)^2*(X1*X2 + X3 + 1)");
  auto fac = factor_small(f);
  check_factorization_shape(f, fac);
  CHECK(printed(fac) == std::vector<std::string>{"X1 + X3^2", "X1*X2 + X3 + 1^1"});
  CHECK(is_primary_element(P(ring, "(X1*X2 + X3)^2")));

  auto rq = make_ring(FieldSpec::rationals(), {"X1", "X2", "X3"});
  Polynomial g = P(rq, "(X1 - X2)*(X2 - X3)*(X3 - X1)");
  auto gq = factor_small(g);
  check_factorization_shape(g, gq);
  CHECK(gq.factors.size() == 3);
  CHECK(is_irreducible_multivariate(P(rq, "X1^2 + X2^2 + X3^2")));
}
