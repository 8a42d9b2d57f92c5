#pragma once

#include <random>

#include "jcheck/polynomial.hpp"

namespace jcheck::testing {

/// Random coefficient; over Q an integer in [-height, height] (nonzero when
/// `nonzero` is set).
inline FieldElement random_coefficient(const FieldSpec& field, Rng& rng, long height = 5, bool nonzero = false) {
  while (true) {
    FieldElement c = field.is_rational()
                         ? FieldElement(field, std::uniform_int_distribution<long>(-height, height)(rng))
                         : random_element(field, rng);
    if (!nonzero || !c.is_zero()) return c;
  }
}

/// Random monomial of total degree at most `max_degree`.
inline ExponentVector random_exponents(std::size_t nvars, unsigned max_degree, Rng& rng) {
  ExponentVector e(nvars);
  unsigned budget = std::uniform_int_distribution<unsigned>(0, max_degree)(rng);
  for (unsigned k = 0; k < budget; ++k) {
    std::size_t v = std::uniform_int_distribution<std::size_t>(0, nvars - 1)(rng);
    e.set(v, e[v] + 1);
  }
  return e;
}

/// Sparse random polynomial with up to `max_terms` terms of degree <= max_degree.
inline Polynomial random_polynomial(const RingPtr& ring, Rng& rng, unsigned max_degree, std::size_t max_terms,
                                    long height = 5) {
  std::size_t nterms = std::uniform_int_distribution<std::size_t>(0, max_terms)(rng);
  std::vector<Term> terms;
  for (std::size_t k = 0; k < nterms; ++k) {
    terms.push_back({random_exponents(ring->nvars(), max_degree, rng), random_coefficient(ring->field(), rng, height)});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

/// Dense univariate polynomial of exact degree `degree` in variable 0.
inline Polynomial random_univariate(const RingPtr& ring, Rng& rng, unsigned degree, bool monic, long height = 5) {
  std::vector<Term> terms;
  for (unsigned k = 0; k <= degree; ++k) {
    ExponentVector e(ring->nvars());
    e.set(0, k);
    FieldElement c = random_coefficient(ring->field(), rng, height, k == degree);
    if (k == degree && monic) c = FieldElement::one(ring->field());
    terms.push_back({e, c});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace jcheck::testing
