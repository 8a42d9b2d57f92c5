#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "jcheck/polynomial.hpp"

namespace jcheck {

/// Invalid input to a factorization routine (zero, constant, wrong field...).
class FactorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The instance is outside the configured desk-scale bounds. This is a
/// refusal to answer, never a negative answer.
class SizeRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Factor {
  Polynomial polynomial;
  unsigned multiplicity;
};

/// unit * prod(factor^multiplicity). Factors are monic under the canonical
/// (grevlex) order, irreducible and pairwise non-associate, sorted by degree
/// and then by printed form.
struct Factorization {
  FieldElement unit;
  std::vector<Factor> factors;

  Polynomial expand(const RingPtr& ring) const;
  std::size_t distinct_factors() const { return factors.size(); }
};

/// Limits for the exact multivariate routines.
struct DeskBounds {
  std::size_t max_variables = 3;
  unsigned max_degree_prime_field = 4;
  unsigned max_degree_rationals = 3;
  std::uint32_t max_characteristic = 101;
  /// Largest univariate degree accepted by factor_univariate_q.
  unsigned max_degree_univariate_q = 12;
};

inline constexpr std::uint64_t kDefaultFactorSeed = 0x6a636865636bULL;

/// Scales f so that its canonical leading coefficient is 1.
Polynomial make_monic(const Polynomial& f);

/// Square-free decomposition, distinct-degree and Cantor-Zassenhaus
/// equal-degree splitting over F_p. f must involve at most one variable and
/// have degree >= 1. Deterministic for a given seed.
Factorization factor_univariate(const Polynomial& f, std::uint64_t seed = kDefaultFactorSeed);

/// Factorization over Q: square-free decomposition, then factorization
/// modulo a few good primes, Hensel lifting and trial recombination.
/// Refuses degrees above bounds.max_degree_univariate_q.
Factorization factor_univariate_q(const Polynomial& f, const DeskBounds& bounds = {});

/// Complete factorization of a desk-scale polynomial in up to
/// bounds.max_variables variables (Kronecker substitution, univariate
/// factorization, exact recombination by trial division).
Factorization factor_small(const Polynomial& f, const DeskBounds& bounds = {});

/// Primality in K[X] (irreducibility up to units). Throws SizeRefusal
/// outside the bounds and FactorError for constants.
bool is_irreducible_multivariate(const Polynomial& f, const DeskBounds& bounds = {});

/// Unit times a power of a single prime.
bool is_primary_element(const Polynomial& f, const DeskBounds& bounds = {});

}  // namespace jcheck
