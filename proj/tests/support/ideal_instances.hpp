#pragma once

#include <vector>

#include "jcheck/polynomial.hpp"
#include "support/random_poly.hpp"

namespace jcheck::testing {

// Low-degree members sometimes need certificates a few degrees above the
// query (e.g. in maximal ideals over F5); slack only adds certificates.
inline constexpr unsigned kOracleSlack = 4;

/// A random ideal plus a query polynomial, half of them members by construction.
struct MembershipInstance {
  RingPtr ring;
  std::vector<Polynomial> generators;
  Polynomial query;
  unsigned oracle_degree;  // max(sum of generator degrees, deg(query)) + kOracleSlack
};

inline MembershipInstance random_membership_instance(const FieldSpec& field, Rng& rng) {
  std::size_t n = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
  std::size_t k = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
  // Keep the Macaulay matrix at desk size in three variables.
  unsigned max_deg = n == 3 ? 2 : (n == 2 ? 3 : 4);
  auto ring = make_ring(field, n);
  std::vector<Polynomial> gens;
  unsigned degree_sum = 0;
  while (gens.size() < k) {
    Polynomial g = random_polynomial(ring, rng, max_deg, 3, 3);
    if (g.is_zero() || g.is_constant()) continue;
    degree_sum += *g.total_degree();
    gens.push_back(std::move(g));
  }
  Polynomial query(ring);
  if (std::bernoulli_distribution(0.5)(rng)) {
    for (const auto& g : gens) {
      unsigned room = degree_sum - *g.total_degree();
      query += random_polynomial(ring, rng, std::min(room, 2u), 2, 3) * g;
    }
  } else {
    query = random_polynomial(ring, rng, std::min(degree_sum, 4u), 4, 3);
  }
  unsigned qdeg = query.total_degree().value_or(0);
  return {ring, std::move(gens), std::move(query), std::max(degree_sum, qdeg) + kOracleSlack};
}

}  // namespace jcheck::testing
