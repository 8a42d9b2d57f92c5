#pragma once

#include <string_view>
#include <vector>

#include "jcheck/factor.hpp"
#include "jcheck/map_analysis.hpp"

namespace jcheck {

enum class PrimeVerdict { Prime, PrimaryNotPrime, Neither, SizeRefusal };

std::string_view to_string(PrimeVerdict v);

struct PrimeCheck {
  Polynomial sample;
  Polynomial image;
  PrimeVerdict verdict;
};

/// Classifies the image of every sample prime a under a -> a(F). Each sample
/// must itself be irreducible (FactorError otherwise).
std::vector<PrimeCheck> prime_preservation_check(const PolyMap& map, std::span<const Polynomial> samples,
                                                 const DeskBounds& bounds = {});

/// The variables, their pairwise differences and `random_count` random
/// irreducibles of degree <= 2 (monic, distinct).
std::vector<Polynomial> default_sample_primes(const RingPtr& ring, std::size_t random_count = 10,
                                              std::uint64_t seed = kDefaultSeed, const DeskBounds& bounds = {});

/// Looks for torsion in B/A, A = K[F]: a quotient a/q of elements of A with
/// q non-constant that is a polynomial b but not an element of A. Returns
/// false as soon as such a witness is found.
bool bass_torsion_check(const PolyMap& map, unsigned trials = 40, std::uint64_t seed = kDefaultSeed);

}  // namespace jcheck
