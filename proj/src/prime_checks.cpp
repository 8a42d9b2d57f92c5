#include "jcheck/prime_checks.hpp"

#include <algorithm>

namespace jcheck {

std::string_view to_string(PrimeVerdict v) {
  switch (v) {
    case PrimeVerdict::Prime: return "prime";
    case PrimeVerdict::PrimaryNotPrime: return "primary-not-prime";
    case PrimeVerdict::Neither: return "neither";
    case PrimeVerdict::SizeRefusal: return "size-refusal";
  }
  return "?";
}

std::vector<PrimeCheck> prime_preservation_check(const PolyMap& map, std::span<const Polynomial> samples,
                                                 const DeskBounds& bounds) {
  std::vector<PrimeCheck> out;
  for (const auto& a : samples) {
    if (*a.ring() != *map.ring()) throw FactorError("sample prime outside the map's ring");
    if (a.is_constant() || !is_irreducible_multivariate(a, bounds)) {
      throw FactorError("sample " + to_string(a) + " is not prime");
    }
    Polynomial image = map.apply(a);
    PrimeVerdict v;
    try {
      Factorization f = factor_small(image, bounds);
      if (f.factors.size() != 1) {
        v = PrimeVerdict::Neither;
      } else {
        v = f.factors[0].multiplicity == 1 ? PrimeVerdict::Prime : PrimeVerdict::PrimaryNotPrime;
      }
    } catch (const SizeRefusal&) {
      v = PrimeVerdict::SizeRefusal;
    }
    out.push_back({a, std::move(image), v});
  }
  return out;
}

std::vector<Polynomial> default_sample_primes(const RingPtr& ring, std::size_t random_count, std::uint64_t seed,
                                              const DeskBounds& bounds) {
  const std::size_t n = ring->nvars();
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(Polynomial::variable(ring, i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      out.push_back(Polynomial::variable(ring, i) - Polynomial::variable(ring, j));
    }
  }
  // Random monic polynomials of degree 1 or 2 kept when irreducible.
  Rng rng(seed);
  std::vector<ExponentVector> monos;
  for (std::size_t i = 0; i < n; ++i) {
    ExponentVector e(n);
    e.set(i, 1);
    monos.push_back(e);
    for (std::size_t j = i; j < n; ++j) {
      ExponentVector f = e;
      f.set(j, f[j] + 1);
      monos.push_back(f);
    }
  }
  std::size_t found = 0;
  for (unsigned attempt = 0; found < random_count && attempt < 200 * (random_count + 1); ++attempt) {
    std::vector<Term> terms{{ExponentVector(n), random_element(ring->field(), rng, 5)}};
    for (const auto& m : monos) {
      if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) continue;
      terms.push_back({m, random_element(ring->field(), rng, 5)});
    }
    Polynomial g = Polynomial::from_terms(ring, std::move(terms));
    if (g.is_constant()) continue;
    g = make_monic(g);
    if (std::find(out.begin(), out.end(), g) != out.end()) continue;
    if (!is_irreducible_multivariate(g, bounds)) continue;
    out.push_back(std::move(g));
    ++found;
  }
  return out;
}

bool bass_torsion_check(const PolyMap& map, unsigned trials, std::uint64_t seed) {
  const RingPtr& ring = map.ring();
  const std::size_t n = map.n();
  ImageAlgebra algebra(map);
  bool surjective = true;
  for (std::size_t i = 0; i < n && surjective; ++i) surjective = algebra.contains(Polynomial::variable(ring, i));
  if (surjective) return true;

  // Does q(F) divide a(F) in B with a quotient outside A?
  auto witness = [&](const Polynomial& a, const Polynomial& q) {
    if (q.is_constant()) return false;
    auto b = divide_exact(map.apply(a), map.apply(q));
    return b && !algebra.contains(*b);
  };

  // Monomials of degree 1 and 2 over variables as denominators.
  std::vector<Polynomial> small;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial x = Polynomial::variable(ring, i);
    small.push_back(x);
    for (std::size_t j = i; j < n; ++j) small.push_back(x * Polynomial::variable(ring, j));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& a : small) {
      if (witness(a, Polynomial::variable(ring, i))) return false;
    }
  }
  Rng rng(seed);
  auto random_poly = [&](unsigned max_degree) {
    std::vector<Term> terms;
    for (int k = 0; k < 3; ++k) {
      ExponentVector e(n);
      unsigned d = std::uniform_int_distribution<unsigned>(0, max_degree)(rng);
      for (unsigned s = 0; s < d; ++s) {
        std::size_t v = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
        e.set(v, e[v] + 1);
      }
      terms.push_back({e, random_element(ring->field(), rng, 5)});
    }
    return Polynomial::from_terms(ring, std::move(terms));
  };
  for (unsigned t = 0; t < trials; ++t) {
    Polynomial q = random_poly(1);
    Polynomial a = q * random_poly(2) + random_poly(2);
    if (witness(a, q)) return false;
  }
  return true;
}

}  // namespace jcheck
