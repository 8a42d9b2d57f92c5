#pragma once

// Random tame automorphisms: compositions of elementary (triangular) maps
// X_i <- X_i + g(other variables) and invertible affine maps.

#include <algorithm>
#include <random>

#include "jcheck/map_analysis.hpp"
#include "support/random_poly.hpp"

namespace jcheck::testing {

inline PolyMap random_elementary(const RingPtr& ring, Rng& rng, unsigned max_degree) {
  const std::size_t n = ring->nvars();
  std::size_t i = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  Polynomial g(ring);
  if (n > 1) {
    // g in the other variables only, of degree >= 2 so the step is not affine.
    std::vector<Polynomial> drop;
    for (std::size_t v = 0; v < n; ++v) {
      drop.push_back(v == i ? Polynomial(ring) : Polynomial::variable(ring, v));
    }
    while (g.total_degree().value_or(0) < 2) g = substitute(random_polynomial(ring, rng, max_degree, 3, 3), drop);
  }
  std::vector<Polynomial> images;
  for (std::size_t v = 0; v < n; ++v) {
    Polynomial x = Polynomial::variable(ring, v);
    images.push_back(v == i ? x + g : x);
  }
  return PolyMap(std::move(images));
}

inline PolyMap random_affine(const RingPtr& ring, Rng& rng) {
  const std::size_t n = ring->nvars();
  const FieldSpec& field = ring->field();
  while (true) {
    PolyMatrix a(ring, n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) a(r, c) = Polynomial::constant(ring, random_coefficient(field, rng, 3));
    }
    if (determinant(a).is_zero()) continue;
    std::vector<Polynomial> images;
    for (std::size_t r = 0; r < n; ++r) {
      Polynomial f = Polynomial::constant(ring, random_coefficient(field, rng, 3));
      for (std::size_t c = 0; c < n; ++c) f += a(r, c) * Polynomial::variable(ring, c);
      images.push_back(f);
    }
    return PolyMap(std::move(images));
  }
}

/// Composition of 1..max_steps random elementary and affine maps with total
/// degree at most max_degree.
inline PolyMap random_tame(const RingPtr& ring, Rng& rng, unsigned max_steps = 4, unsigned max_degree = 6) {
  while (true) {
    std::size_t steps = std::uniform_int_distribution<std::size_t>(1, max_steps)(rng);
    PolyMap f = PolyMap::identity(ring);
    for (std::size_t s = 0; s < steps; ++s) {
      bool affine = max_degree < 2 || std::uniform_int_distribution<int>(0, 2)(rng) == 0;
      PolyMap step = affine ? random_affine(ring, rng) : random_elementary(ring, rng, std::min(max_degree, 3u));
      f = f.after(step);
      if (f.max_degree() > max_degree) break;
    }
    if (f.max_degree() <= max_degree) return f;
  }
}

}  // namespace jcheck::testing
