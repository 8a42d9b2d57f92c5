#include "jcheck/map_analysis.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace jcheck {

PolyMap::PolyMap(std::vector<Polynomial> images) : images_(std::move(images)) {
  if (images_.empty()) throw MapError("a map needs at least one coordinate");
  const RingPtr& r = images_.front().ring();
  if (r->nvars() != images_.size()) {
    throw MapError("expected " + std::to_string(r->nvars()) + " coordinates, got " + std::to_string(images_.size()));
  }
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (*images_[i].ring() != *r) throw MapError("coordinates live in different rings");
    if (images_[i].is_constant()) throw DegenerateMap("coordinate " + std::to_string(i + 1) + " is constant");
    max_degree_ = std::max(max_degree_, *images_[i].total_degree());
  }
}

PolyMap PolyMap::identity(const RingPtr& ring) {
  std::vector<Polynomial> xs;
  for (std::size_t i = 0; i < ring->nvars(); ++i) xs.push_back(Polynomial::variable(ring, i));
  return PolyMap(std::move(xs));
}

std::uint64_t PolyMap::bezout_bound() const {
  std::uint64_t b = 1;
  for (const auto& f : images_) b *= *f.total_degree();
  return b;
}

PolyMap PolyMap::after(const PolyMap& inner) const {
  std::vector<Polynomial> out;
  for (const auto& f : images_) out.push_back(substitute(f, inner.images()));
  return PolyMap(std::move(out));
}

Polynomial PolyMap::apply(const Polynomial& a) const { return substitute(a, images_); }

bool PolyMap::is_identity() const { return *this == identity(ring()); }

std::string to_string(const PolyMap& map) {
  std::string s = "(";
  for (std::size_t i = 0; i < map.n(); ++i) {
    if (i) s += ", ";
    s += to_string(map[i]);
  }
  return s + ")";
}

std::pair<Polynomial, bool> det_jacobian_unit(const PolyMap& map) {
  Polynomial d = determinant(jacobian(map.images()));
  bool unit = d.is_unit();
  return {std::move(d), unit};
}

bool separability_check_endo(const PolyMap& map) {
  auto minors = maximal_minors(jacobian(map.images()));
  return is_unit_ideal(minors, map.ring());
}

bool separability_check_presented(std::span<const Polynomial> a_relations, const RingPtr& a_ring,
                                  std::span<const Polynomial> b_relations, std::span<const Polynomial> images,
                                  const RingPtr& b_ring) {
  if (!a_ring || !b_ring) throw MapError("missing ring in presentation");
  if (a_ring->field() != b_ring->field()) throw MapError("A and B must have the same coefficient field");
  if (images.size() != a_ring->nvars()) {
    throw MapError("need one image per generator of A (" + std::to_string(a_ring->nvars()) + ")");
  }
  for (const auto& q : a_relations) {
    if (*q.ring() != *a_ring) throw MapError("relation of A outside A's ring");
  }
  for (const auto& p : b_relations) {
    if (*p.ring() != *b_ring) throw MapError("relation of B outside B's ring");
  }
  for (const auto& f : images) {
    if (*f.ring() != *b_ring) throw MapError("image outside B's ring");
  }
  // The map must send every relation of A into the relation ideal of B.
  if (!a_relations.empty()) {
    GroebnerBasis gb = buchberger(b_relations, MonomialOrder::grevlex(b_ring->nvars()), b_ring);
    for (const auto& q : a_relations) {
      if (!ideal_contains(gb, substitute(q, images))) throw MapError("images do not respect the relations of A");
    }
  }
  const std::size_t m = b_ring->nvars();
  if (images.size() + b_relations.size() < m) return false;
  std::vector<Polynomial> rows(images.begin(), images.end());
  rows.insert(rows.end(), b_relations.begin(), b_relations.end());
  std::vector<Polynomial> gens(b_relations.begin(), b_relations.end());
  if (m == 0) {
    gens.push_back(Polynomial::constant(b_ring, 1));
  } else {
    for (auto& minor : maximal_minors(jacobian(rows))) gens.push_back(std::move(minor));
  }
  return is_unit_ideal(gens, b_ring);
}

namespace {

// K[X_1..X_n, Y_1..Y_n] with the source names followed by fresh ones.
RingPtr pair_ring(const RingPtr& source) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < source->nvars(); ++i) names.push_back(source->name(i));
  for (std::size_t i = 0; i < source->nvars(); ++i) names.push_back("_Y" + std::to_string(i + 1));
  return make_ring(source->field(), std::move(names));
}

GroebnerBasis graph_basis(const PolyMap& map, const RingPtr& big) {
  const std::size_t n = map.n();
  std::vector<std::size_t> xs(n);
  std::iota(xs.begin(), xs.end(), 0);
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < n; ++i) {
    gens.push_back(Polynomial::variable(big, n + i) - embed(map[i], big, xs));
  }
  return buchberger(gens, MonomialOrder::lex(2 * n), big);
}

}  // namespace

ImageAlgebra::ImageAlgebra(const PolyMap& map)
    : source_(map.ring()), big_(pair_ring(source_)), n_(map.n()), gb_(graph_basis(map, big_)) {}

std::optional<Polynomial> ImageAlgebra::preimage(const Polynomial& b) const {
  if (*b.ring() != *source_) throw MapError("element outside the map's ring");
  std::vector<std::size_t> xs(n_);
  std::iota(xs.begin(), xs.end(), 0);
  Polynomial r = normal_form(embed(b, big_, xs), gb_);
  std::vector<std::size_t> ys(n_);
  std::iota(ys.begin(), ys.end(), n_);
  if (!r.only_uses(ys)) return std::nullopt;
  // Rename Y_i back to X_i.
  std::vector<Polynomial> back(2 * n_, Polynomial(source_));
  for (std::size_t i = 0; i < n_; ++i) back[n_ + i] = Polynomial::variable(source_, i);
  return substitute(r, back);
}

std::optional<PolyMap> invert(const PolyMap& map) {
  // Automorphisms have a unit Jacobian; skip the lex basis otherwise.
  if (!det_jacobian_unit(map).second) return std::nullopt;
  ImageAlgebra image(map);
  std::vector<Polynomial> inverse;
  for (std::size_t i = 0; i < map.n(); ++i) {
    auto g = image.preimage(Polynomial::variable(map.ring(), i));
    if (!g) return std::nullopt;
    inverse.push_back(std::move(*g));
  }
  return PolyMap(std::move(inverse));
}

GeometricDegree geometric_degree(const PolyMap& map, unsigned trials, std::uint64_t seed) {
  if (trials == 0) throw MapError("trials must be at least 1");
  Rng rng(seed);
  GeometricDegree out;
  std::map<std::uint64_t, unsigned> votes;
  for (unsigned t = 0; t < trials; ++t) {
    std::vector<Polynomial> fiber;
    for (const auto& f : map.images()) {
      fiber.push_back(f - Polynomial::constant(map.ring(), random_element(map.field(), rng)));
    }
    QuotientDimension d = quotient_dimension(fiber, map.ring());
    out.samples.push_back(d.value);
    if (d.value && *d.value > 0) ++votes[*d.value];
  }
  unsigned voted = 0, best = 0;
  for (const auto& [value, count] : votes) {
    voted += count;
    if (count > best) {  // ascending keys: ties keep the minimum
      best = count;
      out.value = value;
    }
  }
  out.low_confidence = votes.size() != 1 || voted != trials;
  return out;
}

bool bezout_check(const PolyMap& map, const AnalysisReport& report) {
  if (!report.geometric_degree.value) throw MapError("Bezout check needs a finite geometric degree");
  return *report.geometric_degree.value <= map.bezout_bound();
}

AnalysisReport analyze(const PolyMap& map, unsigned trials, std::uint64_t seed) {
  auto [det, unit] = det_jacobian_unit(map);
  AnalysisReport r{det, unit, false, false, std::nullopt, {}, std::nullopt, 0, std::nullopt, 0, 0, 0};
  r.separable = r.det_j_is_unit || separability_check_endo(map);
  r.inverse = invert(map);
  r.invertible = r.inverse.has_value();
  r.geometric_degree = geometric_degree(map, trials, seed);
  r.samples_used = r.geometric_degree.samples.size();
  r.trials = trials;
  r.seed = seed;
  r.bezout_bound = map.bezout_bound();
  if (r.geometric_degree.value) {
    const std::uint32_t p = map.field().characteristic();
    r.gdeg_divisible_by_p = p != 0 && *r.geometric_degree.value % p == 0;
    if (r.separable) r.bezout_holds = bezout_check(map, r);
  }
  return r;
}

}  // namespace jcheck
