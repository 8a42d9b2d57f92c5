#include "jcheck/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace jcheck {

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> priority)
    : kind_(kind), priority_(std::move(priority)) {
  std::vector<std::size_t> sorted = priority_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) throw RingError("monomial order priority is not a permutation");
  }
}

namespace {

std::vector<std::size_t> identity_priority(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

}  // namespace

MonomialOrder MonomialOrder::lex(std::size_t nvars) { return {OrderKind::Lex, identity_priority(nvars)}; }
MonomialOrder MonomialOrder::grlex(std::size_t nvars) { return {OrderKind::GradedLex, identity_priority(nvars)}; }
MonomialOrder MonomialOrder::grevlex(std::size_t nvars) {
  return {OrderKind::GradedReverseLex, identity_priority(nvars)};
}

std::strong_ordering MonomialOrder::compare(const ExponentVector& a, const ExponentVector& b) const {
  if (kind_ != OrderKind::Lex) {
    unsigned da = a.total_degree();
    unsigned db = b.total_degree();
    if (da != db) return da <=> db;
  }
  if (kind_ == OrderKind::GradedReverseLex) {
    for (std::size_t k = priority_.size(); k-- > 0;) {
      std::size_t v = priority_[k];
      if (a[v] != b[v]) return b[v] <=> a[v];
    }
    return std::strong_ordering::equal;
  }
  for (std::size_t v : priority_) {
    if (a[v] != b[v]) return a[v] <=> b[v];
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Terms sorted under an arbitrary order.

namespace {

using Terms = std::vector<Term>;

Terms ordered_terms(const Polynomial& f, const MonomialOrder& order) {
  Terms t = f.terms();
  if (order.kind() != OrderKind::GradedReverseLex || order.priority() != identity_priority(order.nvars())) {
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return order.greater(a.exponents, b.exponents); });
  }
  return t;
}

void make_monic(Terms& t) {
  if (t.empty() || t.front().coefficient.is_one()) return;
  FieldElement inv = t.front().coefficient.inverse();
  for (auto& term : t) term.coefficient *= inv;
}

// a[a_start..] - c * x^shift * b, all sorted descending under `order`.
Terms sub_scaled_shifted(const Terms& a, std::size_t a_start, const FieldElement& c, const ExponentVector& shift,
                         const Terms& b, const MonomialOrder& order) {
  Terms out;
  out.reserve(a.size() - a_start + b.size());
  std::size_t i = a_start;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    ExponentVector bj = b[j].exponents + shift;
    if (i == a.size()) {
      out.push_back({bj, -(c * b[j].coefficient)});
      ++j;
      continue;
    }
    auto cmp = order.compare(a[i].exponents, bj);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({bj, -(c * b[j].coefficient)});
      ++j;
    } else {
      FieldElement v = a[i].coefficient - c * b[j].coefficient;
      if (!v.is_zero()) out.push_back({bj, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

// Divides all coefficients of the given term lists by their common rational
// content so that they become coprime integers. Scaling keeps the ideal.
void remove_content(Terms& a, Terms& b) {
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  auto visit = [&](const Terms& t) {
    for (const auto& term : t) {
      const mpq_class& q = term.coefficient.rational();
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
    }
  };
  visit(a);
  visit(b);
  if (num_gcd == 0 || (num_gcd == 1 && den_lcm == 1)) return;
  FieldElement scale(FieldSpec(), mpq_class(den_lcm, num_gcd));
  for (auto& term : a) term.coefficient *= scale;
  for (auto& term : b) term.coefficient *= scale;
}

struct Divisor {
  Terms terms;  // monic, sorted under the order
};

// Full reduction of `h` by `basis`. With `scale_free`, the result is only
// determined up to a nonzero constant (used inside Buchberger over Q).
Terms reduce(Terms h, const std::vector<const Divisor*>& basis, const MonomialOrder& order, bool scale_free) {
  Terms rem;
  std::size_t start = 0;
  std::size_t steps = 0;
  const bool rational = !h.empty() && h.front().coefficient.characteristic() == 0;
  while (start < h.size()) {
    const Term& top = h[start];
    const Divisor* hit = nullptr;
    for (const Divisor* g : basis) {
      if (g->terms.front().exponents.divides(top.exponents)) {
        hit = g;
        break;
      }
    }
    if (!hit) {
      rem.push_back(top);
      ++start;
      continue;
    }
    ExponentVector shift = top.exponents - hit->terms.front().exponents;
    FieldElement c = top.coefficient;
    h = sub_scaled_shifted(h, start, c, shift, hit->terms, order);
    start = 0;
    if (scale_free && rational && (++steps % 8) == 0) remove_content(h, rem);
  }
  return rem;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  ExponentVector lcm;
};

}  // namespace

// ---------------------------------------------------------------------------

GroebnerBasis::GroebnerBasis(RingPtr ring, MonomialOrder order, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), order_(std::move(order)), generators_(std::move(generators)) {}

bool GroebnerBasis::is_unit() const { return generators_.size() == 1 && generators_[0].is_unit(); }

const Term& leading_term(const Polynomial& f, const MonomialOrder& order) {
  const auto& terms = f.terms();
  auto it = std::max_element(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.compare(a.exponents, b.exponents) < 0;
  });
  return *it;
}

std::vector<ExponentVector> GroebnerBasis::leading_monomials() const {
  std::vector<ExponentVector> lms;
  for (const auto& g : generators_) lms.push_back(leading_term(g, order_).exponents);
  return lms;
}

namespace {

RingPtr resolve_ring(std::span<const Polynomial> gens, RingPtr ring) {
  if (ring) {
    for (const auto& g : gens) {
      if (!(*g.ring() == *ring)) throw RingError("ring mismatch among generators");
    }
    return ring;
  }
  if (gens.empty()) throw RingError("an empty generator list needs an explicit ring");
  ring = gens[0].ring();
  for (const auto& g : gens) {
    if (!(*g.ring() == *ring)) throw RingError("ring mismatch among generators");
  }
  return ring;
}

}  // namespace

GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order, RingPtr ring) {
  ring = resolve_ring(gens, std::move(ring));
  if (order.nvars() != ring->nvars()) throw RingError("monomial order and ring disagree on variable count");
  const FieldSpec& field = ring->field();

  std::vector<Divisor> basis;
  basis.reserve(gens.size() * 4 + 8);
  auto unit_basis = [&] {
    return GroebnerBasis(ring, order, {Polynomial::constant(ring, 1)});
  };

  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (g.is_unit()) return unit_basis();
    Terms t = ordered_terms(g, order);
    make_monic(t);
    basis.push_back({std::move(t)});
  }
  if (basis.empty()) return GroebnerBasis(ring, order, {});

  auto lm = [&](std::size_t k) -> const ExponentVector& { return basis[k].terms.front().exponents; };

  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> pending_index;
  auto add_pairs_for = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      pending.push_back({i, k, lm(i).lcm(lm(k))});
      pending_index.insert({i, k});
    }
  };

  // Seed: pairs among the input generators.
  {
    std::size_t initial = basis.size();
    for (std::size_t k = 1; k < initial; ++k) {
      for (std::size_t i = 0; i < k; ++i) {
        pending.push_back({i, k, lm(i).lcm(lm(k))});
        pending_index.insert({i, k});
      }
    }
  }

  auto pick = [&]() -> Pair {
    auto best = std::min_element(pending.begin(), pending.end(), [&](const Pair& a, const Pair& b) {
      auto c = order.compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    });
    Pair p = *best;
    *best = pending.back();
    pending.pop_back();
    pending_index.erase({p.i, p.j});
    return p;
  };

  auto chain_skip = [&](const Pair& p) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == p.i || k == p.j) continue;
      if (!lm(k).divides(p.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::pair{std::min(a, b), std::max(a, b)}; };
      if (pending_index.count(key(p.i, k)) == 0 && pending_index.count(key(p.j, k)) == 0) return true;
    }
    return false;
  };

  while (!pending.empty()) {
    Pair p = pick();
    if (lm(p.i).coprime(lm(p.j))) continue;
    if (chain_skip(p)) continue;

    // S-polynomial of monic generators.
    Terms left;
    left.reserve(basis[p.i].terms.size());
    ExponentVector si = p.lcm - lm(p.i);
    for (const auto& t : basis[p.i].terms) left.push_back({t.exponents + si, t.coefficient});
    Terms s = sub_scaled_shifted(left, 0, FieldElement::one(field), p.lcm - lm(p.j), basis[p.j].terms, order);

    std::vector<const Divisor*> divisors;
    divisors.reserve(basis.size());
    for (const auto& d : basis) divisors.push_back(&d);
    Terms r = reduce(std::move(s), divisors, order, true);
    if (r.empty()) continue;
    if (r.front().exponents.is_constant()) return unit_basis();
    make_monic(r);
    basis.push_back({std::move(r)});
    add_pairs_for(basis.size() - 1);
  }

  // Minimal basis: drop generators whose leading monomial is divisible by
  // another surviving one (ties keep the earliest).
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    bool drop = false;
    for (std::size_t m = 0; m < basis.size() && !drop; ++m) {
      if (m == k) continue;
      if (lm(m).divides(lm(k)) && (!(lm(m) == lm(k)) || m < k)) drop = true;
    }
    if (!drop) keep.push_back(k);
  }

  // Interreduce.
  std::vector<Divisor> reduced;
  for (std::size_t k : keep) {
    std::vector<const Divisor*> others;
    for (std::size_t m : keep) {
      if (m != k) others.push_back(&basis[m]);
    }
    Terms head{basis[k].terms.front()};
    Terms tail(basis[k].terms.begin() + 1, basis[k].terms.end());
    Terms rest = reduce(std::move(tail), others, order, false);
    head.insert(head.end(), rest.begin(), rest.end());
    reduced.push_back({std::move(head)});
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Divisor& a, const Divisor& b) {
    return order.compare(a.terms.front().exponents, b.terms.front().exponents) < 0;
  });

  std::vector<Polynomial> out;
  out.reserve(reduced.size());
  for (auto& d : reduced) out.push_back(Polynomial::from_terms(ring, std::move(d.terms)));
  return GroebnerBasis(ring, order, std::move(out));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (!(*f.ring() == *gb.ring())) throw RingError("ring mismatch in normal form");
  std::vector<Divisor> divisors;
  divisors.reserve(gb.size());
  for (const auto& g : gb.generators()) divisors.push_back({ordered_terms(g, gb.order())});
  std::vector<const Divisor*> ptrs;
  for (const auto& d : divisors) ptrs.push_back(&d);
  Terms r = reduce(ordered_terms(f, gb.order()), ptrs, gb.order(), false);
  return Polynomial::from_terms(f.ring(), std::move(r));
}

bool ideal_contains(const GroebnerBasis& gb, const Polynomial& f) { return normal_form(f, gb).is_zero(); }

bool is_unit_ideal(std::span<const Polynomial> gens, RingPtr ring) {
  for (const auto& g : gens) {
    if (g.is_unit()) return true;
  }
  std::vector<Polynomial> nonzero;
  for (const auto& g : gens) {
    if (!g.is_zero()) nonzero.push_back(g);
  }
  if (nonzero.empty()) return false;
  ring = resolve_ring(nonzero, std::move(ring));
  return buchberger(nonzero, MonomialOrder::grevlex(ring->nvars()), ring).is_unit();
}

std::vector<Polynomial> elimination_ideal(std::span<const Polynomial> gens, std::span<const std::size_t> keep,
                                          RingPtr ring) {
  if (gens.empty()) return {};
  ring = resolve_ring(gens, std::move(ring));
  std::vector<std::size_t> priority;
  for (std::size_t v = 0; v < ring->nvars(); ++v) {
    if (std::find(keep.begin(), keep.end(), v) == keep.end()) priority.push_back(v);
  }
  for (std::size_t v : keep) {
    if (v >= ring->nvars()) throw RingError("kept variable out of range");
    priority.push_back(v);
  }
  GroebnerBasis gb = buchberger(gens, MonomialOrder(OrderKind::Lex, std::move(priority)), ring);
  std::vector<Polynomial> kept;
  for (const auto& g : gb.generators()) {
    if (g.only_uses(keep)) kept.push_back(g);
  }
  return kept;
}

QuotientDimension quotient_dimension(const GroebnerBasis& gb) {
  const std::size_t n = gb.ring()->nvars();
  if (gb.is_unit()) return {0};
  if (gb.is_zero()) return n == 0 ? QuotientDimension{1} : QuotientDimension{};
  auto lms = gb.leading_monomials();

  // Bound in each variable from pure powers among the leading monomials.
  std::vector<unsigned> bound(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (const auto& m : lms) {
      bool pure = m[v] > 0 && m.total_degree() == m[v];
      if (pure && (bound[v] == 0 || m[v] < bound[v])) bound[v] = m[v];
    }
    if (bound[v] == 0) return {};
  }

  std::uint64_t count = 0;
  ExponentVector cur(n);
  // Depth-first walk of the box; a divisible prefix prunes the rest of the
  // current coordinate range because larger exponents stay divisible.
  auto divisible = [&](const ExponentVector& e) {
    return std::any_of(lms.begin(), lms.end(), [&](const ExponentVector& m) { return m.divides(e); });
  };
  auto walk = [&](auto&& self, std::size_t v) -> void {
    if (v == n) {
      ++count;
      return;
    }
    for (unsigned e = 0; e < bound[v]; ++e) {
      cur.set(v, e);
      if (divisible(cur)) break;
      self(self, v + 1);
    }
    cur.set(v, 0);
  };
  walk(walk, 0);
  return {count};
}

QuotientDimension quotient_dimension(std::span<const Polynomial> gens, RingPtr ring) {
  ring = resolve_ring(gens, std::move(ring));
  return quotient_dimension(buchberger(gens, MonomialOrder::grevlex(ring->nvars()), ring));
}

}  // namespace jcheck
