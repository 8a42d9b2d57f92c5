#include "jcheck/factor.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "upoly.hpp"

namespace jcheck {

using detail::ZPoly;
using detail::ZpPoly;

Polynomial Factorization::expand(const RingPtr& ring) const {
  Polynomial out = Polynomial::constant(ring, unit);
  for (const auto& f : factors) out *= f.polynomial.pow(f.multiplicity);
  return out;
}

Polynomial make_monic(const Polynomial& f) {
  if (f.is_zero()) return f;
  return f * f.leading_term().coefficient.inverse();
}

namespace {

// ---------------------------------------------------------------------------
// Conversions between sparse polynomials and dense univariate ones.

std::size_t univariate_index(const Polynomial& f) {
  auto vars = f.occurring_variables();
  if (f.is_zero()) throw FactorError("cannot factor the zero polynomial");
  if (vars.empty()) throw FactorError("cannot factor a constant");
  if (vars.size() > 1) throw FactorError("expected a univariate polynomial");
  return vars[0];
}

ZpPoly to_zp(const Polynomial& f, std::size_t x) {
  const std::uint32_t p = f.field().characteristic();
  ZpPoly::Coeffs c(f.degree_in(x) + 1, 0);
  for (const auto& t : f.terms()) c[t.exponents[x]] = t.coefficient.residue();
  return ZpPoly(p, std::move(c));
}

Polynomial from_zp(const ZpPoly& g, const RingPtr& ring, std::size_t x) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < g.coeffs().size(); ++k) {
    if (g[k] == 0) continue;
    ExponentVector e(ring->nvars());
    e.set(x, static_cast<unsigned>(k));
    terms.push_back({e, FieldElement(ring->field(), static_cast<long>(g[k]))});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

Polynomial from_z(const ZPoly& g, const RingPtr& ring, std::size_t x) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (g[k] == 0) continue;
    ExponentVector e(ring->nvars());
    e.set(x, static_cast<unsigned>(k));
    terms.push_back({e, FieldElement(ring->field(), g[k])});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

void sort_factors(std::vector<Factor>& factors) {
  std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) {
    unsigned da = *a.polynomial.total_degree();
    unsigned db = *b.polynomial.total_degree();
    if (da != db) return da < db;
    return to_string(a.polynomial) < to_string(b.polynomial);
  });
}

// ---------------------------------------------------------------------------
// F_p[x]

// (square-free part, multiplicity) pairs; input monic.
std::vector<std::pair<ZpPoly, unsigned>> squarefree_fp(const ZpPoly& f) {
  const std::uint32_t p = f.modulus();
  std::vector<std::pair<ZpPoly, unsigned>> out;
  ZpPoly c = detail::gcd(f, f.derivative());
  ZpPoly w = f / c;
  unsigned i = 1;
  while (w.degree() > 0) {
    ZpPoly y = detail::gcd(w, c);
    ZpPoly z = w / y;
    if (z.degree() > 0) out.push_back({z.monic(), i});
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0) {
    // c is a polynomial in x^p; take the p-th root (a^(1/p) = a in F_p).
    ZpPoly::Coeffs root;
    for (std::size_t k = 0; k < c.coeffs().size(); k += p) root.push_back(c[k]);
    for (auto& [g, m] : squarefree_fp(ZpPoly(p, std::move(root)).monic())) out.push_back({g, m * p});
  }
  return out;
}

// (product of all irreducible factors of degree d, d); input monic square-free.
std::vector<std::pair<ZpPoly, unsigned>> distinct_degree(ZpPoly f) {
  const std::uint32_t p = f.modulus();
  std::vector<std::pair<ZpPoly, unsigned>> out;
  ZpPoly x = ZpPoly::x(p);
  ZpPoly h = x;
  unsigned d = 1;
  while (f.degree() >= 2 * static_cast<int>(d)) {
    h = detail::powmod(h, p, f);
    ZpPoly g = detail::gcd(h - x, f);
    if (!g.is_one()) {
      out.push_back({g, d});
      f = f / g;
      h = h % f;
    }
    ++d;
  }
  if (f.degree() > 0) out.push_back({f, static_cast<unsigned>(f.degree())});
  return out;
}

ZpPoly random_below(std::uint32_t p, int degree, Rng& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
  ZpPoly::Coeffs c(static_cast<std::size_t>(degree));
  for (auto& v : c) v = dist(rng);
  return ZpPoly(p, std::move(c));
}

// Splits a monic product of irreducibles of equal degree d.
void equal_degree(const ZpPoly& f, unsigned d, Rng& rng, std::vector<ZpPoly>& out) {
  if (f.degree() == static_cast<int>(d)) {
    out.push_back(f);
    return;
  }
  const std::uint32_t p = f.modulus();
  while (true) {
    ZpPoly a = random_below(p, f.degree(), rng);
    if (a.degree() < 1) continue;
    ZpPoly b(p);
    if (p == 2) {
      // Trace map a + a^2 + ... + a^(2^(d-1)).
      ZpPoly term = a % f;
      b = term;
      for (unsigned k = 1; k < d; ++k) {
        term = (term * term) % f;
        b = b + term;
      }
    } else {
      // a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p-1)/2).
      ZpPoly frob = a % f;
      ZpPoly norm = frob;
      for (unsigned k = 1; k < d; ++k) {
        frob = detail::powmod(frob, p, f);
        norm = (norm * frob) % f;
      }
      b = detail::powmod(norm, (p - 1) / 2, f) - ZpPoly::constant(p, 1);
    }
    ZpPoly g = detail::gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

// Monic irreducible factors with multiplicity.
std::vector<std::pair<ZpPoly, unsigned>> factor_fp(const ZpPoly& f, Rng& rng) {
  std::vector<std::pair<ZpPoly, unsigned>> out;
  for (const auto& [part, mult] : squarefree_fp(f.monic())) {
    for (const auto& [block, d] : distinct_degree(part)) {
      std::vector<ZpPoly> irreducibles;
      equal_degree(block, d, rng, irreducibles);
      for (auto& g : irreducibles) out.push_back({std::move(g), mult});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Q[x] helpers (dense, low degree first).

using QPoly = std::vector<mpq_class>;

void trim_q(QPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::pair<QPoly, QPoly> divmod_q(const QPoly& a, const QPoly& b) {
  if (a.size() < b.size()) return {{}, a};
  QPoly r = a;
  QPoly q(a.size() - b.size() + 1);
  const std::size_t db = b.size() - 1;
  for (std::size_t k = q.size(); k-- > 0;) {
    q[k] = r[k + db] / b.back();
    if (q[k] == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) r[k + j] -= q[k] * b[j];
  }
  trim_q(q);
  trim_q(r);
  return {q, r};
}

QPoly monic_q(QPoly f) {
  mpq_class lc = f.back();
  for (auto& c : f) c /= lc;
  return f;
}

QPoly gcd_q(QPoly a, QPoly b) {
  while (!b.empty()) {
    QPoly r = divmod_q(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? a : monic_q(std::move(a));
}

QPoly derivative_q(const QPoly& f) {
  QPoly d;
  for (std::size_t k = 1; k < f.size(); ++k) d.push_back(f[k] * static_cast<unsigned long>(k));
  trim_q(d);
  return d;
}

QPoly sub_q(const QPoly& a, const QPoly& b) {
  QPoly c(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  trim_q(c);
  return c;
}

ZPoly primitive_from_q(const QPoly& f) {
  mpz_class den = 1;
  for (const auto& c : f) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  ZPoly z;
  for (const auto& c : f) z.push_back(c.get_num() * (den / c.get_den()));
  return detail::primitive_part(z);
}

// Yun's square-free decomposition in characteristic 0.
std::vector<std::pair<ZPoly, unsigned>> squarefree_q(const QPoly& f) {
  std::vector<std::pair<ZPoly, unsigned>> out;
  QPoly df = derivative_q(f);
  QPoly b = gcd_q(f, df);
  QPoly c = divmod_q(f, b).first;
  QPoly d = sub_q(divmod_q(df, b).first, derivative_q(c));
  unsigned i = 1;
  while (c.size() > 1) {
    QPoly a = gcd_q(c, d);
    if (a.size() > 1) out.push_back({primitive_from_q(a), i});
    c = divmod_q(c, a).first;
    d = sub_q(divmod_q(d, a).first, derivative_q(c));
    ++i;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Zassenhaus over Z.

mpz_class pow_ui(std::uint32_t p, unsigned k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, k);
  return r;
}

ZPoly mod_nonneg(const ZPoly& f, const mpz_class& m) {
  ZPoly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) mpz_fdiv_r(out[i].get_mpz_t(), f[i].get_mpz_t(), m.get_mpz_t());
  detail::trim(out);
  return out;
}

ZPoly scale(const ZPoly& f, const mpz_class& s) {
  ZPoly out = f;
  for (auto& c : out) c *= s;
  detail::trim(out);
  return out;
}

// Lifts f = g0 * h0 (mod p), h0 monic, gcd(g0, h0) = 1, to a factorization
// modulo p^k with h monic.
std::pair<ZPoly, ZPoly> hensel_two(const ZPoly& f, const ZpPoly& g0, const ZpPoly& h0, std::uint32_t p, unsigned k) {
  auto [one, s, t] = detail::xgcd(g0, h0);
  ZPoly g = detail::lift(g0);
  ZPoly h = detail::lift(h0);
  mpz_class pj = p;
  for (unsigned j = 1; j < k; ++j) {
    ZPoly e = detail::sub(f, detail::mul(g, h));
    for (auto& c : e) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pj.get_mpz_t());
    ZpPoly ep = detail::reduce_mod(e, p);
    auto [q, dh] = divmod(s * ep, h0);
    ZpPoly dg = t * ep + q * g0;
    g = detail::sub(g, scale(detail::lift(dg), -pj));
    h = detail::sub(h, scale(detail::lift(dh), -pj));
    pj *= p;
    g = mod_nonneg(g, pj);
    h = mod_nonneg(h, pj);
  }
  return {g, h};
}

// Monic lifts u_i modulo p^k with f = lc(f) * prod(u_i) (mod p^k).
std::vector<ZPoly> multi_lift(const ZPoly& f, std::span<const ZpPoly> factors, std::uint32_t p, unsigned k) {
  const mpz_class m = pow_ui(p, k);
  if (factors.size() == 1) {
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), m.get_mpz_t());
    return {mod_nonneg(scale(f, inv), m)};
  }
  std::size_t half = factors.size() / 2;
  ZpPoly g0 = ZpPoly::constant(p, detail::reduce_mod(ZPoly{f.back()}, p)[0]);
  for (std::size_t i = 0; i < half; ++i) g0 = g0 * factors[i];
  ZpPoly h0 = ZpPoly::constant(p, 1);
  for (std::size_t i = half; i < factors.size(); ++i) h0 = h0 * factors[i];
  auto [g, h] = hensel_two(f, g0, h0, p, k);
  auto left = multi_lift(g, factors.first(half), p, k);
  auto right = multi_lift(h, factors.subspan(half), p, k);
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

constexpr std::size_t kMaxModularFactors = 20;

// Irreducible factors of a primitive square-free integer polynomial.
std::vector<ZPoly> zassenhaus(ZPoly g) {
  if (detail::degree(g) <= 1) return {g};
  const ZPoly dg = [&] {
    ZPoly d;
    for (std::size_t k = 1; k < g.size(); ++k) d.push_back(g[k] * static_cast<unsigned long>(k));
    return d;
  }();

  // Among the first few good primes pick the one with the fewest factors.
  Rng rng(kDefaultFactorSeed);
  std::uint32_t best_p = 0;
  std::vector<ZpPoly> best;
  int good = 0;
  for (std::uint32_t p = 3; good < 5 && p < 10000; p += 2) {
    if (!is_prime(p)) continue;
    if (mpz_divisible_ui_p(g.back().get_mpz_t(), p)) continue;
    ZpPoly gp = detail::reduce_mod(g, p);
    if (!detail::gcd(gp, detail::reduce_mod(dg, p)).is_one()) continue;
    ++good;
    std::vector<ZpPoly> fs;
    for (auto& [u, mult] : factor_fp(gp, rng)) fs.push_back(u);
    if (best_p == 0 || fs.size() < best.size()) {
      best_p = p;
      best = std::move(fs);
    }
    if (best.size() == 1) break;
  }
  if (best_p == 0) throw FactorError("no good prime found for modular factorization");
  if (best.size() == 1) return {g};
  if (best.size() > kMaxModularFactors) {
    throw SizeRefusal("too many modular factors for exhaustive recombination");
  }

  // Mignotte-type bound on coefficients of lc(g) * (any factor).
  mpz_class norm2 = 0;
  for (const auto& c : g) norm2 += c * c;
  mpz_class root = sqrt(norm2) + 1;
  mpz_class bound = abs(g.back()) * root;
  bound <<= static_cast<unsigned long>(detail::degree(g));
  unsigned k = 1;
  mpz_class m = best_p;
  while (m <= 2 * bound) {
    m *= best_p;
    ++k;
  }

  std::vector<ZPoly> lifted = multi_lift(g, best, best_p, k);
  std::vector<ZPoly> found;
  std::vector<std::size_t> remaining(lifted.size());
  std::iota(remaining.begin(), remaining.end(), 0);

  std::size_t s = 1;
  while (2 * s <= remaining.size()) {
    bool split = false;
    std::vector<std::size_t> pick(s);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      ZPoly cand{g.back()};
      for (std::size_t i : pick) cand = detail::mul(cand, lifted[remaining[i]]);
      cand = detail::primitive_part(detail::symmetric_mod(cand, m));
      if (detail::degree(cand) > 0) {
        if (auto q = detail::divide_exact(g, cand)) {
          found.push_back(cand);
          g = std::move(*q);
          std::vector<std::size_t> rest;
          for (std::size_t i = 0; i < remaining.size(); ++i) {
            if (std::find(pick.begin(), pick.end(), i) == pick.end()) rest.push_back(remaining[i]);
          }
          remaining = std::move(rest);
          split = true;
          break;
        }
      }
      // Next s-subset of [0, remaining.size()).
      std::size_t i = s;
      while (i > 0 && pick[i - 1] == remaining.size() - s + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!split) ++s;
  }
  if (detail::degree(g) > 0) found.push_back(detail::primitive_part(g));
  return found;
}

QPoly to_q(const Polynomial& f, std::size_t x) {
  QPoly c(f.degree_in(x) + 1);
  for (const auto& t : f.terms()) c[t.exponents[x]] = t.coefficient.rational();
  return c;
}

// Irreducible primitive integer factors with multiplicity of a univariate
// rational polynomial given densely.
std::vector<std::pair<ZPoly, unsigned>> factor_q_dense(const QPoly& f) {
  std::vector<std::pair<ZPoly, unsigned>> out;
  for (const auto& [part, mult] : squarefree_q(f)) {
    for (auto& g : zassenhaus(part)) out.push_back({std::move(g), mult});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Multivariate via Kronecker substitution.

void check_bounds(const Polynomial& f, const DeskBounds& bounds) {
  if (f.is_zero()) throw FactorError("zero polynomial");
  if (f.is_constant()) throw FactorError("constant polynomial");
  auto vars = f.occurring_variables();
  if (vars.size() <= 1) return;  // complete univariate algorithms apply
  unsigned d = *f.total_degree();
  if (vars.size() > bounds.max_variables) {
    throw SizeRefusal("more than " + std::to_string(bounds.max_variables) + " variables");
  }
  if (f.field().is_rational()) {
    if (d > bounds.max_degree_rationals) {
      throw SizeRefusal("degree " + std::to_string(d) + " exceeds the bound over Q");
    }
  } else {
    if (f.field().characteristic() > bounds.max_characteristic) {
      throw SizeRefusal("characteristic above " + std::to_string(bounds.max_characteristic));
    }
    if (d > bounds.max_degree_prime_field) {
      throw SizeRefusal("degree " + std::to_string(d) + " exceeds the bound over " + f.field().name());
    }
  }
}

constexpr std::uint64_t kMaxDivisorCandidates = 1u << 16;

// An irreducible factor of minimal total degree, or empty if f is irreducible.
std::optional<Polynomial> smallest_factor(const Polynomial& f, const std::vector<std::size_t>& vars) {
  const RingPtr& ring = f.ring();
  const unsigned d = *f.total_degree();
  const std::uint64_t base = d + 1;

  // Kronecker image: X_vars[i] -> x^(base^i).
  std::map<std::uint64_t, FieldElement> image;
  for (const auto& t : f.terms()) {
    std::uint64_t e = 0, w = 1;
    for (std::size_t v : vars) {
      e += t.exponents[v] * w;
      w *= base;
    }
    image.emplace(e, t.coefficient);
  }
  const std::uint64_t top = image.rbegin()->first;

  // Univariate factors of the image, as dense coefficient lists over K.
  std::vector<std::vector<FieldElement>> factors;
  std::vector<unsigned> mults;
  const FieldSpec& field = f.field();
  if (field.is_prime_field()) {
    ZpPoly::Coeffs c(top + 1, 0);
    for (const auto& [e, coef] : image) c[e] = coef.residue();
    Rng rng(kDefaultFactorSeed);
    for (auto& [u, m] : factor_fp(ZpPoly(field.characteristic(), std::move(c)), rng)) {
      std::vector<FieldElement> coeffs;
      for (auto v : u.coeffs()) coeffs.emplace_back(field, static_cast<long>(v));
      factors.push_back(std::move(coeffs));
      mults.push_back(m);
    }
  } else {
    QPoly c(top + 1);
    for (const auto& [e, coef] : image) c[e] = coef.rational();
    for (auto& [u, m] : factor_q_dense(c)) {
      std::vector<FieldElement> coeffs;
      for (const auto& v : u) coeffs.emplace_back(field, v);
      factors.push_back(std::move(coeffs));
      mults.push_back(m);
    }
  }

  std::uint64_t candidates = 1;
  for (unsigned m : mults) {
    candidates *= m + 1;
    if (candidates > kMaxDivisorCandidates) throw SizeRefusal("too many divisor candidates");
  }

  auto dense_mul = [&](const std::vector<FieldElement>& a, const std::vector<FieldElement>& b) {
    std::vector<FieldElement> c(a.size() + b.size() - 1, FieldElement::zero(field));
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
  };

  // Enumerate exponent tuples; keep candidates of total degree in [1, d/2].
  std::vector<std::pair<unsigned, Polynomial>> cands;
  std::vector<unsigned> tuple(factors.size(), 0);
  for (std::uint64_t idx = 0; idx < candidates; ++idx) {
    std::uint64_t rest = idx;
    for (std::size_t j = 0; j < factors.size(); ++j) {
      tuple[j] = static_cast<unsigned>(rest % (mults[j] + 1));
      rest /= mults[j] + 1;
    }
    std::vector<FieldElement> prod{FieldElement::one(field)};
    for (std::size_t j = 0; j < factors.size(); ++j) {
      for (unsigned r = 0; r < tuple[j]; ++r) prod = dense_mul(prod, factors[j]);
    }
    if (prod.size() == 1) continue;
    std::vector<Term> terms;
    bool fits = true;
    for (std::uint64_t e = 0; e < prod.size() && fits; ++e) {
      if (prod[e].is_zero()) continue;
      ExponentVector ev(ring->nvars());
      std::uint64_t digits = e;
      for (std::size_t v : vars) {
        ev.set(v, static_cast<unsigned>(digits % base));
        digits /= base;
      }
      if (digits != 0) fits = false;
      terms.push_back({ev, prod[e]});
    }
    if (!fits) continue;
    Polynomial g = Polynomial::from_terms(ring, std::move(terms));
    unsigned dg = *g.total_degree();
    if (dg >= 1 && 2 * dg <= d) cands.emplace_back(dg, std::move(g));
  }
  std::stable_sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [dg, g] : cands) {
    if (divide_exact(f, g)) return make_monic(g);
  }
  return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------------------

Factorization factor_univariate(const Polynomial& f, std::uint64_t seed) {
  if (f.field().is_rational()) throw FactorError("characteristic 0 input; use factor_univariate_q");
  const std::size_t x = univariate_index(f);
  Rng rng(seed);
  ZpPoly fp = to_zp(f, x);
  Factorization out{FieldElement(f.field(), static_cast<long>(fp.lead())), {}};
  for (auto& [u, m] : factor_fp(fp, rng)) out.factors.push_back({from_zp(u, f.ring(), x), m});
  sort_factors(out.factors);
  return out;
}

Factorization factor_univariate_q(const Polynomial& f, const DeskBounds& bounds) {
  if (!f.field().is_rational()) throw FactorError("expected a polynomial over Q");
  const std::size_t x = univariate_index(f);
  if (f.degree_in(x) > bounds.max_degree_univariate_q) {
    throw SizeRefusal("degree " + std::to_string(f.degree_in(x)) + " exceeds the univariate bound " +
                      std::to_string(bounds.max_degree_univariate_q));
  }
  Factorization out{f.leading_term().coefficient, {}};
  for (auto& [g, m] : factor_q_dense(to_q(f, x))) {
    out.factors.push_back({make_monic(from_z(g, f.ring(), x)), m});
  }
  sort_factors(out.factors);
  return out;
}

Factorization factor_small(const Polynomial& f, const DeskBounds& bounds) {
  check_bounds(f, bounds);
  auto vars = f.occurring_variables();
  if (vars.size() == 1) {
    return f.field().is_rational() ? factor_univariate_q(f, bounds) : factor_univariate(f);
  }
  Factorization out{f.leading_term().coefficient, {}};
  Polynomial rest = f;
  while (!rest.is_constant()) {
    auto g = smallest_factor(rest, rest.occurring_variables());
    Polynomial factor = g ? *g : make_monic(rest);
    unsigned mult = 0;
    while (auto q = divide_exact(rest, factor)) {
      rest = std::move(*q);
      ++mult;
    }
    out.factors.push_back({factor, mult});
  }
  sort_factors(out.factors);
  return out;
}

bool is_irreducible_multivariate(const Polynomial& f, const DeskBounds& bounds) {
  check_bounds(f, bounds);
  auto vars = f.occurring_variables();
  if (*f.total_degree() == 1) return true;
  if (vars.size() == 1) {
    auto fac = factor_small(f, bounds);
    return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
  }
  return !smallest_factor(f, vars).has_value();
}

bool is_primary_element(const Polynomial& f, const DeskBounds& bounds) {
  return factor_small(f, bounds).distinct_factors() == 1;
}

}  // namespace jcheck
