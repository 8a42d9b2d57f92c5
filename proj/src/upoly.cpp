#include "upoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace jcheck::detail {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::pair{new_t, t - q * new_t};
    std::tie(r, new_r) = std::pair{new_r, r - q * new_r};
  }
  if (r != 1) throw std::domain_error("inverse of zero modulo p");
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

ZpPoly operator+(const ZpPoly& a, const ZpPoly& b) {
  const std::uint32_t p = a.p_;
  ZpPoly::Coeffs c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<std::uint32_t>((std::uint64_t(a[i]) + b[i]) % p);
  return ZpPoly(p, std::move(c));
}

ZpPoly operator-(const ZpPoly& a, const ZpPoly& b) {
  const std::uint32_t p = a.p_;
  ZpPoly::Coeffs c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<std::uint32_t>((std::uint64_t(a[i]) + p - b[i]) % p);
  return ZpPoly(p, std::move(c));
}

ZpPoly operator*(const ZpPoly& a, const ZpPoly& b) {
  const std::uint32_t p = a.p_;
  if (a.is_zero() || b.is_zero()) return ZpPoly(p);
  ZpPoly::Coeffs c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      c[i + j] = static_cast<std::uint32_t>((c[i + j] + std::uint64_t(a.c_[i]) * b.c_[j]) % p);
    }
  }
  return ZpPoly(p, std::move(c));
}

ZpPoly ZpPoly::scaled(std::uint32_t s) const {
  Coeffs c = c_;
  for (auto& v : c) v = static_cast<std::uint32_t>(std::uint64_t(v) * s % p_);
  return ZpPoly(p_, std::move(c));
}

std::pair<ZpPoly, ZpPoly> divmod(const ZpPoly& a, const ZpPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const std::uint32_t p = a.p_;
  if (a.degree() < b.degree()) return {ZpPoly(p), a};
  ZpPoly::Coeffs r = a.c_;
  ZpPoly::Coeffs q(a.c_.size() - b.c_.size() + 1, 0);
  const std::uint32_t inv = inv_mod(b.lead(), p);
  const std::size_t db = b.c_.size() - 1;
  for (std::size_t k = q.size(); k-- > 0;) {
    std::uint32_t coef = static_cast<std::uint32_t>(std::uint64_t(r[k + db]) * inv % p);
    q[k] = coef;
    if (coef == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) {
      r[k + j] = static_cast<std::uint32_t>((r[k + j] + std::uint64_t(p - coef) * b.c_[j]) % p);
    }
  }
  return {ZpPoly(p, std::move(q)), ZpPoly(p, std::move(r))};
}

ZpPoly ZpPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(inv_mod(lead(), p_));
}

ZpPoly ZpPoly::derivative() const {
  if (c_.size() <= 1) return ZpPoly(p_);
  Coeffs c(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = static_cast<std::uint32_t>(std::uint64_t(c_[i]) * (i % p_) % p_);
  return ZpPoly(p_, std::move(c));
}

ZpPoly gcd(ZpPoly a, ZpPoly b) {
  while (!b.is_zero()) {
    ZpPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::tuple<ZpPoly, ZpPoly, ZpPoly> xgcd(const ZpPoly& a, const ZpPoly& b) {
  const std::uint32_t p = a.modulus();
  ZpPoly r0 = a, r1 = b;
  ZpPoly s0 = ZpPoly::constant(p, 1), s1(p);
  ZpPoly t0(p), t1 = ZpPoly::constant(p, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    ZpPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    ZpPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  std::uint32_t inv = inv_mod(r0.lead(), p);
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

ZpPoly powmod(ZpPoly base, mpz_class e, const ZpPoly& mod) {
  ZpPoly result = ZpPoly::constant(base.modulus(), 1) % mod;
  base = base % mod;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = (result * base) % mod;
    e >>= 1;
    if (e > 0) base = (base * base) % mod;
  }
  return result;
}

// ---------------------------------------------------------------------------

void trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  trim(c);
  return c;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
  ZPoly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  trim(c);
  return c;
}

mpz_class content(const ZPoly& f) {
  mpz_class g = 0;
  for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly primitive_part(const ZPoly& f) {
  if (f.empty()) return f;
  mpz_class g = content(f);
  if (f.back() < 0) g = -g;
  ZPoly out = f;
  for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return out;
}

std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  if (a.empty()) return ZPoly{};
  if (a.size() < b.size()) return std::nullopt;
  ZPoly r = a;
  ZPoly q(a.size() - b.size() + 1, 0);
  const std::size_t db = b.size() - 1;
  for (std::size_t k = q.size(); k-- > 0;) {
    const mpz_class& top = r[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    mpz_class coef;
    mpz_divexact(coef.get_mpz_t(), top.get_mpz_t(), b.back().get_mpz_t());
    q[k] = coef;
    for (std::size_t j = 0; j <= db; ++j) r[k + j] -= coef * b[j];
  }
  for (const auto& c : r) {
    if (c != 0) return std::nullopt;
  }
  trim(q);
  return q;
}

ZpPoly reduce_mod(const ZPoly& f, std::uint32_t p) {
  ZpPoly::Coeffs c(f.size());
  mpz_class r;
  for (std::size_t i = 0; i < f.size(); ++i) {
    mpz_fdiv_r_ui(r.get_mpz_t(), f[i].get_mpz_t(), p);
    c[i] = static_cast<std::uint32_t>(r.get_ui());
  }
  return ZpPoly(p, std::move(c));
}

ZPoly lift(const ZpPoly& f) {
  ZPoly out;
  for (auto c : f.coeffs()) out.emplace_back(static_cast<unsigned long>(c));
  return out;
}

ZPoly symmetric_mod(const ZPoly& f, const mpz_class& m) {
  ZPoly out(f.size());
  mpz_class half = m / 2;
  for (std::size_t i = 0; i < f.size(); ++i) {
    mpz_fdiv_r(out[i].get_mpz_t(), f[i].get_mpz_t(), m.get_mpz_t());
    if (out[i] > half) out[i] -= m;
  }
  trim(out);
  return out;
}

}  // namespace jcheck::detail
