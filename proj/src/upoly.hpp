#pragma once

// Dense univariate polynomials used internally by the factorization code.
// Coefficient vectors are stored low degree first and kept trimmed (no
// trailing zeros); the zero polynomial is the empty vector.

#include <cstdint>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace jcheck::detail {

// ---------------------------------------------------------------------------
// F_p[x]

class ZpPoly {
 public:
  using Coeffs = std::vector<std::uint32_t>;

  explicit ZpPoly(std::uint32_t p) : p_(p) {}
  ZpPoly(std::uint32_t p, Coeffs c) : p_(p), c_(std::move(c)) { trim(); }

  static ZpPoly constant(std::uint32_t p, std::uint32_t c) { return ZpPoly(p, Coeffs{c % p}); }
  static ZpPoly x(std::uint32_t p) { return ZpPoly(p, Coeffs{0, 1}); }

  std::uint32_t modulus() const { return p_; }
  const Coeffs& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::uint32_t lead() const { return c_.back(); }
  std::uint32_t operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

  friend bool operator==(const ZpPoly&, const ZpPoly&) = default;

  friend ZpPoly operator+(const ZpPoly& a, const ZpPoly& b);
  friend ZpPoly operator-(const ZpPoly& a, const ZpPoly& b);
  friend ZpPoly operator*(const ZpPoly& a, const ZpPoly& b);
  ZpPoly scaled(std::uint32_t s) const;

  /// Quotient and remainder; b must be nonzero.
  friend std::pair<ZpPoly, ZpPoly> divmod(const ZpPoly& a, const ZpPoly& b);
  friend ZpPoly operator%(const ZpPoly& a, const ZpPoly& b) { return divmod(a, b).second; }
  friend ZpPoly operator/(const ZpPoly& a, const ZpPoly& b) { return divmod(a, b).first; }

  ZpPoly monic() const;
  ZpPoly derivative() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::uint32_t p_;
  Coeffs c_;
};

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);
ZpPoly gcd(ZpPoly a, ZpPoly b);
/// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
std::tuple<ZpPoly, ZpPoly, ZpPoly> xgcd(const ZpPoly& a, const ZpPoly& b);
ZpPoly powmod(ZpPoly base, mpz_class e, const ZpPoly& mod);

// ---------------------------------------------------------------------------
// Z[x]

using ZPoly = std::vector<mpz_class>;

void trim(ZPoly& f);
int degree(const ZPoly& f);
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
mpz_class content(const ZPoly& f);
/// Divides by the content and makes the leading coefficient positive.
ZPoly primitive_part(const ZPoly& f);
/// Exact quotient a / b over Z, or empty if b does not divide a.
std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b);
ZpPoly reduce_mod(const ZPoly& f, std::uint32_t p);
ZPoly lift(const ZpPoly& f);
/// Coefficients reduced into (-m/2, m/2].
ZPoly symmetric_mod(const ZPoly& f, const mpz_class& m);

}  // namespace jcheck::detail
