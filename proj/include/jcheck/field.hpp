#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace jcheck {

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public FieldError {
 public:
  DivisionByZero() : FieldError("division by zero in coefficient field") {}
};

/// Deterministic RNG used everywhere a seed is accepted.
using Rng = std::mt19937_64;

/// Coefficient field: the rationals (characteristic 0) or F_p with p < 2^31.
class FieldSpec {
 public:
  /// The rationals.
  FieldSpec() = default;

  /// Throws FieldError unless `characteristic` is 0 or a prime below 2^31.
  explicit FieldSpec(std::uint32_t characteristic);

  static FieldSpec rationals() { return FieldSpec(); }
  static FieldSpec prime(std::uint32_t p) { return FieldSpec(p); }

  /// Parses "Q" or "F<p>".
  static FieldSpec parse(std::string_view text);

  std::uint32_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }
  bool is_prime_field() const { return p_ != 0; }

  /// "Q" or "F<p>".
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// An element of a FieldSpec. Representation is canonical: rationals are in
/// lowest terms with positive denominator, residues lie in [0, p).
class FieldElement {
 public:
  /// Zero of Q.
  FieldElement() : p_(0), value_(mpq_class(0)) {}

  FieldElement(const FieldSpec& field, long value);
  FieldElement(const FieldSpec& field, const mpz_class& value);
  /// Throws FieldError in characteristic p (fraction literals are a char-0 thing).
  FieldElement(const FieldSpec& field, const mpq_class& value);

  static FieldElement zero(const FieldSpec& field) { return FieldElement(field, 0L); }
  static FieldElement one(const FieldSpec& field) { return FieldElement(field, 1L); }

  FieldSpec field() const { return FieldSpec(p_); }
  std::uint32_t characteristic() const { return p_; }

  bool is_zero() const;
  bool is_one() const;

  /// Residue in [0, p). Only valid in characteristic p.
  std::uint32_t residue() const { return std::get<std::uint32_t>(value_); }
  /// Rational value. Only valid in characteristic 0.
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  /// Throws DivisionByZero on zero.
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.p_ == b.p_ && a.value_ == b.value_;
  }

  /// "-3/2", "7", or a residue such as "4".
  std::string to_string() const;

 private:
  void check_same_field(const FieldElement& rhs) const;

  std::uint32_t p_;
  std::variant<std::uint32_t, mpq_class> value_;
};

/// Uniform residue in characteristic p; in characteristic 0 a rational whose
/// numerator and denominator are bounded by `height_bound` in magnitude.
FieldElement random_element(const FieldSpec& field, Rng& rng, std::uint32_t height_bound = 100);

}  // namespace jcheck
