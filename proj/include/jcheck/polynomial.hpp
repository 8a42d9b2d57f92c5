#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jcheck/field.hpp"

namespace jcheck {

inline constexpr std::size_t kMaxVariables = 16;

class RingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exponents of a monomial in a fixed number of variables.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t nvars);
  ExponentVector(std::initializer_list<unsigned> exps);

  std::size_t size() const { return size_; }
  unsigned operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, unsigned value);

  unsigned total_degree() const;
  bool is_constant() const { return total_degree() == 0; }

  /// True if every exponent of *this is <= the matching exponent of `other`.
  bool divides(const ExponentVector& other) const;
  ExponentVector lcm(const ExponentVector& other) const;
  bool coprime(const ExponentVector& other) const;

  ExponentVector& operator+=(const ExponentVector& rhs);
  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
  /// Requires b.divides(a).
  friend ExponentVector operator-(const ExponentVector& a, const ExponentVector& b);

  friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
    return a.size_ == b.size_ && a.e_ == b.e_;
  }

 private:
  std::array<std::uint16_t, kMaxVariables> e_{};
  std::uint8_t size_ = 0;
};

/// Graded reverse lexicographic comparison with X1 > X2 > ... > Xn.
std::strong_ordering grevlex_compare(const ExponentVector& a, const ExponentVector& b);

/// Coefficient field plus variable names. Rings compare by value.
class Ring {
 public:
  Ring(FieldSpec field, std::vector<std::string> names);

  const FieldSpec& field() const { return field_; }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  FieldSpec field_;
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(FieldSpec field, std::vector<std::string> names);
/// Ring with variables `prefix`1..`prefix`n, e.g. X1 X2 X3.
RingPtr make_ring(FieldSpec field, std::size_t nvars, std::string_view prefix = "X");

struct Term {
  ExponentVector exponents;
  FieldElement coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse multivariate polynomial. Terms are kept in descending grevlex order
/// with no zero coefficients, so structural equality is equality.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, const FieldElement& c);
  static Polynomial constant(RingPtr ring, long c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, const ExponentVector& exps, const FieldElement& c);
  /// Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const FieldSpec& field() const { return ring_->field(); }
  std::size_t nvars() const { return ring_->nvars(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Nonzero constant.
  bool is_unit() const;
  /// Constant coefficient, zero if absent.
  FieldElement constant_term() const;
  /// Coefficient of `exps`, zero if absent.
  FieldElement coefficient(const ExponentVector& exps) const;

  /// Total degree; empty for the zero polynomial.
  std::optional<unsigned> total_degree() const;
  unsigned degree_in(std::size_t var) const;
  /// True if no variable outside `vars` occurs.
  bool only_uses(std::span<const std::size_t> vars) const;
  /// Indices of the variables that occur, ascending.
  std::vector<std::size_t> occurring_variables() const;

  /// Leading term under grevlex. Requires a nonzero polynomial.
  const Term& leading_term() const { return terms_.front(); }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const FieldElement& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const FieldElement& c) { return a *= c; }
  friend Polynomial operator*(const FieldElement& c, Polynomial a) { return a *= c; }

  Polynomial pow(unsigned e) const;

  FieldElement evaluate(std::span<const FieldElement> point) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {}
  void check_ring(const Polynomial& rhs) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Printed form, e.g. "X1^2*X2 - 3/2*X1 + 1". Parses back to the same value.
std::string to_string(const Polynomial& f);

Polynomial partial_derivative(const Polynomial& f, std::size_t var);

/// Replaces variable j of f by images[j]; the result lives in the images' ring.
Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images);

/// Moves f into `target`, sending variable i to variable index_map[i].
Polynomial embed(const Polynomial& f, const RingPtr& target, std::span<const std::size_t> index_map);

/// Exact quotient f / g, or empty when g does not divide f.
std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g);

/// m x n matrix of polynomials over one ring, row-major.
class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const RingPtr& ring() const { return ring_; }

  const Polynomial& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Polynomial& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  RingPtr ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial> entries_;
};

/// Entry (i, j) is the partial derivative of P_i with respect to X_j.
using JacobianMatrix = PolyMatrix;

JacobianMatrix jacobian(std::span<const Polynomial> polys);

/// Exact determinant: cofactor expansion up to 4x4, fraction-free (Bareiss)
/// elimination above.
Polynomial determinant(const PolyMatrix& m);

/// All maximal (cols x cols) minors, rows chosen in lexicographic subset order.
std::vector<Polynomial> maximal_minors(const PolyMatrix& m);

/// Substitutes every entry (see substitute()).
PolyMatrix substitute(const PolyMatrix& m, std::span<const Polynomial> images);

/// Discriminant (-1)^(d(d-1)/2) Res(P, P') / lc(P) of a univariate polynomial
/// of degree d >= 1, using the formal degree d-1 for P'.
FieldElement discriminant(const Polynomial& p);

}  // namespace jcheck
