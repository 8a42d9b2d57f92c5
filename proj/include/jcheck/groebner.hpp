#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "jcheck/polynomial.hpp"

namespace jcheck {

enum class OrderKind { Lex, GradedLex, GradedReverseLex };

/// Monomial order on ExponentVectors. `priority` lists variable indices from
/// most to least significant; the default is X1 > X2 > ... > Xn.
class MonomialOrder {
 public:
  MonomialOrder(OrderKind kind, std::vector<std::size_t> priority);

  static MonomialOrder lex(std::size_t nvars);
  static MonomialOrder grlex(std::size_t nvars);
  static MonomialOrder grevlex(std::size_t nvars);

  OrderKind kind() const { return kind_; }
  const std::vector<std::size_t>& priority() const { return priority_; }
  std::size_t nvars() const { return priority_.size(); }

  std::strong_ordering compare(const ExponentVector& a, const ExponentVector& b) const;
  bool greater(const ExponentVector& a, const ExponentVector& b) const { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  OrderKind kind_;
  std::vector<std::size_t> priority_;
};

/// Reduced Groebner basis: monic generators, none of whose terms is divisible
/// by another generator's leading monomial. Sorted by ascending leading
/// monomial. The zero ideal has no generators; the unit ideal is {1}.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, MonomialOrder order, std::vector<Polynomial> generators);

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }

  bool is_unit() const;
  bool is_zero() const { return generators_.empty(); }

  /// Leading monomial of every generator under order().
  std::vector<ExponentVector> leading_monomials() const;

 private:
  RingPtr ring_;
  MonomialOrder order_;
  std::vector<Polynomial> generators_;
};

/// Leading term of a nonzero polynomial under `order`.
const Term& leading_term(const Polynomial& f, const MonomialOrder& order);

/// Buchberger's algorithm with the normal selection strategy and both pair
/// criteria. Zero generators are dropped. `ring` is needed for an empty input.
GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order,
                         RingPtr ring = nullptr);

/// Remainder of full multivariate division by the basis.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

bool ideal_contains(const GroebnerBasis& gb, const Polynomial& f);

/// True iff 1 lies in the ideal generated by `gens`.
bool is_unit_ideal(std::span<const Polynomial> gens, RingPtr ring = nullptr);

/// Basis of the ideal intersected with K[keep], computed with a lex order in
/// which every discarded variable outranks every kept one.
std::vector<Polynomial> elimination_ideal(std::span<const Polynomial> gens, std::span<const std::size_t> keep,
                                          RingPtr ring = nullptr);

/// Vector-space dimension of K[X]/I; empty when it is infinite.
struct QuotientDimension {
  std::optional<std::uint64_t> value;

  bool is_finite() const { return value.has_value(); }
  friend bool operator==(const QuotientDimension&, const QuotientDimension&) = default;
};

/// Counts standard monomials of the basis.
QuotientDimension quotient_dimension(const GroebnerBasis& gb);
QuotientDimension quotient_dimension(std::span<const Polynomial> gens, RingPtr ring = nullptr);

}  // namespace jcheck
