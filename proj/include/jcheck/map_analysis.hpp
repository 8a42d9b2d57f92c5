#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "jcheck/groebner.hpp"
#include "jcheck/polynomial.hpp"

namespace jcheck {

class MapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Some coordinate image is constant.
class DegenerateMap : public MapError {
 public:
  using MapError::MapError;
};

/// Endomorphism X_i -> F_i of K[X_1..X_n]; the images live in the same
/// n-variable ring.
class PolyMap {
 public:
  explicit PolyMap(std::vector<Polynomial> images);

  static PolyMap identity(const RingPtr& ring);

  const RingPtr& ring() const { return images_.front().ring(); }
  const FieldSpec& field() const { return ring()->field(); }
  std::size_t n() const { return images_.size(); }
  const std::vector<Polynomial>& images() const { return images_; }
  const Polynomial& operator[](std::size_t i) const { return images_[i]; }
  unsigned max_degree() const { return max_degree_; }
  /// Product of the coordinate degrees.
  std::uint64_t bezout_bound() const;

  /// The composite X -> F(G(X)) where G = inner.
  PolyMap after(const PolyMap& inner) const;
  /// Pullback a -> a(F_1, ..., F_n).
  Polynomial apply(const Polynomial& a) const;

  bool is_identity() const;
  friend bool operator==(const PolyMap& a, const PolyMap& b) { return a.images_ == b.images_; }

 private:
  std::vector<Polynomial> images_;
  unsigned max_degree_ = 0;
};

std::string to_string(const PolyMap& map);

/// det J(F) and whether it is a nonzero constant.
std::pair<Polynomial, bool> det_jacobian_unit(const PolyMap& map);

/// 1 lies in the ideal of maximal minors of J(F).
bool separability_check_endo(const PolyMap& map);

/// Jacobian criterion for B = K[X_1..X_m]/(P_1..P_r) over A = K[Y_1..Y_n]/(Q_1..Q_s)
/// with Y_j -> F_j: separable iff n + r >= m and (P, maximal minors of
/// J_X(F, P)) is the unit ideal. `b_ring` holds F and P; `a_ring` holds Q.
/// Throws MapError if the data do not define an algebra map.
bool separability_check_presented(std::span<const Polynomial> a_relations, const RingPtr& a_ring,
                                  std::span<const Polynomial> b_relations, std::span<const Polynomial> images,
                                  const RingPtr& b_ring);

/// Membership in the subalgebra K[F_1..F_n] via the lex basis of
/// (Y_i - F_i(X)) in K[X, Y] with X > Y.
class ImageAlgebra {
 public:
  explicit ImageAlgebra(const PolyMap& map);

  /// r with r(F) = b, written in the map's ring variables; empty if b is not
  /// in the subalgebra.
  std::optional<Polynomial> preimage(const Polynomial& b) const;
  bool contains(const Polynomial& b) const { return preimage(b).has_value(); }

  const GroebnerBasis& basis() const { return gb_; }

 private:
  RingPtr source_;
  RingPtr big_;
  std::size_t n_;
  GroebnerBasis gb_;
};

/// The inverse map if every X_i has a preimage, else empty.
std::optional<PolyMap> invert(const PolyMap& map);

struct GeometricDegree {
  /// Majority fiber dimension; empty when no sample was finite and nonzero.
  std::optional<std::uint64_t> value;
  /// Fiber dimension at each sampled point (empty = infinite).
  std::vector<std::optional<std::uint64_t>> samples;
  /// Samples disagreed or some were excluded from the vote.
  bool low_confidence = false;
};

inline constexpr unsigned kDefaultTrials = 7;
inline constexpr std::uint64_t kDefaultSeed = 20240917;

/// Monte Carlo degree of the generic fiber: dimension of
/// K[X]/(F_1 - a_1, ..., F_n - a_n) at random points a. Empty fibers (dimension
/// 0) and infinite ones do not vote.
GeometricDegree geometric_degree(const PolyMap& map, unsigned trials = kDefaultTrials,
                                 std::uint64_t seed = kDefaultSeed);

struct AnalysisReport {
  Polynomial det_j;
  bool det_j_is_unit = false;
  bool separable = false;
  bool invertible = false;
  std::optional<PolyMap> inverse;
  GeometricDegree geometric_degree;
  /// Empty when the degree is unknown; always false in characteristic 0.
  std::optional<bool> gdeg_divisible_by_p;
  std::uint64_t bezout_bound = 0;
  /// Empty when the check was skipped (not separable or unknown degree).
  std::optional<bool> bezout_holds;
  std::size_t samples_used = 0;
  unsigned trials = 0;
  std::uint64_t seed = 0;
};

/// geometric_degree <= bezout bound; requires a finite degree.
bool bezout_check(const PolyMap& map, const AnalysisReport& report);

AnalysisReport analyze(const PolyMap& map, unsigned trials = kDefaultTrials, std::uint64_t seed = kDefaultSeed);

}  // namespace jcheck
