#include "jcheck/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace jcheck {

// ---------------------------------------------------------------------------
// ExponentVector

ExponentVector::ExponentVector(std::size_t nvars) : size_(static_cast<std::uint8_t>(nvars)) {
  if (nvars > kMaxVariables) {
    throw RingError("at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
}

ExponentVector::ExponentVector(std::initializer_list<unsigned> exps) : ExponentVector(exps.size()) {
  std::size_t i = 0;
  for (unsigned e : exps) set(i++, e);
}

void ExponentVector::set(std::size_t i, unsigned value) {
  if (value > 0xFFFF) throw RingError("exponent overflow");
  e_[i] = static_cast<std::uint16_t>(value);
}

unsigned ExponentVector::total_degree() const {
  unsigned d = 0;
  for (std::size_t i = 0; i < size_; ++i) d += e_[i];
  return d;
}

bool ExponentVector::divides(const ExponentVector& other) const {
  for (std::size_t i = 0; i < size_; ++i) {
    if (e_[i] > other.e_[i]) return false;
  }
  return true;
}

ExponentVector ExponentVector::lcm(const ExponentVector& other) const {
  ExponentVector r(size_);
  for (std::size_t i = 0; i < size_; ++i) r.e_[i] = std::max(e_[i], other.e_[i]);
  return r;
}

bool ExponentVector::coprime(const ExponentVector& other) const {
  for (std::size_t i = 0; i < size_; ++i) {
    if (e_[i] != 0 && other.e_[i] != 0) return false;
  }
  return true;
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& rhs) {
  for (std::size_t i = 0; i < size_; ++i) {
    unsigned s = unsigned(e_[i]) + rhs.e_[i];
    if (s > 0xFFFF) throw RingError("exponent overflow");
    e_[i] = static_cast<std::uint16_t>(s);
  }
  return *this;
}

ExponentVector operator-(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.size_);
  for (std::size_t i = 0; i < a.size_; ++i) r.e_[i] = static_cast<std::uint16_t>(a.e_[i] - b.e_[i]);
  return r;
}

std::strong_ordering grevlex_compare(const ExponentVector& a, const ExponentVector& b) {
  unsigned da = a.total_degree();
  unsigned db = b.total_degree();
  if (da != db) return da <=> db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Ring

Ring::Ring(FieldSpec field, std::vector<std::string> names)
    : field_(field), names_(std::move(names)) {
  if (names_.size() > kMaxVariables) {
    throw RingError("at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

RingPtr make_ring(FieldSpec field, std::vector<std::string> names) {
  return std::make_shared<const Ring>(field, std::move(names));
}

RingPtr make_ring(FieldSpec field, std::size_t nvars, std::string_view prefix) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) names.push_back(std::string(prefix) + std::to_string(i + 1));
  return make_ring(field, std::move(names));
}

// ---------------------------------------------------------------------------
// Polynomial

namespace {

bool term_greater(const Term& a, const Term& b) { return grevlex_compare(a.exponents, b.exponents) > 0; }

}  // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial Polynomial::constant(RingPtr ring, const FieldElement& c) {
  return monomial(ring, ExponentVector(ring->nvars()), c);
}

Polynomial Polynomial::constant(RingPtr ring, long c) {
  FieldElement e(ring->field(), c);
  return constant(std::move(ring), e);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw RingError("variable index out of range");
  ExponentVector e(ring->nvars());
  e.set(index, 1);
  FieldElement one = FieldElement::one(ring->field());
  return monomial(std::move(ring), e, one);
}

Polynomial Polynomial::monomial(RingPtr ring, const ExponentVector& exps, const FieldElement& c) {
  if (c.characteristic() != ring->field().characteristic()) throw FieldError("field mismatch");
  if (exps.size() != ring->nvars()) throw RingError("exponent vector length mismatch");
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({exps, c});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.exponents.size() != ring->nvars()) throw RingError("exponent vector length mismatch");
    if (t.coefficient.characteristic() != ring->field().characteristic()) throw FieldError("field mismatch");
  }
  std::sort(terms.begin(), terms.end(), term_greater);
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().exponents == t.exponents) {
      merged.back().coefficient += t.coefficient;
    } else {
      if (!merged.empty() && merged.back().coefficient.is_zero()) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().coefficient.is_zero()) merged.pop_back();
  return Polynomial(std::move(ring), std::move(merged));
}

void Polynomial::check_ring(const Polynomial& rhs) const {
  if (ring_ != rhs.ring_ && !(*ring_ == *rhs.ring_)) throw RingError("ring mismatch");
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponents.is_constant());
}

bool Polynomial::is_unit() const { return terms_.size() == 1 && terms_[0].exponents.is_constant(); }

FieldElement Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().exponents.is_constant()) return terms_.back().coefficient;
  return FieldElement::zero(field());
}

FieldElement Polynomial::coefficient(const ExponentVector& exps) const {
  for (const auto& t : terms_) {
    if (t.exponents == exps) return t.coefficient;
  }
  return FieldElement::zero(field());
}

std::optional<unsigned> Polynomial::total_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().exponents.total_degree();
}

unsigned Polynomial::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exponents[var]);
  return d;
}

bool Polynomial::only_uses(std::span<const std::size_t> vars) const {
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < nvars(); ++i) {
      if (t.exponents[i] != 0 && std::find(vars.begin(), vars.end(), i) == vars.end()) return false;
    }
  }
  return true;
}

std::vector<std::size_t> Polynomial::occurring_variables() const {
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < nvars(); ++i) {
    if (degree_in(i) > 0) vars.push_back(i);
  }
  return vars;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

namespace {

template <typename Combine>
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, Combine combine) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    if (i == a.size()) {
      out.push_back({b[j].exponents, combine(FieldElement::zero(b[j].coefficient.field()), b[j].coefficient)});
      ++j;
      continue;
    }
    auto cmp = grevlex_compare(a[i].exponents, b[j].exponents);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({b[j].exponents, combine(FieldElement::zero(b[j].coefficient.field()), b[j].coefficient)});
      ++j;
    } else {
      FieldElement c = combine(a[i].coefficient, b[j].coefficient);
      if (!c.is_zero()) out.push_back({a[i].exponents, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  check_ring(rhs);
  terms_ = merge_terms(terms_, rhs.terms_, [](const FieldElement& x, const FieldElement& y) { return x + y; });
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  check_ring(rhs);
  terms_ = merge_terms(terms_, rhs.terms_, [](const FieldElement& x, const FieldElement& y) { return x - y; });
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  std::vector<Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      products.push_back({s.exponents + t.exponents, s.coefficient * t.coefficient});
    }
  }
  return Polynomial::from_terms(a.ring_, std::move(products));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::operator*=(const FieldElement& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coefficient *= c;
  return *this;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

FieldElement Polynomial::evaluate(std::span<const FieldElement> point) const {
  if (point.size() != nvars()) throw RingError("evaluation point has wrong arity");
  FieldElement sum = FieldElement::zero(field());
  for (const auto& t : terms_) {
    FieldElement v = t.coefficient;
    for (std::size_t i = 0; i < nvars(); ++i) {
      if (t.exponents[i] != 0) v *= point[i].pow(t.exponents[i]);
    }
    sum += v;
  }
  return sum;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return *a.ring_ == *b.ring_ && a.terms_ == b.terms_;
}

// ---------------------------------------------------------------------------
// Printing

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : f.terms()) {
    std::string coef = t.coefficient.to_string();
    bool negative = coef.front() == '-';
    if (negative) coef.erase(0, 1);
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    std::ostringstream mono;
    bool any = false;
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      unsigned e = t.exponents[i];
      if (e == 0) continue;
      if (any) mono << "*";
      mono << f.ring()->name(i);
      if (e > 1) mono << "^" << e;
      any = true;
    }
    if (!any) {
      out << coef;
    } else if (coef == "1") {
      out << mono.str();
    } else {
      out << coef << "*" << mono.str();
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Calculus and substitution

Polynomial partial_derivative(const Polynomial& f, std::size_t var) {
  if (var >= f.nvars()) throw RingError("variable index out of range");
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    unsigned e = t.exponents[var];
    if (e == 0) continue;
    FieldElement c = t.coefficient * FieldElement(f.field(), static_cast<long>(e));
    if (c.is_zero()) continue;
    ExponentVector exps = t.exponents;
    exps.set(var, e - 1);
    terms.push_back({exps, std::move(c)});
  }
  return Polynomial::from_terms(f.ring(), std::move(terms));
}

Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images) {
  if (images.size() != f.nvars()) throw RingError("substitution arity mismatch");
  if (images.empty()) throw RingError("substitution needs at least one image");
  const RingPtr& target = images[0].ring();
  for (const auto& g : images) {
    if (!(*g.ring() == *target)) throw RingError("substitution images live in different rings");
  }
  if (f.field() != target->field()) throw FieldError("field mismatch in substitution");

  // Power tables per variable, filled lazily.
  std::vector<std::vector<Polynomial>> powers(f.nvars());
  auto power = [&](std::size_t var, unsigned e) -> const Polynomial& {
    auto& table = powers[var];
    if (table.empty()) table.push_back(Polynomial::constant(target, 1));
    while (table.size() <= e) table.push_back(table.back() * images[var]);
    return table[e];
  };

  Polynomial result(target);
  for (const auto& t : f.terms()) {
    Polynomial term = Polynomial::constant(target, t.coefficient);
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      if (t.exponents[i] != 0) term *= power(i, t.exponents[i]);
    }
    result += term;
  }
  return result;
}

Polynomial embed(const Polynomial& f, const RingPtr& target, std::span<const std::size_t> index_map) {
  if (index_map.size() != f.nvars()) throw RingError("embedding arity mismatch");
  if (f.field() != target->field()) throw FieldError("field mismatch in embedding");
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    ExponentVector e(target->nvars());
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      if (t.exponents[i] != 0) e.set(index_map[i], e[index_map[i]] + t.exponents[i]);
    }
    terms.push_back({e, t.coefficient});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw DivisionByZero();
  if (!(*f.ring() == *g.ring())) throw RingError("ring mismatch");
  const Term& lead = g.leading_term();
  FieldElement lead_inv = lead.coefficient.inverse();
  Polynomial h = f;
  std::vector<Term> quotient;
  while (!h.is_zero()) {
    const Term& top = h.leading_term();
    if (!lead.exponents.divides(top.exponents)) return std::nullopt;
    Term q{top.exponents - lead.exponents, top.coefficient * lead_inv};
    h -= Polynomial::monomial(f.ring(), q.exponents, q.coefficient) * g;
    quotient.push_back(std::move(q));
  }
  return Polynomial::from_terms(f.ring(), std::move(quotient));
}

// ---------------------------------------------------------------------------
// Matrices

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(ring_)) {}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw RingError("matrix dimension mismatch");
  PolyMatrix c(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      Polynomial s(a.ring_);
      for (std::size_t k = 0; k < a.cols_; ++k) s += a(i, k) * b(k, j);
      c(i, j) = std::move(s);
    }
  }
  return c;
}

JacobianMatrix jacobian(std::span<const Polynomial> polys) {
  if (polys.empty()) throw RingError("jacobian of an empty sequence");
  const RingPtr& ring = polys[0].ring();
  JacobianMatrix jac(ring, polys.size(), ring->nvars());
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (!(*polys[i].ring() == *ring)) throw RingError("ring mismatch in jacobian");
    for (std::size_t j = 0; j < ring->nvars(); ++j) jac(i, j) = partial_derivative(polys[i], j);
  }
  return jac;
}

PolyMatrix substitute(const PolyMatrix& m, std::span<const Polynomial> images) {
  if (images.empty()) throw RingError("substitution needs at least one image");
  PolyMatrix out(images[0].ring(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = substitute(m(i, j), images);
  }
  return out;
}

namespace {

Polynomial cofactor_determinant(const PolyMatrix& m, std::vector<std::size_t>& rows,
                                std::vector<std::size_t>& cols) {
  const std::size_t n = rows.size();
  if (n == 1) return m(rows[0], cols[0]);
  Polynomial det(m.ring());
  std::size_t r = rows[0];
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t k = 0; k < n; ++k) {
    const Polynomial& entry = m(r, cols[k]);
    if (entry.is_zero()) continue;
    std::vector<std::size_t> sub_cols;
    for (std::size_t c = 0; c < n; ++c) {
      if (c != k) sub_cols.push_back(cols[c]);
    }
    Polynomial minor = cofactor_determinant(m, sub_rows, sub_cols);
    if (k % 2 == 0) {
      det += entry * minor;
    } else {
      det -= entry * minor;
    }
  }
  return det;
}

Polynomial bareiss_determinant(PolyMatrix a) {
  const std::size_t n = a.rows();
  bool negate = false;
  Polynomial previous = Polynomial::constant(a.ring(), 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k).is_zero()) ++swap_row;
      if (swap_row == n) return Polynomial(a.ring());
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial numer = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        auto q = divide_exact(numer, previous);
        if (!q) throw RingError("fraction-free elimination produced an inexact division");
        a(i, j) = std::move(*q);
      }
    }
    previous = a(k, k);
  }
  Polynomial det = a(n - 1, n - 1);
  return negate ? -det : det;
}

}  // namespace

Polynomial determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw RingError("determinant of a non-square matrix");
  if (m.rows() == 0) return Polynomial::constant(m.ring(), 1);
  if (m.rows() <= 4) {
    std::vector<std::size_t> rows(m.rows());
    std::iota(rows.begin(), rows.end(), 0);
    std::vector<std::size_t> cols = rows;
    return cofactor_determinant(m, rows, cols);
  }
  return bareiss_determinant(m);
}

std::vector<Polynomial> maximal_minors(const PolyMatrix& m) {
  const std::size_t n = m.cols();
  if (m.rows() < n) throw RingError("maximal minors need at least as many rows as columns");
  std::vector<Polynomial> minors;
  std::vector<std::size_t> pick(n);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    PolyMatrix sub(m.ring(), n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) sub(i, j) = m(pick[i], j);
    }
    minors.push_back(determinant(sub));
    // Next subset in lexicographic order.
    std::size_t i = n;
    while (i > 0 && pick[i - 1] == m.rows() - n + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  return minors;
}

// ---------------------------------------------------------------------------
// Discriminant

namespace {

FieldElement field_determinant(std::vector<std::vector<FieldElement>> a, const FieldSpec& field) {
  const std::size_t n = a.size();
  FieldElement det = FieldElement::one(field);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot][k].is_zero()) ++pivot;
    if (pivot == n) return FieldElement::zero(field);
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      det = -det;
    }
    det *= a[k][k];
    FieldElement inv = a[k][k].inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k].is_zero()) continue;
      FieldElement factor = a[i][k] * inv;
      for (std::size_t j = k; j < n; ++j) a[i][j] -= factor * a[k][j];
    }
  }
  return det;
}

}  // namespace

FieldElement discriminant(const Polynomial& p) {
  auto vars = p.occurring_variables();
  if (vars.size() > 1) throw RingError("discriminant needs a univariate polynomial");
  if (vars.empty()) throw RingError("discriminant needs degree >= 1");
  const std::size_t x = vars[0];
  const unsigned d = p.degree_in(x);
  const FieldSpec& field = p.field();

  // coeffs[k] = coefficient of x^k
  std::vector<FieldElement> coeffs(d + 1, FieldElement::zero(field));
  for (const auto& t : p.terms()) coeffs[t.exponents[x]] = t.coefficient;
  std::vector<FieldElement> deriv(d, FieldElement::zero(field));
  for (unsigned k = 1; k <= d; ++k) deriv[k - 1] = coeffs[k] * FieldElement(field, static_cast<long>(k));

  // Sylvester matrix of P (degree d) and P' (formal degree d-1).
  const std::size_t size = 2 * d - 1;
  std::vector<std::vector<FieldElement>> syl(size, std::vector<FieldElement>(size, FieldElement::zero(field)));
  for (std::size_t r = 0; r + 1 < d; ++r) {
    for (unsigned k = 0; k <= d; ++k) syl[r][r + (d - k)] = coeffs[k];
  }
  for (std::size_t r = 0; r < d; ++r) {
    for (unsigned k = 0; k + 1 <= d; ++k) syl[d - 1 + r][r + (d - 1 - k)] = deriv[k];
  }
  FieldElement res = field_determinant(std::move(syl), field);
  FieldElement disc = res / coeffs[d];
  if ((std::uint64_t(d) * (d - 1) / 2) % 2 == 1) disc = -disc;
  return disc;
}

}  // namespace jcheck
