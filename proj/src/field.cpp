#include "jcheck/field.hpp"

#include <charconv>

namespace jcheck {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec::FieldSpec(std::uint32_t characteristic) : p_(characteristic) {
  if (p_ == 0) return;
  if (p_ >= (1u << 31) || !is_prime(p_)) {
    throw FieldError("characteristic " + std::to_string(p_) + " is not a prime below 2^31");
  }
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q") return FieldSpec();
  if (text.size() >= 2 && text.front() == 'F') {
    std::uint64_t p = 0;
    auto digits = text.substr(1);
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && end == digits.data() + digits.size() && p < (1ull << 31) && p != 0) {
      return FieldSpec(static_cast<std::uint32_t>(p));
    }
  }
  throw FieldError("unrecognized field '" + std::string(text) + "' (expected Q or F<p>)");
}

std::string FieldSpec::name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

namespace {

std::uint32_t reduce_signed(long value, std::uint32_t p) {
  long r = value % static_cast<long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint32_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

FieldElement::FieldElement(const FieldSpec& field, long value) : p_(field.characteristic()) {
  if (p_ == 0) {
    value_ = mpq_class(value);
  } else {
    value_ = reduce_signed(value, p_);
  }
}

FieldElement::FieldElement(const FieldSpec& field, const mpz_class& value)
    : p_(field.characteristic()) {
  if (p_ == 0) {
    value_ = mpq_class(value);
  } else {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p_);
    value_ = static_cast<std::uint32_t>(r.get_ui());
  }
}

FieldElement::FieldElement(const FieldSpec& field, const mpq_class& value)
    : p_(field.characteristic()) {
  if (p_ != 0) {
    throw FieldError("rational literal in finite field " + field.name());
  }
  mpq_class v = value;
  v.canonicalize();
  value_ = std::move(v);
}

bool FieldElement::is_zero() const {
  if (p_ != 0) return std::get<std::uint32_t>(value_) == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool FieldElement::is_one() const {
  if (p_ != 0) return std::get<std::uint32_t>(value_) == 1;
  return std::get<mpq_class>(value_) == 1;
}

void FieldElement::check_same_field(const FieldElement& rhs) const {
  if (p_ != rhs.p_) {
    throw FieldError("field mismatch: " + FieldSpec(p_).name() + " vs " + FieldSpec(rhs.p_).name());
  }
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  if (p_ != 0) {
    auto& v = std::get<std::uint32_t>(r.value_);
    v = v == 0 ? 0 : p_ - v;
  } else {
    auto& q = std::get<mpq_class>(r.value_);
    q = -q;
  }
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  check_same_field(rhs);
  if (p_ != 0) {
    auto& v = std::get<std::uint32_t>(value_);
    std::uint64_t s = std::uint64_t(v) + std::get<std::uint32_t>(rhs.value_);
    v = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  check_same_field(rhs);
  if (p_ != 0) {
    auto& v = std::get<std::uint32_t>(value_);
    std::uint32_t b = std::get<std::uint32_t>(rhs.value_);
    v = v >= b ? v - b : static_cast<std::uint32_t>(std::uint64_t(v) + p_ - b);
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  check_same_field(rhs);
  if (p_ != 0) {
    auto& v = std::get<std::uint32_t>(value_);
    v = static_cast<std::uint32_t>(std::uint64_t(v) * std::get<std::uint32_t>(rhs.value_) % p_);
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
  check_same_field(rhs);
  return *this *= rhs.inverse();
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero();
  FieldElement r = *this;
  if (p_ != 0) {
    // p is prime, so a^(p-2) is the inverse.
    r.value_ = mod_pow(std::get<std::uint32_t>(value_), p_ - 2, p_);
  } else {
    auto& q = std::get<mpq_class>(r.value_);
    q = 1 / q;
    q.canonicalize();
  }
  return r;
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  if (p_ != 0) {
    FieldElement r = *this;
    r.value_ = mod_pow(std::get<std::uint32_t>(value_), e, p_);
    return r;
  }
  FieldElement result = one(FieldSpec());
  FieldElement base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::string FieldElement::to_string() const {
  if (p_ != 0) return std::to_string(std::get<std::uint32_t>(value_));
  return std::get<mpq_class>(value_).get_str();
}

FieldElement random_element(const FieldSpec& field, Rng& rng, std::uint32_t height_bound) {
  if (field.is_prime_field()) {
    std::uniform_int_distribution<std::uint32_t> dist(0, field.characteristic() - 1);
    return FieldElement(field, static_cast<long>(dist(rng)));
  }
  if (height_bound == 0) height_bound = 1;
  std::uniform_int_distribution<long> num(-static_cast<long>(height_bound), height_bound);
  std::uniform_int_distribution<long> den(1, height_bound);
  long a = num(rng);
  long b = den(rng);
  return FieldElement(field, mpq_class(a, b));
}

}  // namespace jcheck
