#include "nashseq/field.hpp"

#include <stdexcept>

namespace nashseq {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (!nashseq::is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (p >= (std::uint64_t{1} << 32)) throw std::invalid_argument("prime field modulus must be below 2^32");
  return Field(p);
}

std::string Field::name() const {
  return is_rational() ? std::string("QQ") : "GF(" + std::to_string(p_) + ")";
}

namespace {

std::uint64_t reduce(const mpz_class& z, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

} // namespace

FieldElement::FieldElement(Field field, long value) : field_(field) {
  if (field.is_rational()) {
    value_ = mpq_class(value);
  } else {
    auto p = static_cast<long>(field.characteristic());
    long r = value % p;
    if (r < 0) r += p;
    value_ = static_cast<std::uint64_t>(r);
  }
}

FieldElement::FieldElement(Field field, const mpq_class& value) : field_(field) {
  if (field.is_rational()) {
    value_ = value;
    return;
  }
  std::uint64_t p = field.characteristic();
  std::uint64_t den = reduce(value.get_den(), p);
  if (den == 0) throw std::domain_error("denominator vanishes in " + field.name());
  std::uint64_t num = reduce(value.get_num(), p);
  value_ = num * mod_pow(den, p - 2, p) % p;
}

bool FieldElement::is_zero() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
  return std::get<std::uint64_t>(value_) == 0;
}

bool FieldElement::is_one() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return *q == 1;
  return std::get<std::uint64_t>(value_) == 1;
}

const mpq_class& FieldElement::rational() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw std::domain_error("element of " + field_.name() + " is not rational");
}

std::uint64_t FieldElement::residue() const {
  if (auto* r = std::get_if<std::uint64_t>(&value_)) return *r;
  throw std::domain_error("rational element has no residue");
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!(field_ == o.field_))
    throw std::domain_error("field mismatch: " + field_.name() + " vs " + o.field_.name());
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  FieldElement r = *this;
  if (auto* q = std::get_if<mpq_class>(&r.value_)) {
    *q = 1 / *q;
  } else {
    std::uint64_t p = field_.characteristic();
    r.value_ = mod_pow(std::get<std::uint64_t>(value_), p - 2, p);
  }
  return r;
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), q->get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), q->get_den_mpz_t(), e);
    return FieldElement(field_, r);
  }
  FieldElement r = *this;
  r.value_ = mod_pow(std::get<std::uint64_t>(value_), e, field_.characteristic());
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_same(o);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q += std::get<mpq_class>(o.value_);
  } else {
    auto& r = std::get<std::uint64_t>(value_);
    r = (r + std::get<std::uint64_t>(o.value_)) % field_.characteristic();
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  check_same(o);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q -= std::get<mpq_class>(o.value_);
  } else {
    std::uint64_t p = field_.characteristic();
    auto& r = std::get<std::uint64_t>(value_);
    r = (r + p - std::get<std::uint64_t>(o.value_)) % p;
  }
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check_same(o);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q *= std::get<mpq_class>(o.value_);
  } else {
    auto& r = std::get<std::uint64_t>(value_);
    r = r * std::get<std::uint64_t>(o.value_) % field_.characteristic();
  }
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  check_same(o);
  return *this *= o.inverse();
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  if (auto* q = std::get_if<mpq_class>(&r.value_)) {
    *q = -*q;
  } else {
    auto& v = std::get<std::uint64_t>(r.value_);
    if (v) v = field_.characteristic() - v;
  }
  return r;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string rational_string(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string FieldElement::to_string() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return rational_string(*q);
  return std::to_string(std::get<std::uint64_t>(value_));
}

} // namespace nashseq
