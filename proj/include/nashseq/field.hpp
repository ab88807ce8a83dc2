#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace nashseq {

/// Coefficient field descriptor: the rationals, or F_p for a prime p.
class Field {
public:
  Field() = default;

  static Field rationals() { return Field{}; }
  /// Throws std::invalid_argument unless p is prime.
  static Field prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  bool is_prime() const { return p_ != 0; }
  /// 0 for the rationals.
  std::uint64_t characteristic() const { return p_; }
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// An exact element of a Field. Arithmetic between elements of different
/// fields throws std::domain_error, as does division by zero.
class FieldElement {
public:
  FieldElement() : value_(mpq_class(0)) {}
  FieldElement(Field field, long value);
  FieldElement(Field field, const mpq_class& value);

  static FieldElement zero(Field f) { return FieldElement(f, 0L); }
  static FieldElement one(Field f) { return FieldElement(f, 1L); }

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Valid only over the rationals.
  const mpq_class& rational() const;
  /// Valid only over a prime field.
  std::uint64_t residue() const;

  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;

  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  FieldElement operator-() const;

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  friend bool operator==(const FieldElement& a, const FieldElement& b);

  /// "p/q" or "p" over the rationals, the canonical residue in [0,p) otherwise.
  std::string to_string() const;

private:
  void check_same(const FieldElement& o) const;

  Field field_;
  std::variant<mpq_class, std::uint64_t> value_;
};

/// Exact rational to "p/q" (or "p" for integers).
std::string rational_string(const mpq_class& q);

} // namespace nashseq
