#pragma once

#include <optional>
#include <string>

#include "nashseq/upoly.hpp"

namespace nashseq {

/// num/den in one variable over the rationals, reduced, den monic.
class RationalFunction {
public:
  RationalFunction() : den_(1L) {}
  RationalFunction(long c) : num_(c), den_(1L) {}
  explicit RationalFunction(UPoly num, UPoly den = UPoly(1L));

  /// x^e for any integer e.
  static RationalFunction power(long e);

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// deg num - deg den; std::nullopt for zero.
  std::optional<long> degree() const;

  /// Throws std::domain_error when the denominator vanishes at x.
  mpq_class evaluate(const mpq_class& x) const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction operator-() const;
  RationalFunction pow(long e) const;

  std::string to_string(const std::string& var = "L") const;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

private:
  void normalize();
  UPoly num_;
  UPoly den_;
};

} // namespace nashseq
