#pragma once

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace nashseq {

/// Dense univariate polynomial over the rationals, coefficients low to high,
/// never carrying trailing zeros.
class UPoly {
public:
  UPoly() = default;
  explicit UPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }
  UPoly(long c) : c_{mpq_class(c)} { trim(); }
  static UPoly constant(const mpq_class& c) { return UPoly(std::vector<mpq_class>{c}); }
  /// x^e
  static UPoly monomial(unsigned e, const mpq_class& c = 1);
  /// x^e - 1
  static UPoly cyclic(unsigned e);

  /// Ordinary polynomial through (x_j, y_j) by Lagrange interpolation.
  static UPoly interpolate(const std::vector<std::pair<mpq_class, mpq_class>>& points);

  /// -1 for zero.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  mpq_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpq_class(0); }
  mpq_class leading() const { return c_.empty() ? mpq_class(0) : c_.back(); }

  mpq_class evaluate(const mpq_class& x) const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly operator-() const;
  UPoly scaled(const mpq_class& s) const;
  UPoly monic() const;

  /// Euclidean division; throws std::domain_error on a zero divisor.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
  /// Monic gcd; gcd(0, 0) = 0.
  static UPoly gcd(UPoly a, UPoly b);

  std::string to_string(const std::string& var = "L") const;

  friend bool operator==(const UPoly&, const UPoly&) = default;

private:
  void trim();
  std::vector<mpq_class> c_;
};

} // namespace nashseq
