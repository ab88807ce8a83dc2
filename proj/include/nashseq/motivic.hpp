#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nashseq/ratfunc.hpp"

namespace nashseq {

/// [V_{p,k}], the class of {1 + X_1^k + ... + X_p^k = 0} in K^p.
struct ClassSymbol {
  unsigned p = 1;
  unsigned k = 2;
  friend auto operator<=>(const ClassSymbol&, const ClassSymbol&) = default;
  std::string to_string() const;
  long dimension() const { return static_cast<long>(p) - 1; }
};

/// Product of class symbols with multiplicities; the empty product is the unit class.
class ClassMonomial {
public:
  ClassMonomial() = default;
  explicit ClassMonomial(ClassSymbol s) : factors_{{s, 1}} {}

  const std::vector<std::pair<ClassSymbol, unsigned>>& factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }
  long dimension() const;
  unsigned exponent_of(const ClassSymbol& s) const;
  /// This monomial with every power of s removed.
  ClassMonomial without(const ClassSymbol& s) const;

  friend ClassMonomial operator*(const ClassMonomial& a, const ClassMonomial& b);
  friend auto operator<=>(const ClassMonomial&, const ClassMonomial&) = default;
  friend bool operator==(const ClassMonomial&, const ClassMonomial&) = default;

  /// "1" for the unit class.
  std::string to_string() const;

private:
  std::vector<std::pair<ClassSymbol, unsigned>> factors_;
};

/// Point counts of class symbols over F_q, cached.
class PointCounter {
public:
  /// #V_{p,k}(F_q) by enumerating all q^p points; q must be prime.
  std::uint64_t count(const ClassSymbol& s, std::uint64_t q);

private:
  std::map<std::tuple<unsigned, unsigned, std::uint64_t>, std::uint64_t> cache_;
};

/// Brute-force count of {1 + x_1^k + ... + x_p^k = 0} over F_q.
std::uint64_t count_fermat_points(unsigned p, unsigned k, std::uint64_t q);

/// Sum of (rational function in L) * (class monomial).
class MotivicExpr {
public:
  MotivicExpr() = default;
  MotivicExpr(long c) : MotivicExpr(RationalFunction(c)) {}
  explicit MotivicExpr(const RationalFunction& f);
  static MotivicExpr symbol(unsigned p, unsigned k);
  /// L^e
  static MotivicExpr L(long e = 1);

  const std::map<ClassMonomial, RationalFunction>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RationalFunction coefficient(const ClassMonomial& m) const;

  /// max over terms of deg num - deg den + dim; std::nullopt stands for -infinity.
  std::optional<long> virtual_dimension() const;

  /// L -> q, symbols -> point counts over F_q. q must be prime.
  mpq_class specialize(std::uint64_t q, PointCounter& counter) const;
  mpq_class specialize(std::uint64_t q) const;

  /// Replaces the symbol s by the expression e everywhere.
  MotivicExpr substitute(const ClassSymbol& s, const MotivicExpr& e) const;

  MotivicExpr& operator+=(const MotivicExpr& o);
  MotivicExpr& operator-=(const MotivicExpr& o);
  MotivicExpr& operator*=(const MotivicExpr& o) { return *this = *this * o; }
  friend MotivicExpr operator+(MotivicExpr a, const MotivicExpr& b) { return a += b; }
  friend MotivicExpr operator-(MotivicExpr a, const MotivicExpr& b) { return a -= b; }
  friend MotivicExpr operator*(const MotivicExpr& a, const MotivicExpr& b);
  MotivicExpr operator-() const;
  MotivicExpr times(const RationalFunction& f) const;

  friend bool operator==(const MotivicExpr&, const MotivicExpr&) = default;

  std::string to_string() const;

private:
  void add(const ClassMonomial& m, const RationalFunction& f);
  std::map<ClassMonomial, RationalFunction> terms_;
};

/// [C_k] = ([V_{n-1,k}] + ... + [V_{1,k}]) (L - 1).
MotivicExpr class_C(unsigned n, unsigned k);
/// [W_k] = [V_{n,k}] (L - 1).
MotivicExpr class_W(unsigned n, unsigned k);

/// Over the complex numbers V_{1,k} is k points; replaces [V_{1,k}] by k.
MotivicExpr complex_reduction(const MotivicExpr& e, unsigned k);

/// An affine integer form a_s s + a_v v + a_l l + c in the summation variables.
struct AffineForm {
  long s = 0, v = 0, l = 0, c = 0;
  long coefficient(char var) const;
  AffineForm substituted(char var, const AffineForm& value) const;
  friend AffineForm operator+(AffineForm a, const AffineForm& b);
  friend AffineForm operator*(long m, AffineForm a);
  friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

/// coefficient * L^{exponent}.
struct GeometricTerm {
  MotivicExpr coefficient;
  AffineForm exponent;
};

/// A finite sum of geometric terms.
class GeometricSum {
public:
  GeometricSum() = default;
  GeometricSum(MotivicExpr coefficient, AffineForm exponent);

  const std::vector<GeometricTerm>& terms() const { return terms_; }

  /// sum_{var = lo}^{hi} of this sum; valid when hi >= lo - 1. Every term
  /// must depend on var with a nonzero rate.
  GeometricSum summed(char var, const AffineForm& lo, const AffineForm& hi) const;
  GeometricSum& operator+=(const GeometricSum& o);
  GeometricSum times(const MotivicExpr& e) const;

  /// Value at a concrete s (all other variables summed out).
  MotivicExpr at(long s) const;
  /// Limit s -> infinity: terms with negative s-rate vanish, zero rate is
  /// kept, a positive rate throws std::domain_error.
  MotivicExpr limit() const;

private:
  std::vector<GeometricTerm> terms_;
};

/// T_i split into its three contributions.
struct PartialSumTerms {
  MotivicExpr first, second, third;
  MotivicExpr total() const { return first + second + third; }
};

/// T_i by direct finite summation over the strata.
PartialSumTerms partial_sum_terms(unsigned n, unsigned k, unsigned i);
MotivicExpr partial_sum(unsigned n, unsigned k, unsigned i);

/// The three contributions of T_{2s+r} as geometric sums in s, for r in {0, 1}.
struct PartialSumFamily {
  GeometricSum first, second, third;
};
PartialSumFamily partial_sum_family(unsigned n, unsigned k, unsigned parity);

struct VolumeTerms {
  MotivicExpr first, second, third;
  MotivicExpr total() const { return first + second + third; }
};

/// Limits of the three contributions; both parities must agree.
VolumeTerms volume_terms(unsigned n, unsigned k);
MotivicExpr volume_closed_form(unsigned n, unsigned k);

} // namespace nashseq
