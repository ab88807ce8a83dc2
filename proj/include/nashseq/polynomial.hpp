#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nashseq/exponent.hpp"
#include "nashseq/field.hpp"

namespace nashseq {

/// Order at the origin; std::nullopt stands for infinity (the zero element).
using Order = std::optional<std::uint32_t>;

std::string order_string(const Order& o);

/// Sparse multivariate polynomial over an exact Field. Terms are kept in the
/// ExponentVector order, so the first term carries the initial exponent.
class Polynomial {
public:
  using Terms = std::map<ExponentVector, FieldElement>;

  Polynomial(Field field, std::size_t num_vars) : field_(field), num_vars_(num_vars) {}

  static Polynomial constant(Field field, std::size_t num_vars, const FieldElement& c);
  static Polynomial constant(Field field, std::size_t num_vars, long c);
  static Polynomial variable(Field field, std::size_t num_vars, std::size_t index);
  static Polynomial monomial(const FieldElement& c, const ExponentVector& e);

  Field field() const { return field_; }
  std::size_t num_vars() const { return num_vars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  FieldElement coefficient(const ExponentVector& e) const;
  /// Adds c*X^e, dropping the term if it cancels.
  void add_term(const ExponentVector& e, const FieldElement& c);

  /// min |a| over the support; infinity for zero.
  Order order() const;
  /// max |a| over the support; 0 for zero.
  std::uint32_t total_degree() const;

  /// Throws std::domain_error("no initial exponent") on zero.
  const ExponentVector& initial_exponent() const;
  const FieldElement& initial_coefficient() const;
  /// a_nu X^nu.
  Polynomial initial_monomial() const;
  /// Lowest-degree homogeneous part.
  Polynomial initial_form() const;
  Polynomial homogeneous_part(std::uint32_t degree) const;
  /// Drops all terms of total degree > max_degree.
  Polynomial truncated(std::uint32_t max_degree) const;

  Polynomial derivative(std::size_t var) const;
  Polynomial scaled(const FieldElement& c) const;
  Polynomial times_monomial(const ExponentVector& e, const FieldElement& c) const;
  Polynomial pow(std::uint32_t e) const;
  Polynomial monic() const;

  /// Largest e with var^e dividing every term.
  std::uint32_t valuation_in(std::size_t var) const;
  /// Divides every term by var^e; requires e <= valuation_in(var).
  Polynomial divided_by_power(std::size_t var, std::uint32_t e) const;

  FieldElement evaluate(std::span<const FieldElement> point) const;
  /// Ring homomorphism X_i -> images[i]; all images share num_vars.
  Polynomial substitute(const std::vector<Polynomial>& images) const;
  /// Embeds into a ring with total_vars variables, variable i going to i + offset.
  Polynomial embedded(std::size_t total_vars, std::size_t offset) const;

  std::string to_string(const std::vector<std::string>& names) const;
  std::string to_string() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

private:
  void check(const Polynomial& o) const;

  Field field_;
  std::size_t num_vars_;
  Terms terms_;
};

/// Names "t", "x1", ..., "xn" for a ring K[t, X_1..X_n] of n+1 variables.
std::vector<std::string> default_names(std::size_t num_vars, bool with_t);

/// f(t, t(A_1 + X_1), ..., t(A_n + X_n)) for f in K[t, X_1..X_n] (t is variable 0).
Polynomial quadratic_substitute(const Polynomial& f, std::span<const FieldElement> direction);

/// Strict transform along one blowup chart: the quadratic substitution divided
/// by the largest power of t dividing it. Zero maps to zero.
Polynomial strict_transform(const Polynomial& f, std::span<const FieldElement> direction);

} // namespace nashseq
