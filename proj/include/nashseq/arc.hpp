#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nashseq/field.hpp"
#include "nashseq/polynomial.hpp"

namespace nashseq {

/// Truncated arc phi(t) = A_0 + A_1 t + ... + A_i t^i in K^n. A_0 is the base
/// point; the Nash machinery requires it to be the origin.
class Arc {
public:
  Arc(Field field, std::size_t n) : field_(field), n_(n), base_(n, FieldElement::zero(field)) {}
  /// coeffs[k-1] = A_k.
  Arc(Field field, std::size_t n, std::vector<std::vector<FieldElement>> coeffs);

  /// Coordinates are polynomials in one variable t.
  static Arc from_coordinates(Field field, const std::vector<Polynomial>& coords);

  Field field() const { return field_; }
  std::size_t dim() const { return n_; }
  std::size_t order() const { return coeffs_.size(); }

  const std::vector<FieldElement>& base_point() const { return base_; }
  bool at_origin() const;
  void set_base_point(std::vector<FieldElement> base);

  /// A_k; zero beyond the truncation order, the base point for k = 0.
  std::vector<FieldElement> coefficient(std::size_t k) const;
  const std::vector<std::vector<FieldElement>>& coefficients() const { return coeffs_; }

  /// phi^i: drops A_k for k > i.
  Arc truncated(std::size_t i) const;
  /// Replaces A_k (for k >= 1), extending the order with zeros if needed.
  Arc with_coefficient(std::size_t k, std::vector<FieldElement> value) const;

  /// phi_j(t) = sum_{k>j} A_k t^{k-j}, the arc followed by the j-th strict transform.
  Arc shifted(std::size_t j) const;
  /// The graph arc t -> (t, phi(t)) in K^{n+1}.
  Arc graph() const;

  /// j-th coordinate as a polynomial in one variable.
  Polynomial coordinate(std::size_t j) const;

  std::string to_string() const;

  friend bool operator==(const Arc&, const Arc&) = default;

private:
  Field field_;
  std::size_t n_;
  std::vector<FieldElement> base_;
  std::vector<std::vector<FieldElement>> coeffs_;
};

/// Univariate power series truncated modulo t^{precision+1}.
struct TruncatedSeries {
  Field field;
  std::size_t precision = 0;
  std::vector<FieldElement> coeffs; // size precision + 1

  /// Lowest nonzero degree; infinity if everything up to the precision vanishes.
  Order order() const;
  /// True when some coefficient up to the precision is nonzero.
  bool provably_nonzero() const { return order().has_value(); }
  Polynomial to_polynomial() const;
};

TruncatedSeries series_product(const TruncatedSeries& a, const TruncatedSeries& b);

/// f(phi(t)) mod t^{precision+1}.
TruncatedSeries compose_arc(const Polynomial& f, const Arc& arc, std::size_t precision);

} // namespace nashseq
