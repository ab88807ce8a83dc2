#include "nashseq/arc.hpp"

#include <stdexcept>

namespace nashseq {

Arc::Arc(Field field, std::size_t n, std::vector<std::vector<FieldElement>> coeffs)
    : field_(field), n_(n), base_(n, FieldElement::zero(field)), coeffs_(std::move(coeffs)) {
  for (const auto& a : coeffs_) {
    if (a.size() != n_) throw std::invalid_argument("arc coefficient has wrong dimension");
    for (const auto& c : a)
      if (!(c.field() == field_)) throw std::domain_error("arc coefficient over a different field");
  }
}

Arc Arc::from_coordinates(Field field, const std::vector<Polynomial>& coords) {
  std::size_t order = 0;
  for (const auto& p : coords) {
    if (p.num_vars() != 1) throw std::invalid_argument("arc coordinates must be univariate in t");
    order = std::max<std::size_t>(order, p.total_degree());
  }
  const std::size_t n = coords.size();
  std::vector<std::vector<FieldElement>> coeffs(order, std::vector<FieldElement>(n, FieldElement::zero(field)));
  std::vector<FieldElement> base(n, FieldElement::zero(field));
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [e, c] : coords[j].terms()) {
      if (e[0] == 0)
        base[j] = c;
      else
        coeffs[e[0] - 1][j] = c;
    }
  Arc arc(field, n, std::move(coeffs));
  arc.base_ = std::move(base);
  return arc;
}

bool Arc::at_origin() const {
  for (const auto& c : base_)
    if (!c.is_zero()) return false;
  return true;
}

void Arc::set_base_point(std::vector<FieldElement> base) {
  if (base.size() != n_) throw std::invalid_argument("base point has wrong dimension");
  base_ = std::move(base);
}

std::vector<FieldElement> Arc::coefficient(std::size_t k) const {
  if (k == 0) return base_;
  if (k > coeffs_.size()) return std::vector<FieldElement>(n_, FieldElement::zero(field_));
  return coeffs_[k - 1];
}

Arc Arc::truncated(std::size_t i) const {
  Arc r = *this;
  if (r.coeffs_.size() > i) r.coeffs_.resize(i);
  return r;
}

Arc Arc::with_coefficient(std::size_t k, std::vector<FieldElement> value) const {
  if (k == 0) throw std::invalid_argument("use set_base_point for A_0");
  if (value.size() != n_) throw std::invalid_argument("arc coefficient has wrong dimension");
  Arc r = *this;
  while (r.coeffs_.size() < k) r.coeffs_.emplace_back(n_, FieldElement::zero(field_));
  r.coeffs_[k - 1] = std::move(value);
  return r;
}

Arc Arc::shifted(std::size_t j) const {
  std::vector<std::vector<FieldElement>> rest;
  for (std::size_t k = j + 1; k <= coeffs_.size(); ++k) rest.push_back(coeffs_[k - 1]);
  return Arc(field_, n_, std::move(rest));
}

Arc Arc::graph() const {
  std::vector<std::vector<FieldElement>> g;
  for (std::size_t k = 1; k <= std::max<std::size_t>(1, coeffs_.size()); ++k) {
    std::vector<FieldElement> a;
    a.push_back(k == 1 ? FieldElement::one(field_) : FieldElement::zero(field_));
    auto c = coefficient(k);
    a.insert(a.end(), c.begin(), c.end());
    g.push_back(std::move(a));
  }
  Arc r(field_, n_ + 1, std::move(g));
  std::vector<FieldElement> b{FieldElement::zero(field_)};
  b.insert(b.end(), base_.begin(), base_.end());
  r.base_ = std::move(b);
  return r;
}

Polynomial Arc::coordinate(std::size_t j) const {
  if (j >= n_) throw std::out_of_range("arc coordinate out of range");
  Polynomial p(field_, 1);
  p.add_term(ExponentVector{0}, base_[j]);
  for (std::size_t k = 1; k <= coeffs_.size(); ++k)
    p.add_term(ExponentVector{static_cast<std::uint32_t>(k)}, coeffs_[k - 1][j]);
  return p;
}

std::string Arc::to_string() const {
  std::string s = "(";
  for (std::size_t j = 0; j < n_; ++j) {
    if (j) s += ", ";
    s += coordinate(j).to_string({"t"});
  }
  return s + ")";
}

Order TruncatedSeries::order() const {
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (!coeffs[k].is_zero()) return static_cast<std::uint32_t>(k);
  return std::nullopt;
}

Polynomial TruncatedSeries::to_polynomial() const {
  Polynomial p(field, 1);
  for (std::size_t k = 0; k < coeffs.size(); ++k) p.add_term(ExponentVector{static_cast<std::uint32_t>(k)}, coeffs[k]);
  return p;
}

TruncatedSeries series_product(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.precision != b.precision) throw std::invalid_argument("series precisions differ");
  TruncatedSeries r{a.field, a.precision, std::vector<FieldElement>(a.precision + 1, FieldElement::zero(a.field))};
  for (std::size_t i = 0; i <= a.precision; ++i) {
    if (a.coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= a.precision; ++j)
      if (!b.coeffs[j].is_zero()) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return r;
}

TruncatedSeries compose_arc(const Polynomial& f, const Arc& arc, std::size_t precision) {
  if (f.num_vars() != arc.dim()) throw std::invalid_argument("arc dimension does not match the polynomial");
  const Field field = f.field();
  auto zero_series = [&] {
    return TruncatedSeries{field, precision, std::vector<FieldElement>(precision + 1, FieldElement::zero(field))};
  };
  std::vector<std::vector<TruncatedSeries>> powers(arc.dim());
  auto power_of = [&](std::size_t j, std::uint32_t e) -> const TruncatedSeries& {
    auto& cache = powers[j];
    if (cache.empty()) {
      TruncatedSeries one = zero_series();
      one.coeffs[0] = FieldElement::one(field);
      cache.push_back(one);
      TruncatedSeries x = zero_series();
      for (std::size_t k = 0; k <= precision; ++k) x.coeffs[k] = arc.coefficient(k)[j];
      cache.push_back(x);
    }
    while (cache.size() <= e) cache.push_back(series_product(cache.back(), cache[1]));
    return cache[e];
  };
  TruncatedSeries result = zero_series();
  for (const auto& [e, c] : f.terms()) {
    TruncatedSeries term = zero_series();
    term.coeffs[0] = c;
    for (std::size_t j = 0; j < arc.dim(); ++j)
      if (e[j]) term = series_product(term, power_of(j, e[j]));
    for (std::size_t k = 0; k <= precision; ++k) result.coeffs[k] += term.coeffs[k];
  }
  return result;
}

} // namespace nashseq
