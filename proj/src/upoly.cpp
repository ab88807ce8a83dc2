#include "nashseq/upoly.hpp"

#include <stdexcept>

#include "nashseq/field.hpp"

namespace nashseq {

void UPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

UPoly UPoly::monomial(unsigned e, const mpq_class& c) {
  std::vector<mpq_class> v(e + 1, mpq_class(0));
  v[e] = c;
  return UPoly(std::move(v));
}

UPoly UPoly::cyclic(unsigned e) {
  if (e == 0) return UPoly();
  UPoly p = monomial(e);
  p.c_[0] -= 1;
  return p;
}

UPoly UPoly::interpolate(const std::vector<std::pair<mpq_class, mpq_class>>& points) {
  UPoly result;
  for (std::size_t i = 0; i < points.size(); ++i) {
    UPoly basis(1L);
    mpq_class denom = 1;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      basis = basis * UPoly(std::vector<mpq_class>{-points[j].first, mpq_class(1)});
      denom *= points[i].first - points[j].first;
    }
    if (sgn(denom) == 0) throw std::invalid_argument("interpolation nodes must be distinct");
    result += basis.scaled(points[i].second / denom);
  }
  return result;
}

mpq_class UPoly::evaluate(const mpq_class& x) const {
  mpq_class r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return UPoly();
  std::vector<mpq_class> r(a.c_.size() + b.c_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(r));
}

UPoly UPoly::operator-() const { return scaled(-1); }

UPoly UPoly::scaled(const mpq_class& s) const {
  std::vector<mpq_class> r = c_;
  for (auto& x : r) x *= s;
  return UPoly(std::move(r));
}

UPoly UPoly::monic() const {
  if (c_.empty()) return *this;
  return scaled(1 / c_.back());
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  UPoly r = a;
  if (r.degree() < b.degree()) return {UPoly(), r};
  std::vector<mpq_class> q(r.degree() - b.degree() + 1, mpq_class(0));
  const mpq_class lead = b.leading();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    std::size_t shift = r.degree() - b.degree();
    mpq_class f = r.leading() / lead;
    q[shift] = f;
    for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i + shift] -= f * b.c_[i];
    r.trim();
  }
  return {UPoly(std::move(q)), r};
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string UPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (sgn(c_[i]) == 0) continue;
    mpq_class a = abs(c_[i]);
    bool neg = sgn(c_[i]) < 0;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (mono.empty())
      s += rational_string(a);
    else if (a == 1)
      s += mono;
    else
      s += rational_string(a) + "*" + mono;
  }
  return s;
}

} // namespace nashseq
