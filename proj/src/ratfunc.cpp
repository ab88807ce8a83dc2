#include "nashseq/ratfunc.hpp"

#include <stdexcept>

namespace nashseq {

RationalFunction::RationalFunction(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = UPoly(1L);
    return;
  }
  UPoly g = UPoly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = UPoly::divmod(num_, g).first;
    den_ = UPoly::divmod(den_, g).first;
  }
  mpq_class lead = den_.leading();
  if (lead != 1) {
    num_ = num_.scaled(1 / lead);
    den_ = den_.scaled(1 / lead);
  }
}

RationalFunction RationalFunction::power(long e) {
  if (e >= 0) return RationalFunction(UPoly::monomial(static_cast<unsigned>(e)));
  return RationalFunction(UPoly(1L), UPoly::monomial(static_cast<unsigned>(-e)));
}

std::optional<long> RationalFunction::degree() const {
  if (num_.is_zero()) return std::nullopt;
  return static_cast<long>(num_.degree()) - den_.degree();
}

mpq_class RationalFunction::evaluate(const mpq_class& x) const {
  mpq_class d = den_.evaluate(x);
  if (sgn(d) == 0) throw std::domain_error("denominator vanishes at " + x.get_str());
  return num_.evaluate(x) / d;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw std::domain_error("division by the zero rational function");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  normalize();
  return *this;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::pow(long e) const {
  if (e < 0) return RationalFunction(1L) / pow(-e);
  RationalFunction r(1L), b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

std::string RationalFunction::to_string(const std::string& var) const {
  if (den_ == UPoly(1L)) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

} // namespace nashseq
