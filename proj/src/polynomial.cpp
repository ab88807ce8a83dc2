#include "nashseq/polynomial.hpp"

#include <stdexcept>

namespace nashseq {

std::string order_string(const Order& o) { return o ? std::to_string(*o) : std::string("inf"); }

Polynomial Polynomial::constant(Field field, std::size_t num_vars, const FieldElement& c) {
  Polynomial p(field, num_vars);
  p.add_term(ExponentVector(num_vars), c);
  return p;
}

Polynomial Polynomial::constant(Field field, std::size_t num_vars, long c) {
  return constant(field, num_vars, FieldElement(field, c));
}

Polynomial Polynomial::variable(Field field, std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) throw std::out_of_range("variable index out of range");
  Polynomial p(field, num_vars);
  p.add_term(ExponentVector::unit(num_vars, index), FieldElement::one(field));
  return p;
}

Polynomial Polynomial::monomial(const FieldElement& c, const ExponentVector& e) {
  Polynomial p(c.field(), e.size());
  p.add_term(e, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

FieldElement Polynomial::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? FieldElement::zero(field_) : it->second;
}

void Polynomial::add_term(const ExponentVector& e, const FieldElement& c) {
  if (e.size() != num_vars_) throw std::invalid_argument("exponent length does not match num_vars");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Order Polynomial::order() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.degree();
}

std::uint32_t Polynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

const ExponentVector& Polynomial::initial_exponent() const {
  if (terms_.empty()) throw std::domain_error("no initial exponent");
  return terms_.begin()->first;
}

const FieldElement& Polynomial::initial_coefficient() const {
  if (terms_.empty()) throw std::domain_error("no initial exponent");
  return terms_.begin()->second;
}

Polynomial Polynomial::initial_monomial() const {
  return monomial(initial_coefficient(), initial_exponent());
}

Polynomial Polynomial::homogeneous_part(std::uint32_t degree) const {
  Polynomial r(field_, num_vars_);
  for (const auto& [e, c] : terms_)
    if (e.degree() == degree) r.terms_.emplace_hint(r.terms_.end(), e, c);
  return r;
}

Polynomial Polynomial::initial_form() const {
  if (terms_.empty()) return *this;
  return homogeneous_part(terms_.begin()->first.degree());
}

Polynomial Polynomial::truncated(std::uint32_t max_degree) const {
  Polynomial r(field_, num_vars_);
  for (const auto& [e, c] : terms_) {
    if (e.degree() > max_degree) break;
    r.terms_.emplace_hint(r.terms_.end(), e, c);
  }
  return r;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= num_vars_) throw std::out_of_range("variable index out of range");
  Polynomial r(field_, num_vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    ExponentVector d = e;
    d.set(var, e[var] - 1);
    r.add_term(d, c * FieldElement(field_, static_cast<long>(e[var])));
  }
  return r;
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
  Polynomial r(field_, num_vars_);
  if (c.is_zero()) return r;
  for (const auto& [e, a] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, a * c);
  return r;
}

Polynomial Polynomial::times_monomial(const ExponentVector& m, const FieldElement& c) const {
  Polynomial r(field_, num_vars_);
  if (c.is_zero()) return r;
  // Multiplying by a monomial preserves the term order.
  for (const auto& [e, a] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + m, a * c);
  return r;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial result = constant(field_, num_vars_, 1L);
  Polynomial base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(initial_coefficient().inverse());
}

std::uint32_t Polynomial::valuation_in(std::size_t var) const {
  if (terms_.empty()) return 0;
  std::uint32_t v = UINT32_MAX;
  for (const auto& [e, c] : terms_) v = std::min(v, e[var]);
  return v;
}

Polynomial Polynomial::divided_by_power(std::size_t var, std::uint32_t k) const {
  if (k == 0) return *this;
  ExponentVector m(num_vars_);
  m.set(var, k);
  Polynomial r(field_, num_vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e - m, c);
  return r;
}

FieldElement Polynomial::evaluate(std::span<const FieldElement> point) const {
  if (point.size() != num_vars_) throw std::invalid_argument("evaluation point has wrong dimension");
  FieldElement sum = FieldElement::zero(field_);
  for (const auto& [e, c] : terms_) {
    FieldElement term = c;
    for (std::size_t i = 0; i < num_vars_; ++i)
      if (e[i]) term *= point[i].pow(e[i]);
    sum += term;
  }
  return sum;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != num_vars_) throw std::invalid_argument("substitution needs one image per variable");
  if (images.empty()) return *this;
  const std::size_t target = images.front().num_vars();
  std::vector<std::vector<Polynomial>> powers(num_vars_);
  auto power_of = [&](std::size_t i, std::uint32_t k) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(field_, target, 1L));
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };
  Polynomial r(field_, target);
  for (const auto& [e, c] : terms_) {
    Polynomial term = constant(field_, target, c);
    for (std::size_t i = 0; i < num_vars_; ++i)
      if (e[i]) term = term * power_of(i, e[i]);
    r += term;
  }
  return r;
}

Polynomial Polynomial::embedded(std::size_t total_vars, std::size_t offset) const {
  if (offset + num_vars_ > total_vars) throw std::invalid_argument("embedding does not fit");
  Polynomial r(field_, total_vars);
  for (const auto& [e, c] : terms_) {
    ExponentVector f(total_vars);
    for (std::size_t i = 0; i < num_vars_; ++i) f.set(i + offset, e[i]);
    r.add_term(f, c);
  }
  return r;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (names.size() != num_vars_) throw std::invalid_argument("need one name per variable");
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string coeff = c.to_string();
    bool negative = !coeff.empty() && coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    if (first) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      s += coeff;
    } else if (coeff == "1") {
      s += mono;
    } else {
      s += coeff + "*" + mono;
    }
  }
  return s;
}

std::string Polynomial::to_string() const { return to_string(default_names(num_vars_, false)); }

void Polynomial::check(const Polynomial& o) const {
  if (!(field_ == o.field_)) throw std::domain_error("polynomials over different fields");
  if (num_vars_ != o.num_vars_) throw std::invalid_argument("polynomials in different numbers of variables");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check(b);
  Polynomial r(a.field_, a.num_vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

Polynomial Polynomial::operator-() const { return scaled(-FieldElement::one(field_)); }

std::vector<std::string> default_names(std::size_t num_vars, bool with_t) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < num_vars; ++i) {
    if (with_t)
      names.push_back(i == 0 ? std::string("t") : "x" + std::to_string(i));
    else
      names.push_back("x" + std::to_string(i + 1));
  }
  return names;
}

Polynomial quadratic_substitute(const Polynomial& f, std::span<const FieldElement> direction) {
  const std::size_t m = f.num_vars();
  if (m == 0) throw std::invalid_argument("quadratic substitution needs the variable t");
  if (direction.size() + 1 != m) throw std::invalid_argument("direction must have one entry per X variable");
  const Field field = f.field();

  // binomial[j][e] = (A_j + X_j)^e as a list of (power of X_j, coefficient).
  std::vector<std::vector<std::vector<std::pair<std::uint32_t, FieldElement>>>> binomial(m);
  auto expansion = [&](std::size_t j, std::uint32_t e) -> const auto& {
    auto& cache = binomial[j];
    while (cache.size() <= e) {
      std::uint32_t k = static_cast<std::uint32_t>(cache.size());
      std::vector<std::pair<std::uint32_t, FieldElement>> terms;
      const FieldElement& a = direction[j - 1];
      mpz_class binom = 1;
      for (std::uint32_t r = 0; r <= k; ++r) {
        FieldElement c = FieldElement(field, mpq_class(binom)) * a.pow(k - r);
        if (!c.is_zero()) terms.emplace_back(r, c);
        binom = binom * (k - r) / (r + 1);
      }
      cache.push_back(std::move(terms));
    }
    return cache[e];
  };

  Polynomial result(field, m);
  for (const auto& [e, c] : f.terms()) {
    // t^{e_0 + |e_X|} * prod_j (A_j + X_j)^{e_j}
    std::vector<std::pair<ExponentVector, FieldElement>> partial;
    ExponentVector base(m);
    base.set(0, e.degree());
    partial.emplace_back(base, c);
    for (std::size_t j = 1; j < m; ++j) {
      if (!e[j]) continue;
      const auto& exp = expansion(j, e[j]);
      std::vector<std::pair<ExponentVector, FieldElement>> next;
      next.reserve(partial.size() * exp.size());
      for (const auto& [pe, pc] : partial)
        for (const auto& [r, bc] : exp) {
          ExponentVector ne = pe;
          ne.set(j, r);
          next.emplace_back(std::move(ne), pc * bc);
        }
      partial = std::move(next);
    }
    for (const auto& [pe, pc] : partial) result.add_term(pe, pc);
  }
  return result;
}

Polynomial strict_transform(const Polynomial& f, std::span<const FieldElement> direction) {
  Polynomial total = quadratic_substitute(f, direction);
  return total.divided_by_power(0, total.valuation_in(0));
}

} // namespace nashseq
