#include "nashseq/staircase.hpp"

#include <algorithm>
#include <stdexcept>

namespace nashseq {

std::string comparison_string(Comparison c) {
  switch (c) {
  case Comparison::less: return "less";
  case Comparison::equal: return "equal";
  case Comparison::greater: return "greater";
  }
  return "?";
}

Staircase Staircase::minimalize(std::size_t m, std::vector<ExponentVector> exponents) {
  for (const auto& e : exponents)
    if (e.size() != m) throw std::invalid_argument("staircase exponents of mixed dimensions");
  std::sort(exponents.begin(), exponents.end());
  exponents.erase(std::unique(exponents.begin(), exponents.end()), exponents.end());
  Staircase s(m);
  // In sorted order a divisor always precedes its multiples.
  for (auto& e : exponents) {
    bool covered = std::any_of(s.vertices_.begin(), s.vertices_.end(),
                               [&](const ExponentVector& v) { return v.divides(e); });
    if (!covered) s.vertices_.push_back(std::move(e));
  }
  return s;
}

Staircase Staircase::full(std::size_t m) {
  Staircase s(m);
  s.vertices_.emplace_back(m);
  return s;
}

bool Staircase::contains(const ExponentVector& a) const {
  if (a.size() != m_) throw std::invalid_argument("exponent has wrong dimension");
  return std::any_of(vertices_.begin(), vertices_.end(), [&](const ExponentVector& v) { return v.divides(a); });
}

bool Staircase::contains_pure_t() const {
  return std::any_of(vertices_.begin(), vertices_.end(), [](const ExponentVector& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
      if (v[i]) return false;
    return true;
  });
}

bool Staircase::contains(const Staircase& other) const {
  return std::all_of(other.vertices_.begin(), other.vertices_.end(),
                     [&](const ExponentVector& v) { return contains(v); });
}

std::map<std::uint32_t, mpz_class> Staircase::inclusion_exclusion() const {
  // Signed sum over subsets, merged on the join so cancellations happen early.
  std::map<ExponentVector, mpz_class> joins;
  joins.emplace(ExponentVector(m_), 1);
  for (const auto& v : vertices_) {
    std::vector<std::pair<ExponentVector, mpz_class>> added;
    added.reserve(joins.size());
    for (const auto& [j, c] : joins) added.emplace_back(j.join(v), -c);
    for (auto& [j, c] : added) {
      auto& slot = joins[j];
      slot += c;
    }
    for (auto it = joins.begin(); it != joins.end();) {
      if (sgn(it->second) == 0)
        it = joins.erase(it);
      else
        ++it;
    }
  }
  std::map<std::uint32_t, mpz_class> by_degree;
  for (const auto& [j, c] : joins) by_degree[j.degree()] += c;
  for (auto it = by_degree.begin(); it != by_degree.end();) {
    if (sgn(it->second) == 0)
      it = by_degree.erase(it);
    else
      ++it;
  }
  return by_degree;
}

std::uint32_t Staircase::bound() const {
  if (vertices_.empty()) return 0;
  ExponentVector j(m_);
  for (const auto& v : vertices_) j = j.join(v);
  return j.degree();
}

mpz_class binomial(long n, unsigned long k) {
  if (n < 0 || static_cast<unsigned long>(n) < k) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), k);
  return r;
}

mpz_class Staircase::hilbert(std::uint64_t k) const {
  mpz_class total = 0;
  for (const auto& [d, c] : inclusion_exclusion()) {
    if (d > k) continue;
    total += c * binomial(static_cast<long>(k - d + m_), m_);
  }
  return total;
}

std::string Staircase::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) s += ", ";
    s += vertices_[i].to_string();
  }
  return s + "}";
}

Comparison compare(const Staircase& a, const Staircase& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("staircases of different dimensions");
  const auto& va = a.vertices();
  const auto& vb = b.vertices();
  for (std::size_t i = 0; i < std::max(va.size(), vb.size()); ++i) {
    if (i >= va.size()) return Comparison::greater; // a is padded with infinity
    if (i >= vb.size()) return Comparison::less;
    if (va[i] < vb[i]) return Comparison::less;
    if (vb[i] < va[i]) return Comparison::greater;
  }
  return Comparison::equal;
}

HilbertData hilbert_samuel(const Staircase& n, long k_max) {
  HilbertData h;
  const std::size_t m = n.dim();
  const std::uint32_t bound = n.bound();
  const auto coeffs = n.inclusion_exclusion();
  const std::uint64_t top = k_max < 0 ? std::max<std::uint64_t>(bound, 6) : static_cast<std::uint64_t>(k_max);

  auto value = [&](std::uint64_t k) {
    mpz_class total = 0;
    for (const auto& [d, c] : coeffs)
      if (d <= k) total += c * binomial(static_cast<long>(k - d + m), m);
    return total;
  };
  for (std::uint64_t k = 0; k <= top; ++k) h.values.push_back(value(k));

  std::vector<std::pair<mpq_class, mpq_class>> points;
  for (std::uint64_t k = bound; k <= bound + m; ++k) points.emplace_back(mpq_class(mpz_class(k)), mpq_class(value(k)));
  h.polynomial = UPoly::interpolate(points);

  // First k from which the polynomial matches the counting function.
  std::uint32_t stab = bound;
  while (stab > 0 && h.polynomial.evaluate(mpq_class(stab - 1)) == mpq_class(value(stab - 1))) --stab;
  h.stabilization = stab;

  if (h.polynomial.is_zero()) {
    h.dimension = std::nullopt;
    h.multiplicity = 0;
  } else {
    int d = h.polynomial.degree();
    h.dimension = d;
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(d));
    mpq_class e = h.polynomial.leading() * fact;
    if (e.get_den() != 1) throw std::logic_error("Samuel multiplicity is not an integer");
    h.multiplicity = e.get_num();
  }
  h.full_ring = n.is_empty();
  return h;
}

} // namespace nashseq
