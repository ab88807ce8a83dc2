#pragma once

#include <random>
#include <string>
#include <vector>

#include "nashseq/arc.hpp"
#include "nashseq/parse.hpp"
#include "nashseq/polynomial.hpp"

namespace testing {

using namespace nashseq;

inline Field QQ() { return Field::rationals(); }

inline Polynomial P(const std::string& text, const std::vector<std::string>& names, Field f = QQ()) {
  return parse_polynomial(text, names, f);
}

inline const std::vector<std::string>& txy() {
  static const std::vector<std::string> n{"t", "x", "y"};
  return n;
}

inline const std::vector<std::string>& xy() {
  static const std::vector<std::string> n{"x1", "x2"};
  return n;
}

inline const std::vector<std::string>& xyz() {
  static const std::vector<std::string> n{"x1", "x2", "x3"};
  return n;
}

inline long rand_int(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// Random polynomial in m variables of degree in [min_deg, max_deg] with at
/// most `terms` terms and nonzero small integer coefficients.
inline Polynomial random_polynomial(std::mt19937_64& rng, std::size_t m, unsigned min_deg, unsigned max_deg,
                                    unsigned terms, Field f = QQ()) {
  Polynomial p(f, m);
  for (unsigned r = 0; r < terms; ++r) {
    unsigned d = static_cast<unsigned>(rand_int(rng, min_deg, max_deg));
    ExponentVector e(m);
    for (unsigned s = 0; s < d; ++s) {
      std::size_t v = static_cast<std::size_t>(rand_int(rng, 0, static_cast<long>(m) - 1));
      e.set(v, e[v] + 1);
    }
    long c = 0;
    while (c == 0) c = rand_int(rng, -3, 3);
    p.add_term(e, FieldElement(f, c));
  }
  return p;
}

/// Nonzero random polynomial without constant term.
inline Polynomial random_germ(std::mt19937_64& rng, std::size_t n, unsigned max_deg) {
  for (;;) {
    Polynomial p = random_polynomial(rng, n, 1, max_deg, static_cast<unsigned>(rand_int(rng, 1, 4)));
    if (!p.is_zero()) return p;
  }
}

/// Random arc at the origin with order in [1, max_order].
inline Arc random_arc(std::mt19937_64& rng, std::size_t n, std::size_t max_order, long range = 2, Field f = QQ()) {
  std::size_t order = static_cast<std::size_t>(rand_int(rng, 1, static_cast<long>(max_order)));
  std::vector<std::vector<FieldElement>> coeffs;
  for (std::size_t k = 0; k < order; ++k) {
    std::vector<FieldElement> a;
    for (std::size_t j = 0; j < n; ++j) a.emplace_back(f, rand_int(rng, -range, range));
    coeffs.push_back(std::move(a));
  }
  return Arc(f, n, std::move(coeffs));
}

/// A hypersurface germ of degree <= 4 containing a monomial arc
/// (c_1 t^{a_1}, ..., c_n t^{a_n}), together with that arc.
struct GermOnArc {
  Polynomial f;
  Arc arc;
};

inline GermOnArc random_germ_on_arc(std::mt19937_64& rng, std::size_t n) {
  const Field f = QQ();
  // Binomial X_1^b - c X_2^a vanishing on (t^a, c' t^b) with a, b <= 3.
  long a = rand_int(rng, 1, 3), b = rand_int(rng, 1, 3);
  while (a == b && a > 1) b = rand_int(rng, 1, 3);
  long c2 = rand_int(rng, 1, 2);
  // X_1 = t^a, X_2 = c2 t^b: X_1^b - c2^{-a} X_2^a = 0.
  ExponentVector e1(n), e2(n);
  e1.set(0, static_cast<std::uint32_t>(b));
  e2.set(1, static_cast<std::uint32_t>(a));
  mpq_class k(1);
  for (long r = 0; r < a; ++r) k /= c2;
  Polynomial g(f, n);
  g.add_term(e1, FieldElement::one(f));
  g.add_term(e2, FieldElement(f, mpq_class(-k)));
  std::vector<Polynomial> coords(n, Polynomial(f, 1));
  coords[0] = Polynomial::monomial(FieldElement::one(f), ExponentVector{static_cast<std::uint32_t>(a)});
  coords[1] = Polynomial::monomial(FieldElement(f, c2), ExponentVector{static_cast<std::uint32_t>(b)});
  for (std::size_t j = 2; j < n; ++j)
    coords[j] = Polynomial::monomial(FieldElement(f, rand_int(rng, -2, 2)),
                                     ExponentVector{static_cast<std::uint32_t>(rand_int(rng, 1, 3))});
  Arc arc = Arc::from_coordinates(f, coords);
  // A random cofactor, keeping the degree <= 4.
  const unsigned deg = g.total_degree();
  Polynomial cof = Polynomial::constant(f, n, 1);
  if (deg < 4 && rand_int(rng, 0, 1)) cof = cof + random_polynomial(rng, n, 1, 4 - deg, 2);
  return {g * cof, arc};
}

} // namespace testing
