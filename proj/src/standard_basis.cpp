#include "nashseq/standard_basis.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace nashseq {

std::uint32_t ecart(const Polynomial& f) {
  if (f.is_zero()) return 0;
  return f.total_degree() - f.initial_exponent().degree();
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const ExponentVector& nf = f.initial_exponent();
  const ExponentVector& ng = g.initial_exponent();
  ExponentVector j = nf.join(ng);
  return f.times_monomial(j - nf, f.initial_coefficient().inverse()) -
         g.times_monomial(j - ng, g.initial_coefficient().inverse());
}

Polynomial weak_normal_form(const Polynomial& f, const std::vector<Polynomial>& G) {
  struct Entry {
    Polynomial p;
    std::uint32_t ecart;
  };
  std::vector<Entry> T;
  for (const auto& g : G)
    if (!g.is_zero()) T.push_back({g, ecart(g)});
  Polynomial h = f;
  while (!h.is_zero()) {
    const ExponentVector& nh = h.initial_exponent();
    const Entry* best = nullptr;
    for (const auto& e : T)
      if (e.p.initial_exponent().divides(nh) && (!best || e.ecart < best->ecart)) best = &e;
    if (!best) break;
    Polynomial g = best->p;
    std::uint32_t eg = best->ecart;
    std::uint32_t eh = ecart(h);
    if (eg > eh) T.push_back({h, eh});
    h -= g.times_monomial(nh - g.initial_exponent(), h.initial_coefficient() / g.initial_coefficient());
  }
  return h;
}

namespace {

// Eliminates terms of degree <= bound that lie in the monomial ideal of the
// initial exponents of G, smallest first. Every subtraction only creates
// larger terms, so the scan moves forward.
Polynomial reduce_terms(Polynomial r, const std::vector<Polynomial>& G, std::uint32_t bound,
                        bool keep_initial) {
  if (r.is_zero()) return r;
  std::optional<ExponentVector> cursor;
  if (keep_initial) cursor = r.initial_exponent();
  while (true) {
    const auto& terms = r.terms();
    auto it = cursor ? terms.upper_bound(*cursor) : terms.begin();
    const Polynomial* divisor = nullptr;
    for (; it != terms.end(); ++it) {
      if (it->first.degree() > bound) break;
      for (const auto& g : G)
        if (g.initial_exponent().divides(it->first)) {
          divisor = &g;
          break;
        }
      if (divisor) break;
    }
    if (!divisor) return r;
    ExponentVector a = it->first;
    FieldElement c = it->second / divisor->initial_coefficient();
    r -= divisor->times_monomial(a - divisor->initial_exponent(), c);
    cursor = a;
  }
}

} // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       std::optional<std::uint32_t> degree_bound) {
  std::vector<Polynomial> nonzero;
  for (const auto& g : G)
    if (!g.is_zero()) nonzero.push_back(g);
  Polynomial r = weak_normal_form(f, nonzero);
  std::uint32_t bound = degree_bound.value_or(0);
  if (!degree_bound) {
    bound = f.total_degree();
    for (const auto& g : nonzero) bound = std::max(bound, g.total_degree());
  }
  return reduce_terms(std::move(r), nonzero, bound, false);
}

namespace {

// An element of the homogenized ideal, stored dehomogenized: p together with
// the degree d of its homogenization, d >= deg(p). Its leading monomial in
// K[X_0, X] is X_0^e X^nu(p) with e = d - |nu(p)|, so a global order on the
// homogenized ring restricts to the local order on p.
struct Homogeneous {
  Polynomial p;
  std::uint32_t d;
  std::uint32_t e() const { return d - p.initial_exponent().degree(); }
};

bool lead_divides(const Homogeneous& g, const ExponentVector& nh, std::uint32_t eh) {
  return g.e() <= eh && g.p.initial_exponent().divides(nh);
}

// Top reduction in the homogenized ring. Every step keeps the degree d and
// moves the leading monomial down among the finitely many monomials of
// degree d, so it terminates.
void top_reduce(Homogeneous& h, const std::vector<Homogeneous>& S) {
  while (!h.p.is_zero()) {
    const ExponentVector nh = h.p.initial_exponent();
    const std::uint32_t eh = h.e();
    const Homogeneous* best = nullptr;
    for (const auto& g : S)
      if (lead_divides(g, nh, eh) && (!best || g.p.size() < best->p.size())) best = &g;
    if (!best) return;
    h.p -= best->p.times_monomial(nh - best->p.initial_exponent(),
                                  h.p.initial_coefficient() / best->p.initial_coefficient());
  }
}

} // namespace

// Lazard's method: a Groebner basis of the homogenized ideal for the degree
// order refined by the local order dehomogenizes to a standard basis.
StandardBasis standard_basis(const std::vector<Polynomial>& generators, std::size_t num_vars) {
  StandardBasis result;
  result.num_vars = num_vars;
  std::vector<Homogeneous> S;
  std::optional<Field> field;
  for (const auto& g : generators) {
    if (g.num_vars() != num_vars) throw std::invalid_argument("generator has wrong number of variables");
    field = g.field();
    if (!g.is_zero()) S.push_back({g.monic(), g.total_degree()});
  }
  auto unit_basis = [&] {
    result.generators = {Polynomial::constant(*field, num_vars, 1L)};
    result.diagram = Staircase::full(num_vars);
    return result;
  };
  if (S.empty()) {
    result.diagram = Staircase(num_vars);
    return result;
  }
  for (const auto& g : S)
    if (g.p.initial_exponent().is_zero()) return unit_basis();

  // Pairs ordered by the degree of their lcm, then (join, i, j).
  using Pair = std::tuple<std::uint32_t, ExponentVector, std::size_t, std::size_t>;
  std::set<Pair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto lcm_of = [&](std::size_t i, std::size_t j) {
    return std::pair{std::max(S[i].e(), S[j].e()), S[i].p.initial_exponent().join(S[j].p.initial_exponent())};
  };
  auto add_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      const auto& ni = S[i].p.initial_exponent();
      const auto& nj = S[j].p.initial_exponent();
      auto [e, join] = lcm_of(i, j);
      // Coprime leading monomials need no S-pair.
      if (join == ni + nj && std::min(S[i].e(), S[j].e()) == 0) continue;
      pairs.emplace(e + join.degree(), join, i, j);
      pending.emplace(i, j);
    }
  };
  for (std::size_t j = 1; j < S.size(); ++j) add_pairs(j);

  auto is_pending = [&](std::size_t a, std::size_t b) { return pending.count({std::min(a, b), std::max(a, b)}) > 0; };
  while (!pairs.empty()) {
    auto [deg, join, i, j] = *pairs.begin();
    pairs.erase(pairs.begin());
    pending.erase({i, j});
    // Chain criterion.
    const std::uint32_t e = deg - join.degree();
    bool redundant = false;
    for (std::size_t k = 0; k < S.size() && !redundant; ++k)
      redundant = k != i && k != j && lead_divides(S[k], join, e) && !is_pending(i, k) && !is_pending(j, k);
    if (redundant) continue;
    const Polynomial& fi = S[i].p;
    const Polynomial& fj = S[j].p;
    Homogeneous h{fi.times_monomial(join - fi.initial_exponent(), fi.initial_coefficient().inverse()) -
                      fj.times_monomial(join - fj.initial_exponent(), fj.initial_coefficient().inverse()),
                  deg};
    top_reduce(h, S);
    if (h.p.is_zero()) continue;
    if (h.p.initial_exponent().is_zero()) return unit_basis();
    h.p = h.p.monic();
    S.push_back(std::move(h));
    add_pairs(S.size() - 1);
  }

  // Keep one element per vertex.
  std::vector<ExponentVector> exps;
  for (const auto& g : S) exps.push_back(g.p.initial_exponent());
  result.diagram = Staircase::minimalize(num_vars, exps);
  for (const auto& v : result.diagram.vertices()) {
    const Polynomial* pick = nullptr;
    for (const auto& g : S)
      if (g.p.initial_exponent() == v && (!pick || g.p.size() < pick->size())) pick = &g.p;
    result.generators.push_back(pick->monic());
  }
  return result;
}

StandardBasis distinguished_basis(const StandardBasis& basis, std::uint32_t degree_bound) {
  StandardBasis result = basis;
  result.distinguished = true;
  result.degree_bound = degree_bound;
  if (basis.is_unit() || basis.generators.empty()) return result;
  std::vector<Polynomial> reduced;
  for (const auto& g : basis.generators)
    reduced.push_back(reduce_terms(g.monic(), basis.generators, degree_bound, true));
  result.generators = std::move(reduced);
  return result;
}

std::size_t polynomial_rank(std::vector<Polynomial> rows) {
  std::map<ExponentVector, Polynomial> pivots;
  for (auto& row : rows) {
    while (!row.is_zero()) {
      auto it = pivots.find(row.initial_exponent());
      if (it == pivots.end()) {
        ExponentVector lead = row.initial_exponent();
        pivots.emplace(std::move(lead), row.monic());
        break;
      }
      row -= it->second.scaled(row.initial_coefficient());
    }
  }
  return pivots.size();
}

mpz_class hilbert_samuel_direct(const std::vector<Polynomial>& generators, std::size_t num_vars, std::uint32_t k) {
  // Monomials of degree <= d in num_vars variables.
  std::vector<ExponentVector> monomials;
  std::function<void(std::size_t, ExponentVector&, std::uint32_t)> enumerate =
      [&](std::size_t i, ExponentVector& e, std::uint32_t left) {
        if (i == num_vars) {
          monomials.push_back(e);
          return;
        }
        for (std::uint32_t a = 0; a <= left; ++a) {
          e.set(i, a);
          enumerate(i + 1, e, left - a);
        }
        e.set(i, 0);
      };
  ExponentVector start(num_vars);
  enumerate(0, start, k);

  std::vector<Polynomial> rows;
  for (const auto& g : generators) {
    if (g.num_vars() != num_vars) throw std::invalid_argument("generator has wrong number of variables");
    if (g.is_zero()) continue;
    Polynomial gt = g.truncated(k);
    if (gt.is_zero()) continue;
    for (const auto& m : monomials) {
      if (m.degree() + g.order().value() > k) continue;
      rows.push_back(gt.times_monomial(m, FieldElement::one(g.field())).truncated(k));
    }
  }
  return mpz_class(static_cast<unsigned long>(monomials.size())) - static_cast<unsigned long>(polynomial_rank(std::move(rows)));
}

std::vector<Polynomial> strict_transform_ideal(const StandardBasis& basis, std::span<const FieldElement> direction) {
  std::vector<Polynomial> out;
  for (const auto& g : basis.generators) out.push_back(strict_transform(g, direction));
  return out;
}

} // namespace nashseq
