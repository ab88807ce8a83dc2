#include "nashseq/nash.hpp"

#include <algorithm>
#include <set>

namespace nashseq {

GermIdeal::GermIdeal(std::size_t n, std::vector<Polynomial> generators) : n_(n) {
  for (auto& g : generators) {
    if (g.num_vars() != n) throw std::invalid_argument("germ generator has wrong number of variables");
    if (g.is_zero()) continue;
    if (!g.coefficient(ExponentVector(n)).is_zero())
      throw std::invalid_argument("germ generator " + g.to_string() + " does not vanish at the origin");
    gens_.push_back(std::move(g));
  }
  if (gens_.empty()) throw std::invalid_argument("germ needs at least one nonzero generator");
  for (const auto& g : gens_)
    if (!(g.field() == gens_.front().field())) throw std::domain_error("germ generators over different fields");
}

std::vector<std::uint64_t> NashReport::multiplicities() const {
  std::vector<std::uint64_t> m;
  for (const auto& s : steps) m.push_back(s.multiplicity);
  return m;
}

Polynomial lift_to_tx(const Polynomial& f) { return f.embedded(f.num_vars() + 1, 1); }

std::vector<Polynomial> transform_chain(const Polynomial& f0, const Arc& arc, std::size_t steps) {
  if (f0.num_vars() != arc.dim() + 1) throw std::invalid_argument("arc dimension does not match the germ");
  std::vector<Polynomial> chain{f0};
  for (std::size_t j = 1; j <= steps; ++j) {
    auto a = arc.coefficient(j);
    chain.push_back(strict_transform(chain.back(), a));
  }
  return chain;
}

namespace {

void check_arc(const GermIdeal& germ, const Arc& arc) {
  if (arc.dim() != germ.dim()) throw std::invalid_argument("arc dimension does not match the germ");
  if (!(arc.field() == germ.field())) throw std::domain_error("arc and germ over different fields");
  if (!arc.at_origin()) throw std::invalid_argument("arc must start at the origin");
}

bool same_hilbert(const HilbertData& a, const HilbertData& b) {
  return a.values == b.values && a.polynomial == b.polynomial;
}

} // namespace

NashReport nash_sequences(const GermIdeal& germ, const Arc& arc, std::size_t steps, const NashOptions& opts) {
  check_arc(germ, arc);
  const std::size_t m = germ.dim() + 1;
  NashReport report;
  report.n = germ.dim();
  std::vector<std::vector<Polynomial>> gens;
  std::vector<Staircase> diagrams;

  if (germ.is_hypersurface() && opts.hypersurface_fast_path) {
    for (auto& f : transform_chain(lift_to_tx(germ.generators().front()), arc, steps)) {
      diagrams.push_back(Staircase::minimalize(m, {f.initial_exponent()}));
      gens.push_back({std::move(f)});
    }
  } else {
    std::vector<Polynomial> current;
    for (const auto& g : germ.generators()) current.push_back(lift_to_tx(g));
    StandardBasis sb = standard_basis(current, m);
    for (std::size_t j = 0; j <= steps; ++j) {
      if (j > 0) {
        auto a = arc.coefficient(j);
        current = strict_transform_ideal(sb, a);
        sb = standard_basis(current, m);
      }
      diagrams.push_back(sb.diagram);
      gens.push_back(current);
    }
  }

  long kmax = opts.hilbert_kmax;
  if (kmax < 0) {
    kmax = 6;
    for (const auto& d : diagrams) kmax = std::max<long>(kmax, d.bound());
  }
  for (std::size_t j = 0; j < diagrams.size(); ++j) {
    NashStep step;
    step.index = j;
    step.generators = std::move(gens[j]);
    step.diagram = diagrams[j];
    step.hilbert = hilbert_samuel(diagrams[j], kmax);
    step.multiplicity = step.hilbert.multiplicity.get_ui();
    report.steps.push_back(std::move(step));
  }

  const std::size_t last = report.steps.size() - 1;
  std::size_t j = last;
  while (j > 0 && report.steps[j - 1].multiplicity == report.steps[last].multiplicity &&
         same_hilbert(report.steps[j - 1].hilbert, report.steps[last].hilbert))
    --j;
  if (j < last) report.stabilized_at = j;
  std::size_t s = report.steps.size();
  while (s > 0 && report.steps[s - 1].multiplicity == 1) --s;
  if (s <= last) report.smooth_from = s;
  return report;
}

Comparison compare_sequences(const NashReport& a, const NashReport& b) {
  if (a.n != b.n) throw std::invalid_argument("reports of different ambient dimensions");
  if (a.steps.size() != b.steps.size()) throw std::invalid_argument("reports of different truncation orders");
  for (std::size_t j = 0; j < a.steps.size(); ++j) {
    Comparison c = compare(a.steps[j].diagram, b.steps[j].diagram);
    if (c != Comparison::equal) return c;
  }
  return Comparison::equal;
}

bool hilbert_dominates(const Staircase& a, const Staircase& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("staircases of different dimensions");
  const std::uint32_t bound = std::max(a.bound(), b.bound());
  HilbertData ha = hilbert_samuel(a, bound);
  HilbertData hb = hilbert_samuel(b, bound);
  for (std::uint32_t k = 0; k <= bound; ++k)
    if (hb.values[k] > ha.values[k]) return false;
  // From the bound on the difference is a polynomial; check it up to its
  // Cauchy root bound and then by its leading sign.
  UPoly diff = ha.polynomial - hb.polynomial;
  if (diff.is_zero()) return true;
  if (sgn(diff.leading()) < 0) return false;
  mpq_class cauchy = 0;
  for (int i = 0; i < diff.degree(); ++i) cauchy = std::max(cauchy, mpq_class(abs(diff.coeff(i) / diff.leading())));
  mpz_class top = mpz_class(cauchy.get_num() / cauchy.get_den()) + 2;
  for (mpz_class k = bound; k <= top; ++k)
    if (sgn(diff.evaluate(mpq_class(k))) < 0) return false;
  return true;
}

std::vector<Polynomial> partials_up_to(const Polynomial& f, std::uint32_t k) {
  // Breadth-first over |a|, deduplicated by the multi-index.
  std::vector<Polynomial> out{f};
  std::vector<std::pair<ExponentVector, Polynomial>> layer{{ExponentVector(f.num_vars()), f}};
  for (std::uint32_t d = 1; d <= k; ++d) {
    std::map<ExponentVector, Polynomial> next;
    for (const auto& [a, p] : layer)
      for (std::size_t v = 0; v < f.num_vars(); ++v) {
        ExponentVector b = a + ExponentVector::unit(f.num_vars(), v);
        if (!next.count(b)) next.emplace(b, p.derivative(v));
      }
    layer.assign(next.begin(), next.end());
    for (const auto& [a, p] : layer) out.push_back(p);
  }
  return out;
}

GenericMultiplicity generic_multiplicity_along_arc(const Polynomial& f, const Arc& arc, std::size_t precision) {
  if (f.num_vars() != arc.dim()) throw std::invalid_argument("arc dimension does not match the polynomial");
  if (f.is_zero()) throw std::invalid_argument("zero polynomial");
  std::vector<std::pair<ExponentVector, Polynomial>> layer{{ExponentVector(f.num_vars()), f}};
  for (std::uint32_t d = 0; !layer.empty(); ++d) {
    Order best;
    for (const auto& [a, p] : layer) {
      Order o = compose_arc(p, arc, precision).order();
      if (o && (!best || *o < *best)) best = o;
    }
    if (best) return {d, *best};
    std::map<ExponentVector, Polynomial> next;
    for (const auto& [a, p] : layer)
      for (std::size_t v = 0; v < f.num_vars(); ++v) {
        Polynomial q = p.derivative(v);
        if (q.is_zero()) continue;
        ExponentVector b = a + ExponentVector::unit(f.num_vars(), v);
        if (!next.count(b)) next.emplace(b, std::move(q));
      }
    layer.assign(next.begin(), next.end());
  }
  throw Undetermined("every partial derivative composes to zero at precision " + std::to_string(precision));
}

namespace {

void combinations(std::size_t n, std::size_t r, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  if (r > n) return;
  while (true) {
    out.push_back(idx);
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Polynomial determinant(const std::vector<std::vector<Polynomial>>& M) {
  const std::size_t r = M.size();
  if (r == 1) return M[0][0];
  Polynomial det(M[0][0].field(), M[0][0].num_vars());
  for (std::size_t c = 0; c < r; ++c) {
    if (M[0][c].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t i = 1; i < r; ++i) {
      std::vector<Polynomial> row;
      for (std::size_t j = 0; j < r; ++j)
        if (j != c) row.push_back(M[i][j]);
      minor.push_back(std::move(row));
    }
    Polynomial term = M[0][c] * determinant(minor);
    if (c % 2)
      det -= term;
    else
      det += term;
  }
  return det;
}

} // namespace

std::vector<Polynomial> jacobian_ideal(const GermIdeal& germ, std::size_t dimension) {
  const std::size_t n = germ.dim();
  if (dimension > n) throw std::invalid_argument("germ dimension exceeds the ambient dimension");
  const std::size_t r = n - dimension;
  std::vector<Polynomial> J = germ.generators();
  if (r == 0) {
    J.push_back(Polynomial::constant(germ.field(), n, 1L));
    return J;
  }
  std::vector<std::vector<std::size_t>> tuples, columns;
  combinations(germ.generators().size(), r, tuples);
  combinations(n, r, columns);
  for (const auto& tuple : tuples)
    for (const auto& cols : columns) {
      std::vector<std::vector<Polynomial>> M;
      for (std::size_t g : tuple) {
        std::vector<Polynomial> row;
        for (std::size_t c : cols) row.push_back(germ.generators()[g].derivative(c));
        M.push_back(std::move(row));
      }
      Polynomial d = determinant(M);
      if (!d.is_zero()) J.push_back(std::move(d));
    }
  return J;
}

std::optional<std::uint32_t> smooth_stabilization_bound(const GermIdeal& germ, const Arc& arc, std::size_t precision,
                                                        std::size_t dimension) {
  check_arc(germ, arc);
  Order best;
  for (const auto& h : jacobian_ideal(germ, dimension)) {
    Order o = compose_arc(h, arc, precision).order();
    if (o && (!best || *o < *best)) best = o;
  }
  return best;
}

Order derivative_ideal_order(const Polynomial& fj, const Arc& arc, std::size_t j, std::uint32_t k,
                             std::size_t precision) {
  Arc g = arc.shifted(j).graph();
  Order best;
  for (const auto& p : partials_up_to(fj, k)) {
    Order o = compose_arc(p, g, precision).order();
    if (o && (!best || *o < *best)) best = o;
  }
  return best;
}

std::vector<DerivativeOrderViolation> check_derivative_order_drop(const Polynomial& f, const Arc& arc, std::size_t steps,
                                            std::size_t precision) {
  std::vector<DerivativeOrderViolation> bad;
  auto chain = transform_chain(lift_to_tx(f), arc, steps);
  for (std::size_t j = 0; j + 1 < chain.size(); ++j) {
    const std::uint32_t mj = chain[j].order().value_or(0);
    for (std::uint32_t k = 0; k < mj; ++k) {
      Order lhs = derivative_ideal_order(chain[j], arc, j, k, precision);
      Order rhs = derivative_ideal_order(chain[j + 1], arc, j + 1, k, precision);
      bool ok = !lhs || (rhs && *lhs >= 1 + *rhs);
      if (!ok) bad.push_back({j, k, lhs, rhs});
    }
  }
  return bad;
}

Arc arc_line(const Arc& base, const Arc& direction, const FieldElement& s) {
  if (base.dim() != direction.dim()) throw std::invalid_argument("line endpoints of different dimensions");
  Arc r = base;
  for (std::size_t k = 1; k <= std::max(base.order(), direction.order()); ++k) {
    auto a = base.coefficient(k);
    auto b = direction.coefficient(k);
    for (std::size_t j = 0; j < a.size(); ++j) a[j] += s * b[j];
    r = r.with_coefficient(k, std::move(a));
  }
  auto p = base.base_point();
  auto d = direction.base_point();
  for (std::size_t j = 0; j < p.size(); ++j) p[j] += s * d[j];
  r.set_base_point(std::move(p));
  return r;
}

namespace {

std::vector<Staircase> n_sequence(const NashReport& r) {
  std::vector<Staircase> out;
  for (const auto& s : r.steps) out.push_back(s.diagram);
  return out;
}

} // namespace

SemicontinuityCheck check_semicontinuity(const GermIdeal& germ, const Arc& base, const Arc& direction,
                                         std::size_t steps, const std::vector<FieldElement>& params) {
  if (params.empty()) throw std::invalid_argument("need at least one sample parameter");
  SemicontinuityCheck c;
  NashReport special = nash_sequences(germ, base, steps);
  c.special = n_sequence(special);
  std::optional<NashReport> first;
  for (const auto& s : params) {
    NashReport r = nash_sequences(germ, arc_line(base, direction, s), steps);
    c.samples.push_back(n_sequence(r));
    if (!first)
      first = r;
    else if (compare_sequences(*first, r) != Comparison::equal)
      c.constant = false;
  }
  c.generic_vs_special = compare_sequences(*first, special);
  return c;
}

bool is_principal(const Polynomial& fi) {
  if (fi.is_zero() || fi.order() != 1u) return false;
  const auto& nu = fi.initial_exponent();
  for (std::size_t v = 1; v < nu.size(); ++v)
    if (nu[v]) return true;
  return false;
}

} // namespace nashseq
