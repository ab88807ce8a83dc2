#include "nashseq/report.hpp"

#include <cstdio>
#include <limits>
#include <stdexcept>

#include "nashseq/parse.hpp"

namespace nashseq {

json exact(const mpz_class& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

json exact(const mpq_class& value) {
  mpq_class q = value;
  q.canonicalize();
  if (q.get_den() == 1) return exact(q.get_num());
  return json(rational_string(q));
}

json exact(const FieldElement& c) {
  if (c.field().is_rational()) return exact(c.rational());
  return json(c.residue());
}

json order_json(const Order& o) { return o ? json(*o) : json(nullptr); }

json to_json(const ExponentVector& e) {
  json a = json::array();
  for (auto x : e.entries()) a.push_back(x);
  return a;
}

json to_json(const Staircase& s) {
  json a = json::array();
  for (const auto& v : s.vertices()) a.push_back(to_json(v));
  return a;
}

json to_json(const UPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(exact(c));
  return a;
}

json to_json(const HilbertData& h) {
  json j;
  json values = json::array();
  for (const auto& v : h.values) values.push_back(exact(v));
  j["values"] = values;
  j["poly"] = to_json(h.polynomial);
  j["dim"] = h.dimension ? json(*h.dimension) : json(nullptr);
  j["mult"] = exact(h.multiplicity);
  j["stabilization"] = h.stabilization;
  if (h.full_ring) j["full_ring"] = true;
  return j;
}

namespace {

json optional_index(const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); }

json polynomials(const std::vector<Polynomial>& ps, const std::vector<std::string>& names) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(p.to_string(names));
  return a;
}

} // namespace

json to_json(const NashReport& r, const std::vector<std::string>& names) {
  json j;
  json m = json::array();
  for (auto x : r.multiplicities()) m.push_back(x);
  j["m"] = m;
  json steps = json::array();
  for (const auto& s : r.steps) {
    json sj;
    sj["index"] = s.index;
    sj["m"] = s.multiplicity;
    sj["generators"] = polynomials(s.generators, names);
    sj["hilbert"] = to_json(s.hilbert);
    sj["diagram"] = to_json(s.diagram);
    steps.push_back(sj);
  }
  j["steps"] = steps;
  j["stabilized_at"] = optional_index(r.stabilized_at);
  j["smooth_from"] = optional_index(r.smooth_from);
  j["bound_D"] = r.bound_D ? json(*r.bound_D) : json(nullptr);
  return j;
}

json to_json(const StandardBasis& b, const std::vector<std::string>& names) {
  json j;
  j["generators"] = polynomials(b.generators, names);
  j["diagram"] = to_json(b.diagram);
  j["distinguished"] = b.distinguished;
  j["degree_bound"] = b.degree_bound ? json(*b.degree_bound) : json(nullptr);
  return j;
}

json to_json(const RationalFunction& f) {
  json j;
  j["num"] = to_json(f.num());
  j["den"] = to_json(f.den());
  return j;
}

json to_json(const MotivicExpr& e) {
  json j = json::object();
  for (const auto& [m, f] : e.terms()) j[m.to_string()] = to_json(f);
  return j;
}

json to_json(const ArcDistance& d) {
  json j;
  j["ord"] = order_json(d.ord);
  j["distinct_base_points"] = d.distinct_base_points;
  j["up_to_precision"] = d.up_to_precision;
  return j;
}

json to_json(const CensusResult& c, bool with_timing) {
  json j;
  j["n"] = c.n;
  j["k"] = c.k;
  j["level"] = c.level;
  j["q"] = c.q;
  j["count"] = c.count;
  j["tuples"] = c.tuples;
  j["pruned"] = c.pruned;
  if (with_timing) j["elapsed_seconds"] = c.elapsed_seconds;
  return j;
}

Staircase staircase_from_json(const json& j, std::size_t m) {
  std::vector<ExponentVector> vs;
  for (const auto& v : j) {
    std::vector<std::uint32_t> e;
    for (const auto& x : v) e.push_back(x.get<std::uint32_t>());
    if (e.size() != m) throw std::invalid_argument("vertex has wrong dimension");
    vs.emplace_back(std::move(e));
  }
  return Staircase::minimalize(m, std::move(vs));
}

namespace {

mpq_class rational_from_json(const json& j) {
  if (j.is_number_integer()) return mpq_class(mpz_class(std::to_string(j.get<long long>())));
  mpq_class q(j.get<std::string>());
  q.canonicalize();
  return q;
}

UPoly upoly_from_json(const json& j) {
  std::vector<mpq_class> c;
  for (const auto& x : j) c.push_back(rational_from_json(x));
  return UPoly(std::move(c));
}

ClassMonomial monomial_from_key(const std::string& key) {
  ClassMonomial m;
  if (key == "1") return m;
  for (const auto& factor : split_top_level(key, '*')) {
    unsigned p = 0, k = 0, e = 1;
    char tail[8] = {0};
    int matched = std::sscanf(factor.c_str(), "[V_{%u,%u}]%7s", &p, &k, tail);
    if (matched < 2) throw std::invalid_argument("bad class symbol " + factor);
    if (matched == 3 && std::sscanf(tail, "^%u", &e) != 1) throw std::invalid_argument("bad exponent in " + factor);
    for (unsigned r = 0; r < e; ++r) m = m * ClassMonomial(ClassSymbol{p, k});
  }
  return m;
}

} // namespace

MotivicExpr motivic_from_json(const json& j) {
  MotivicExpr e;
  for (const auto& [key, value] : j.items()) {
    RationalFunction f(upoly_from_json(value.at("num")), upoly_from_json(value.at("den")));
    ClassMonomial m = monomial_from_key(key);
    MotivicExpr term(f);
    for (const auto& [s, a] : m.factors())
      for (unsigned r = 0; r < a; ++r) term = term * MotivicExpr::symbol(s.p, s.k);
    e += term;
  }
  return e;
}

} // namespace nashseq
