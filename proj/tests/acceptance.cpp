// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "nashseq/arcspace.hpp"
#include "nashseq/census.hpp"
#include "nashseq/cli.hpp"
#include "nashseq/motivic.hpp"
#include "nashseq/nash.hpp"
#include "nashseq/standard_basis.hpp"
#include "support.hpp"

using namespace testing;
using nlohmann::json;

namespace {

// Time limits, in seconds.
constexpr double cusp_limit = 1.0;
constexpr double monotone_limit = 30.0;
constexpr double oracle_limit = 60.0;
constexpr double census_limit = 300.0;

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
  std::printf("%s %2d %s: %s\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3fs", s);
  return buf;
}

json cli(std::vector<std::string> args, int& code) {
  args.insert(args.begin(), "nashseq");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  code = nashseq::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return code == 0 ? json::parse(out.str()) : json();
}

template <class F>
void guarded(int id, const std::string& name, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(id, name, false, std::string("exception: ") + e.what());
  }
}

struct Case {
  Polynomial f;
  Arc arc;
};

std::vector<Case> hypersurface_corpus() {
  std::mt19937_64 rng(2024);
  std::vector<Case> out;
  for (int r = 0; r < 200; ++r) {
    const std::size_t n = static_cast<std::size_t>(rand_int(rng, 2, 3));
    if (r % 2) {
      auto g = random_germ_on_arc(rng, n);
      out.push_back({g.f, g.arc});
    } else {
      out.push_back({random_germ(rng, n, 4), random_arc(rng, n, 5)});
    }
  }
  return out;
}

std::vector<std::vector<Polynomial>> ideal_corpus() {
  const std::vector<std::string> names{"t", "x", "y", "z"};
  std::vector<std::vector<Polynomial>> out;
  for (const char* s : {"x^2; x*y + t^3", "x^2 - y^3", "x*y; y*z; x*z", "x^2 + y^2 + z^2; x*y*z",
                        "t*x - y^2; x^3 - t^2*y", "x^2 - t^3; y^2 - t^5", "x^3 + y^3 + z^3 + t^4",
                        "x*y - t^2; x^2 + y^2 - z^3", "t^2 + x^2; t*y + x*z", "x^4; y^4; x*y + z^2"})
    out.push_back(parse_polynomial_list(s, names, QQ()));
  std::mt19937_64 rng(77);
  while (out.size() < 24) {
    const std::size_t m = static_cast<std::size_t>(rand_int(rng, 3, 4));
    std::vector<Polynomial> gens;
    const long count = rand_int(rng, 1, 3);
    for (long g = 0; g < count; ++g) {
      Polynomial p = random_polynomial(rng, m, 1, 4, 3);
      if (!p.is_zero()) gens.push_back(p.embedded(4, 0));
    }
    if (!gens.empty()) out.push_back(gens);
  }
  return out;
}

bool hilbert_nonincreasing(const NashReport& r) {
  for (std::size_t j = 1; j < r.steps.size(); ++j) {
    if (r.steps[j].multiplicity > r.steps[j - 1].multiplicity) return false;
    const auto& a = r.steps[j - 1].hilbert.values;
    const auto& b = r.steps[j].hilbert.values;
    for (std::size_t k = 0; k < std::min(a.size(), b.size()); ++k)
      if (b[k] > a[k]) return false;
    if (!hilbert_dominates(r.steps[j - 1].diagram, r.steps[j].diagram)) return false;
  }
  return true;
}

void criterion_1() {
  auto t0 = std::chrono::steady_clock::now();
  int code = 0;
  json j = cli({"seq", "--germ", "x1^2 - x2^3", "--arc", "(t^3, t^2)", "--steps", "5"}, code);
  const double dt = seconds_since(t0);
  bool ok = code == 0 && j["m"] == json::parse("[2,2,2,1,1,1]") && j["stabilized_at"] == 3 && j["bound_D"] == 3 &&
            dt < cusp_limit;
  report(1, "cusp golden", ok,
         code == 0 ? "M=" + j["m"].dump() + " stabilized_at=" + j["stabilized_at"].dump() +
                         " D=" + j["bound_D"].dump() + " in " + fmt(dt) + " (limit 1s)"
                   : "exit code " + std::to_string(code));
}

void criterion_2() {
  int c1 = 0, c2 = 0;
  json s = cli({"seq", "--germ", "x1^2 - x2*x3^2", "--arc", "(0, t, 0)", "--steps", "5"}, c1);
  json g = cli({"generic", "--germ", "x1^2 - x2*x3^2", "--arc", "(0, t, 0)"}, c2);
  bool ok = c1 == 0 && c2 == 0 && s["m"] == json::parse("[2,2,2,2,2,2]") && g["m0prime"] == 2;
  report(2, "Whitney umbrella", ok,
         "M=" + s["m"].dump() + " m0prime=" + g["m0prime"].dump());
}

void criteria_3_4(const std::vector<Case>& corpus) {
  auto t0 = std::chrono::steady_clock::now();
  int violations = 0;
  for (const auto& c : corpus) {
    auto r = nash_sequences(GermIdeal(c.f.num_vars(), {c.f}), c.arc, 5);
    if (!hilbert_nonincreasing(r)) ++violations;
  }
  const double dt = seconds_since(t0);
  report(3, "monotonicity", violations == 0 && dt < monotone_limit,
         std::to_string(corpus.size()) + " cases, " + std::to_string(violations) + " violations in " + fmt(dt) +
             " (limit 30s)");

  int bound_bad = 0, sample_bad = 0, generic_bad = 0, checks = 0;
  std::uint64_t seed = 1;
  for (const auto& c : corpus) {
    const std::uint32_t m = c.f.order().value();
    for (std::size_t i = 0; i <= 3; ++i) {
      ++checks;
      const std::uint32_t lo = min_order_on_ball(c.f, c.arc, i);
      if (lo < m || lo > m * (i + 1)) ++bound_bad;
      for (const auto& o : sample_ball_orders(c.f, c.arc, i, 5, seed++))
        if (o && *o < lo) ++sample_bad;
      if (exact_order_along(c.f, generic_ball_point(c.f, c.arc, i, seed++)) != lo) ++generic_bad;
    }
  }
  report(4, "ball minimum", bound_bad + sample_bad + generic_bad == 0,
         std::to_string(checks) + " balls: " + std::to_string(bound_bad) + " outside [m, m(i+1)], " +
             std::to_string(sample_bad) + " samples below, " + std::to_string(generic_bad) + " generic misses");
}

void criteria_5_6() {
  auto corpus = ideal_corpus();
  auto t0 = std::chrono::steady_clock::now();
  int mismatches = 0;
  bool worked = false;
  for (const auto& gens : corpus) {
    auto b = standard_basis(gens, 4);
    for (std::uint32_t k = 0; k <= 6; ++k)
      if (b.diagram.hilbert(k) != hilbert_samuel_direct(gens, 4, k)) ++mismatches;
  }
  {
    auto gens = parse_polynomial_list("x^2; x*y + t^3", txy(), QQ());
    auto b = standard_basis(gens, 3);
    worked = b.diagram.vertices() == std::vector<ExponentVector>{ExponentVector{0, 1, 1}, ExponentVector{0, 2, 0},
                                                                 ExponentVector{3, 1, 0}, ExponentVector{6, 0, 0}};
    for (std::uint32_t k = 0; k <= 6; ++k)
      if (b.diagram.hilbert(k) != hilbert_samuel_direct(gens, 3, k)) ++mismatches;
  }
  const double dt = seconds_since(t0);
  report(5, "standard basis oracle", mismatches == 0 && worked && corpus.size() >= 20 && dt < oracle_limit,
         std::to_string(corpus.size() + 1) + " ideals, k=0..6, " + std::to_string(mismatches) +
             " mismatches, worked ideal " + (worked ? "ok" : "wrong") + " in " + fmt(dt) + " (limit 60s)");

  std::mt19937_64 rng(6);
  int changed = 0;
  for (const auto& gens : corpus) {
    auto base = standard_basis(gens, 4).diagram;
    std::vector<Polynomial> more = gens;
    for (int c = 0; c < 5; ++c) {
      Polynomial comb(QQ(), 4);
      for (const auto& g : gens) comb += g * random_polynomial(rng, 4, 0, 2, 2);
      more.push_back(comb);
    }
    if (!(standard_basis(more, 4).diagram == base)) ++changed;
  }
  report(6, "diagram independence", changed == 0,
         std::to_string(corpus.size()) + " ideals with 5 extra combinations, " + std::to_string(changed) +
             " changed");
}

mpq_class formula_count(unsigned n, unsigned k, unsigned level, std::uint64_t q) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), q, static_cast<unsigned long>(n) * level);
  return partial_sum(n, k, level).specialize(q) * scale;
}

// Census at (level, q) compared with the partial sum; returns whether it matched.
bool census_line(unsigned level, std::uint64_t q, std::string& detail, double& worst) {
  CensusResult c = census(3, 2, level, q, 1);
  worst = std::max(worst, c.elapsed_seconds);
  mpq_class f = formula_count(3, 2, level, q);
  bool ok = f == mpq_class(mpz_class(std::to_string(c.count)));
  detail += " (i=" + std::to_string(level) + ",q=" + std::to_string(q) + "):" + std::to_string(c.count) +
            (ok ? "=" : "!=") + f.get_str();
  return ok;
}

bool third_term_verdict_census = false;

void criterion_7() {
  std::string detail;
  double worst = 0;
  bool ok = true;
  for (auto [level, q] : {std::pair{1u, 5ull}, std::pair{2u, 5ull}, std::pair{1u, 7ull}, std::pair{2u, 3ull}})
    ok = census_line(level, q, detail, worst) && ok;
  const std::uint64_t base = census(3, 2, 1, 5).count;
  ok = ok && base == 120 && worst < census_limit;
  report(7, "census equality", ok, "census(3,2,1,5)=" + std::to_string(base) + detail + ", slowest " + fmt(worst) +
                                       " (limit 300s)");
  // Level 3 is the first level where the third contribution is nonzero.
  std::string extra;
  double w3 = 0;
  third_term_verdict_census = census_line(3, 3, extra, w3);
}

void criterion_8() {
  bool limits = true;
  bool display = true;
  bool differs = true;
  for (auto [n, k] : {std::pair{3u, 2u}, std::pair{4u, 3u}}) {
    auto v = volume_terms(n, k);
    limits = limits && v.total() == volume_closed_form(n, k);
    const auto L = MotivicExpr::L(1);
    const auto one = MotivicExpr(1);
    MotivicExpr sum(static_cast<long>(k));
    for (unsigned p = 2; p + 1 <= n; ++p) sum += MotivicExpr::symbol(p, k);
    auto rf = [](UPoly num, UPoly den) { return RationalFunction(std::move(num), std::move(den)); };
    auto first = (sum * L).times(rf(UPoly::cyclic(1), UPoly::cyclic(n)));
    auto second = MotivicExpr::symbol(n, k).times(rf(UPoly::cyclic(1), UPoly::cyclic(2 * n - 1)));
    display = display && complex_reduction(v.first, k) == first && complex_reduction(v.second, k) == second;
    auto third_n = sum.times(rf(UPoly::cyclic(1) * UPoly::cyclic(1), UPoly::cyclic(n) * UPoly::cyclic(2 * n - 1)));
    auto third_alt =
        sum.times(rf(UPoly::cyclic(1) * UPoly::cyclic(1), UPoly::cyclic(n - 1) * UPoly::cyclic(2 * n - 1)));
    auto third = complex_reduction(v.third, k);
    differs = differs && third == third_n && !(third == third_alt);
  }
  // Numeric check at q = 5: T_i approaches the closed form, not the alternative.
  const unsigned n = 3, k = 2;
  const std::uint64_t q = 5;
  auto v = volume_terms(n, k);
  auto C = class_C(n, k);
  auto rf = [](UPoly num, UPoly den) { return RationalFunction(std::move(num), std::move(den)); };
  auto alt = v.first + v.second + C.times(rf(UPoly::cyclic(1), UPoly::cyclic(n - 1) * UPoly::cyclic(2 * n - 1)));
  mpq_class gap = abs(partial_sum(n, k, 16).specialize(q) - volume_closed_form(n, k).specialize(q));
  mpq_class gap_alt = abs(partial_sum(n, k, 16).specialize(q) - alt.specialize(q));
  const bool numeric = gap < mpq_class(1, 1000000000) && gap_alt > mpq_class(1, 1000);
  const bool verdict = third_term_verdict_census && numeric && differs;
  report(8, "closed form", limits && display && verdict,
         std::string("limit==closed form for (3,2),(4,3): ") + (limits ? "yes" : "no") +
             "; first two terms match display: " + (display ? "yes" : "no") +
             "; third denominator (L^n-1)(L^(2n-1)-1): census i=3 q=3 " +
             (third_term_verdict_census ? "agrees" : "disagrees") + ", |T_16-V|<1e-9 at q=5: " +
             (numeric ? "yes" : "no") + ", alternative rejected: " + (differs && numeric ? "yes" : "no"));
}

void criterion_9() {
  std::vector<long> dims;
  bool ok = true;
  for (unsigned i = 1; i <= 8; ++i) {
    auto d = (partial_sum(3, 2, i + 1) - partial_sum(3, 2, i)).virtual_dimension();
    if (!d) {
      ok = false;
      break;
    }
    if (!dims.empty() && *d >= dims.back()) ok = false;
    dims.push_back(*d);
  }
  std::string s;
  for (auto d : dims) s += (s.empty() ? "" : ",") + std::to_string(d);
  report(9, "convergence", ok, "vdim(T_{i+1}-T_i), i=1..8: " + s);
}

void criterion_10() {
  std::mt19937_64 rng(1010);
  int violations = 0, lines = 0;
  struct Germ {
    GermIdeal g;
    Arc base;
  };
  std::vector<Germ> germs{
      {GermIdeal(2, parse_polynomial_list("x1^2 - x2^3", xy(), QQ())), parse_arc("(t^3, t^2)", QQ())},
      {GermIdeal(3, parse_polynomial_list("x1^2 - x2*x3^2", xyz(), QQ())), parse_arc("(0, t, 0)", QQ())}};
  for (const auto& G : germs) {
    for (int l = 0; l < 20; ++l) {
      const std::size_t n = G.g.dim();
      // Half the lines pass through the golden arc, the rest through random arcs.
      Arc base = l % 2 ? random_arc(rng, n, 4) : G.base;
      Arc dir = random_arc(rng, n, 4);
      std::vector<FieldElement> params;
      for (int s = 0; s < 5; ++s) {
        mpq_class v(rand_int(rng, 1, 1000) * (rand_int(rng, 0, 1) ? 1 : -1), rand_int(rng, 1, 1000));
        v.canonicalize();
        params.emplace_back(QQ(), v);
      }
      ++lines;
      if (!check_semicontinuity(G.g, base, dir, 4, params).holds()) ++violations;
    }
  }
  report(10, "semicontinuity", violations == 0,
         std::to_string(lines) + " lines x 5 parameters, " + std::to_string(violations) + " violations");
}

} // namespace

int main() {
  guarded(1, "cusp golden", criterion_1);
  guarded(2, "Whitney umbrella", criterion_2);
  auto corpus = hypersurface_corpus();
  guarded(3, "monotonicity / ball minimum", [&] { criteria_3_4(corpus); });
  guarded(5, "standard basis oracle / diagram independence", criteria_5_6);
  guarded(7, "census equality", criterion_7);
  guarded(8, "closed form", criterion_8);
  guarded(9, "convergence", criterion_9);
  guarded(10, "semicontinuity", criterion_10);
  std::printf("%s\n", failures == 0 ? "ALL PASS" : "FAILURES PRESENT");
  return failures == 0 ? 0 : 1;
}
