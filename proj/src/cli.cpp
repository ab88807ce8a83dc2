#include "nashseq/cli.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "nashseq/arcspace.hpp"
#include "nashseq/census.hpp"
#include "nashseq/motivic.hpp"
#include "nashseq/nash.hpp"
#include "nashseq/parse.hpp"
#include "nashseq/report.hpp"
#include "nashseq/staircase.hpp"
#include "nashseq/standard_basis.hpp"

namespace nashseq::cli {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "@path" reads the expression from a file.
std::string inline_or_file(const std::string& s) {
  if (s.empty() || s[0] != '@') return s;
  std::ifstream in(s.substr(1));
  if (!in) throw InputError("cannot read " + s.substr(1));
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  return text;
}

Field parse_field(const std::string& s) {
  if (s == "QQ" || s == "Q" || s == "0") return Field::rationals();
  std::uint64_t p = 0;
  try {
    std::size_t used = 0;
    p = std::stoull(s, &used);
    if (used != s.size()) throw InputError("bad field " + s);
  } catch (const std::logic_error&) {
    throw InputError("bad field " + s + "; use QQ or a prime");
  }
  if (!is_prime(p)) throw InputError("field characteristic " + s + " is not prime");
  return Field::prime(p);
}

std::vector<std::string> variable_names(const std::string& names, std::size_t n, bool with_t) {
  if (names.empty()) {
    if (n == 0) throw InputError("the number of variables is unknown; pass --vars or --names");
    return default_names(with_t ? n + 1 : n, with_t);
  }
  std::vector<std::string> out;
  for (auto& s : split_top_level(names, ',')) {
    std::string v;
    for (char c : s)
      if (!std::isspace(static_cast<unsigned char>(c))) v += c;
    if (v.empty()) throw InputError("empty variable name");
    out.push_back(v);
  }
  if (n != 0 && out.size() != (with_t ? n + 1 : n)) throw InputError("--names does not match --vars");
  return out;
}

std::vector<std::string> with_t_names(const std::vector<std::string>& xs) {
  std::vector<std::string> out{"t"};
  out.insert(out.end(), xs.begin(), xs.end());
  return out;
}

std::size_t exact_precision(const std::vector<Polynomial>& polys, const Arc& arc) {
  std::uint32_t deg = 1;
  for (const auto& p : polys) deg = std::max(deg, p.total_degree());
  return static_cast<std::size_t>(deg) * std::max<std::size_t>(1, arc.order());
}

json sequence_json(const std::vector<Staircase>& seq) {
  json a = json::array();
  for (const auto& s : seq) a.push_back(to_json(s));
  return a;
}

// Random nonzero rational p/q with |p|, q <= 1000, or a nonzero residue.
FieldElement random_parameter(Field field, std::mt19937_64& rng) {
  if (field.is_rational()) {
    std::uniform_int_distribution<long> num(1, 1000), den(1, 1000), sign(0, 1);
    mpq_class v(num(rng) * (sign(rng) ? 1 : -1), den(rng));
    v.canonicalize();
    return FieldElement(field, v);
  }
  std::uniform_int_distribution<std::uint64_t> r(1, field.characteristic() - 1);
  return FieldElement(field, static_cast<long>(r(rng)));
}

Arc random_direction(Field field, std::size_t n, std::size_t order, std::mt19937_64& rng) {
  std::vector<std::vector<FieldElement>> coeffs;
  std::uniform_int_distribution<long> c(-3, 3);
  for (std::size_t k = 0; k < order; ++k) {
    std::vector<FieldElement> a;
    for (std::size_t j = 0; j < n; ++j) {
      long v = c(rng);
      a.push_back(FieldElement(field, v));
    }
    coeffs.push_back(std::move(a));
  }
  return Arc(field, n, std::move(coeffs));
}

struct Options {
  std::string output;
  std::string field = "QQ";
  std::string names;
  std::string germ, arc, a, b, gens, vertices, versus;
  std::size_t steps = 3, vars = 0, level = 1, samples = 10, lines = 5, params = 5;
  long dim = -1, precision = -1, kmax = -1;
  std::uint64_t seed = 0, q = 0;
  unsigned n = 3, k = 2, threads = 1;
  bool with_t = false, distinguished = false, timing = false, complex = false;
  long degree_bound = -1;
};

json cmd_seq(const Options& o) {
  Field field = parse_field(o.field);
  Arc arc = parse_arc(inline_or_file(o.arc), field);
  std::size_t n = o.vars ? o.vars : arc.dim();
  auto names = variable_names(o.names, n, false);
  auto gens = parse_polynomial_list(inline_or_file(o.germ), names, field);
  GermIdeal germ(names.size(), gens);
  NashOptions opts;
  opts.hilbert_kmax = o.kmax;
  NashReport r = nash_sequences(germ, arc, o.steps, opts);
  // The expected dimension is known for hypersurfaces; ideals need --dim.
  long d = o.dim;
  if (d < 0 && germ.is_hypersurface()) d = static_cast<long>(germ.dim()) - 1;
  if (d >= 0) {
    if (d > static_cast<long>(germ.dim())) throw InputError("--dim exceeds the number of variables");
    auto J = jacobian_ideal(germ, static_cast<std::size_t>(d));
    std::size_t prec = o.precision >= 0 ? static_cast<std::size_t>(o.precision) : exact_precision(J, arc);
    r.bound_D = smooth_stabilization_bound(germ, arc, prec, static_cast<std::size_t>(d));
  }
  return to_json(r, with_t_names(names));
}

json cmd_generic(const Options& o) {
  Field field = parse_field(o.field);
  Arc arc = parse_arc(inline_or_file(o.arc), field);
  auto names = variable_names(o.names, o.vars ? o.vars : arc.dim(), false);
  auto gens = parse_polynomial_list(inline_or_file(o.germ), names, field);
  GermIdeal germ(names.size(), gens);
  if (!germ.is_hypersurface()) throw InputError("generic needs a single polynomial");
  const Polynomial& f = germ.generators().front();
  std::size_t prec = o.precision >= 0 ? static_cast<std::size_t>(o.precision) : exact_precision({f}, arc);
  GenericMultiplicity g = generic_multiplicity_along_arc(f, arc, prec);
  json j;
  j["m0prime"] = g.m0;
  j["D"] = g.D;
  auto J = jacobian_ideal(germ, germ.dim() - 1);
  std::size_t jprec = o.precision >= 0 ? static_cast<std::size_t>(o.precision) : exact_precision(J, arc);
  auto bound = smooth_stabilization_bound(germ, arc, jprec, germ.dim() - 1);
  j["bound_D"] = bound ? json(*bound) : json(nullptr);
  return j;
}

Staircase parse_staircase(const std::string& text) {
  json v;
  try {
    v = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("vertices: ") + e.what());
  }
  if (!v.is_array() || v.empty() || !v.front().is_array()) throw InputError("vertices must be a nonempty list of lists");
  const std::size_t m = v.front().size();
  try {
    return staircase_from_json(v, m);
  } catch (const json::exception& e) {
    throw InputError(std::string("vertices: ") + e.what());
  }
}

json cmd_staircase(const Options& o) {
  Staircase s = parse_staircase(inline_or_file(o.vertices));
  json j;
  j["vertices"] = to_json(s);
  j["bound"] = s.bound();
  j["hilbert"] = to_json(hilbert_samuel(s, o.kmax));
  if (!o.versus.empty()) {
    Staircase t = parse_staircase(inline_or_file(o.versus));
    if (t.dim() != s.dim()) throw InputError("compared staircases live in different dimensions");
    j["compare"] = comparison_string(compare(s, t));
    j["contains"] = s.contains(t);
  }
  return j;
}

json cmd_sb(const Options& o) {
  Field field = parse_field(o.field);
  auto names = variable_names(o.names, o.vars, o.with_t);
  auto gens = parse_polynomial_list(inline_or_file(o.gens), names, field);
  StandardBasis b = standard_basis(gens, names.size());
  if (o.distinguished) {
    std::uint32_t bound = 0;
    if (o.degree_bound >= 0) {
      bound = static_cast<std::uint32_t>(o.degree_bound);
    } else {
      bound = b.diagram.bound();
      for (const auto& g : gens) bound = std::max(bound, g.total_degree());
    }
    b = distinguished_basis(b, bound);
  }
  json j = to_json(b, names);
  j["hilbert"] = to_json(hilbert_samuel(b.diagram, o.kmax));
  return j;
}

json cmd_ball_min(const Options& o) {
  Field field = parse_field(o.field);
  Arc arc = parse_arc(inline_or_file(o.arc), field);
  auto names = variable_names(o.names, o.vars ? o.vars : arc.dim(), false);
  auto gens = parse_polynomial_list(inline_or_file(o.germ), names, field);
  GermIdeal germ(names.size(), gens);
  if (!germ.is_hypersurface()) throw InputError("ball-min needs a single polynomial");
  const Polynomial& f = germ.generators().front();
  const std::uint32_t lower = min_order_on_ball(f, arc, o.level);
  json m = json::array();
  for (const auto& fj : transform_chain(lift_to_tx(f), arc, o.level)) m.push_back(fj.order().value());
  auto orders = sample_ball_orders(f, arc, o.level, o.samples, o.seed);
  json sampled = json::array();
  std::size_t below = 0;
  for (const auto& ord : orders) {
    sampled.push_back(order_json(ord));
    if (ord && *ord < lower) ++below;
  }
  Order generic = exact_order_along(f, generic_ball_point(f, arc, o.level, o.seed));
  json j;
  j["level"] = o.level;
  j["m"] = m;
  j["min_order"] = lower;
  j["samples"] = sampled;
  j["below_min"] = below;
  j["generic_order"] = order_json(generic);
  j["attained"] = generic && *generic == lower;
  return j;
}

json cmd_distance(const Options& o) {
  Field field = parse_field(o.field);
  Arc a = parse_arc(inline_or_file(o.a), field);
  Arc b = parse_arc(inline_or_file(o.b), field);
  return to_json(arc_distance(a, b));
}

json cmd_semicont(const Options& o) {
  Field field = parse_field(o.field);
  Arc base = parse_arc(inline_or_file(o.arc), field);
  auto names = variable_names(o.names, o.vars ? o.vars : base.dim(), false);
  auto gens = parse_polynomial_list(inline_or_file(o.germ), names, field);
  GermIdeal germ(names.size(), gens);
  std::mt19937_64 rng(o.seed);
  json lines = json::array();
  std::size_t violations = 0;
  for (std::size_t l = 0; l < o.lines; ++l) {
    Arc dir = random_direction(field, base.dim(), std::max<std::size_t>(1, base.order()), rng);
    std::vector<FieldElement> params;
    for (std::size_t s = 0; s < o.params; ++s) params.push_back(random_parameter(field, rng));
    SemicontinuityCheck c = check_semicontinuity(germ, base, dir, o.steps, params);
    if (!c.holds()) ++violations;
    json lj;
    lj["direction"] = dir.to_string();
    json ps = json::array();
    for (const auto& p : params) ps.push_back(exact(p));
    lj["params"] = ps;
    lj["generic"] = sequence_json(c.samples.front());
    lj["constant"] = c.constant;
    lj["generic_vs_special"] = comparison_string(c.generic_vs_special);
    lines.push_back(lj);
  }
  json j;
  std::vector<Staircase> special;
  for (const auto& s : nash_sequences(germ, base, o.steps).steps) special.push_back(s.diagram);
  j["special"] = sequence_json(special);
  j["lines"] = lines;
  j["violations"] = violations;
  return j;
}

json terms_json(const MotivicExpr& a, const MotivicExpr& b, const MotivicExpr& c, bool complex, unsigned k) {
  auto f = [&](const MotivicExpr& e) { return to_json(complex ? complex_reduction(e, k) : e); };
  json j;
  j["first"] = f(a);
  j["second"] = f(b);
  j["third"] = f(c);
  j["total"] = f(a + b + c);
  return j;
}

json cmd_volume(const Options& o) {
  VolumeTerms v = volume_terms(o.n, o.k);
  json j;
  j["n"] = o.n;
  j["k"] = o.k;
  j["volume"] = terms_json(v.first, v.second, v.third, o.complex, o.k);
  return j;
}

json cmd_partial(const Options& o) {
  PartialSumTerms t = partial_sum_terms(o.n, o.k, static_cast<unsigned>(o.level));
  json j;
  j["n"] = o.n;
  j["k"] = o.k;
  j["level"] = o.level;
  j["partial_sum"] = terms_json(t.first, t.second, t.third, o.complex, o.k);
  auto vd = t.total().virtual_dimension();
  j["virtual_dimension"] = vd ? json(*vd) : json(nullptr);
  return j;
}

json cmd_census(const Options& o) {
  if (o.q == 0) throw InputError("census needs --q");
  CensusResult c = census(o.n, o.k, static_cast<unsigned>(o.level), o.q, o.threads);
  json j = to_json(c, o.timing);
  mpq_class predicted = partial_sum(o.n, o.k, static_cast<unsigned>(o.level)).specialize(o.q);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), o.q, static_cast<unsigned long>(o.n) * o.level);
  predicted *= scale;
  j["formula"] = exact(predicted);
  j["matches"] = predicted == mpq_class(mpz_class(std::to_string(c.count)));
  return j;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Nash sequences, arc-space utilities and motivic volumes"};
  app.name("nashseq");
  app.require_subcommand(1);
  app.add_option("--output,-o", o.output, "write the JSON report to this file");

  auto add_field = [&](CLI::App* c) {
    c->add_option("--field", o.field, "QQ or a prime p")->capture_default_str();
    c->add_option("--names", o.names, "comma-separated variable names");
  };

  auto* seq = app.add_subcommand("seq", "Nash sequences of a germ along an arc");
  seq->add_option("--germ", o.germ, "';'-separated generators")->required();
  seq->add_option("--arc", o.arc, "(p_1(t), ..., p_n(t))")->required();
  seq->add_option("--steps", o.steps)->capture_default_str();
  seq->add_option("--vars", o.vars, "number of variables (default: arc dimension)");
  seq->add_option("--dim", o.dim, "dimension of the germ, for the smoothness bound");
  seq->add_option("--precision", o.precision, "arc precision for the smoothness bound");
  seq->add_option("--kmax", o.kmax, "largest k stored for Hilbert functions");
  add_field(seq);

  auto* generic = app.add_subcommand("generic", "generic multiplicity along an arc and the bound D");
  generic->add_option("--germ", o.germ)->required();
  generic->add_option("--arc", o.arc)->required();
  generic->add_option("--vars", o.vars);
  generic->add_option("--precision", o.precision);
  add_field(generic);

  auto* stair = app.add_subcommand("staircase", "vertices, Hilbert function and comparison of diagrams");
  stair->add_option("--vertices", o.vertices, "JSON list of exponent lists")->required();
  stair->add_option("--compare", o.versus, "second diagram");
  stair->add_option("--k", o.kmax, "largest k for Hilbert values");

  auto* sb = app.add_subcommand("sb", "standard basis and diagram of an ideal");
  sb->add_option("--gens", o.gens, "';'-separated generators")->required();
  sb->add_option("--vars", o.vars, "number of variables besides t");
  sb->add_flag("--t", o.with_t, "variable 0 is t");
  sb->add_flag("--distinguished", o.distinguished, "reduce tails off the diagram");
  sb->add_option("--degree-bound", o.degree_bound, "degree up to which tails are reduced");
  sb->add_option("--k", o.kmax, "largest k for Hilbert values");
  add_field(sb);

  auto* ball = app.add_subcommand("ball-min", "minimal order of f on a ball of arcs");
  ball->add_option("--germ", o.germ)->required();
  ball->add_option("--arc", o.arc)->required();
  ball->add_option("--level", o.level)->required();
  ball->add_option("--samples", o.samples)->capture_default_str();
  ball->add_option("--seed", o.seed)->required();
  ball->add_option("--vars", o.vars);
  add_field(ball);

  auto* dist = app.add_subcommand("distance", "ultrametric distance of two arcs");
  dist->add_option("--a", o.a)->required();
  dist->add_option("--b", o.b)->required();
  dist->add_option("--field", o.field)->capture_default_str();

  auto* mot = app.add_subcommand("motivic", "motivic volume of the Brieskorn family");
  mot->require_subcommand(1);
  auto add_nk = [&](CLI::App* c) {
    c->add_option("--n", o.n)->capture_default_str();
    c->add_option("--k", o.k)->capture_default_str();
  };
  auto* vol = mot->add_subcommand("volume", "closed-form volume");
  add_nk(vol);
  vol->add_flag("--complex", o.complex, "replace [V_{1,k}] by k");
  auto* part = mot->add_subcommand("partial", "partial sum T_i");
  add_nk(part);
  part->add_option("--level", o.level)->required();
  part->add_flag("--complex", o.complex, "replace [V_{1,k}] by k");
  auto* cen = mot->add_subcommand("census", "finite-field census of the principal stratum");
  add_nk(cen);
  cen->add_option("--level", o.level)->required();
  cen->add_option("--q", o.q)->required();
  cen->add_option("--threads", o.threads)->capture_default_str();
  cen->add_flag("--timing", o.timing, "include elapsed_seconds");

  auto* semi = app.add_subcommand("semicont", "semicontinuity along random lines of arcs");
  semi->add_option("--germ", o.germ)->required();
  semi->add_option("--arc", o.arc)->required();
  semi->add_option("--steps", o.steps)->capture_default_str();
  semi->add_option("--seed", o.seed)->required();
  semi->add_option("--lines", o.lines)->capture_default_str();
  semi->add_option("--samples", o.params, "parameters per line")->capture_default_str();
  semi->add_option("--vars", o.vars);
  add_field(semi);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input_error;
  }

  json report;
  try {
    if (*seq) report = cmd_seq(o);
    else if (*generic) report = cmd_generic(o);
    else if (*stair) report = cmd_staircase(o);
    else if (*sb) report = cmd_sb(o);
    else if (*ball) report = cmd_ball_min(o);
    else if (*dist) report = cmd_distance(o);
    else if (*vol) report = cmd_volume(o);
    else if (*part) report = cmd_partial(o);
    else if (*cen) report = cmd_census(o);
    else if (*semi) report = cmd_semicont(o);
  } catch (const Undetermined& e) {
    err << "undetermined: " << e.what() << "\n";
    return exit_undetermined;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return exit_input_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_input_error;
  }

  const std::string text = report.dump(2) + "\n";
  if (o.output.empty()) {
    out << text;
  } else {
    std::ofstream f(o.output);
    if (!f) {
      err << "error: cannot write " << o.output << "\n";
      return exit_input_error;
    }
    f << text;
  }
  return exit_ok;
}

} // namespace nashseq::cli
