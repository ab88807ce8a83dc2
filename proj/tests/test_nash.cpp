#include <doctest.h>

#include <random>

#include "nashseq/nash.hpp"
#include "support.hpp"

using namespace testing;

namespace {

GermIdeal germ(const std::string& s, const std::vector<std::string>& names) {
  return GermIdeal(names.size(), parse_polynomial_list(s, names, QQ()));
}

std::vector<std::uint64_t> M(const NashReport& r) { return r.multiplicities(); }

void check_monotone(const NashReport& r) {
  for (std::size_t j = 1; j < r.steps.size(); ++j) {
    CHECK(r.steps[j].multiplicity <= r.steps[j - 1].multiplicity);
    const auto& a = r.steps[j - 1].hilbert.values;
    const auto& b = r.steps[j].hilbert.values;
    for (std::size_t k = 0; k < std::min(a.size(), b.size()); ++k) CHECK(b[k] <= a[k]);
    CHECK(hilbert_dominates(r.steps[j - 1].diagram, r.steps[j].diagram));
  }
}

} // namespace

TEST_CASE("cusp along (t^3, t^2)") {
  auto r = nash_sequences(germ("x1^2 - x2^3", xy()), parse_arc("(t^3, t^2)", QQ()), 3);
  CHECK(M(r) == std::vector<std::uint64_t>{2, 2, 2, 1});
  CHECK(r.steps[3].diagram.vertices() == std::vector<ExponentVector>{ExponentVector{0, 1, 0}});
  const std::vector<std::string> names{"t", "x1", "x2"};
  CHECK(r.steps[1].generators.front() == P("x1^2 - t*x2^3", names));
  CHECK(r.steps[2].generators.front() == P("x1^2 - t^2*(1 + x2)^3", names));
  CHECK(r.steps[3].generators.front() == P("(1 + x1)^2 - (1 + t*x2)^3", names));
  CHECK(r.smooth_from == 3u);
}

TEST_CASE("Whitney umbrella along (0, t, 0)") {
  auto r = nash_sequences(germ("x1^2 - x2*x3^2", xyz()), parse_arc("(0, t, 0)", QQ()), 3);
  CHECK(M(r) == std::vector<std::uint64_t>{2, 2, 2, 2});
  CHECK(r.smooth_from == std::nullopt);
  auto g = generic_multiplicity_along_arc(P("x1^2 - x2*x3^2", xyz()), parse_arc("(0, t, 0)", QQ()), 8);
  CHECK(g.m0 == 2);
  CHECK(smooth_stabilization_bound(germ("x1^2 - x2*x3^2", xyz()), parse_arc("(0, t, 0)", QQ()), 12, 2) ==
        std::nullopt);
}

TEST_CASE("smooth germs") {
  auto r = nash_sequences(germ("x1", xy()), parse_arc("(0, t)", QQ()), 2);
  CHECK(M(r) == std::vector<std::uint64_t>{1, 1, 1});
  CHECK(smooth_stabilization_bound(germ("x1", xy()), parse_arc("(0, t)", QQ()), 4, 1) == 0u);
  auto g = generic_multiplicity_along_arc(P("x1", xy()), parse_arc("(0, t + t^2)", QQ()), 4);
  CHECK(g.m0 == 1);
  CHECK(g.D == 0);
}

TEST_CASE("generic multiplicity along the cusp arc") {
  auto g = generic_multiplicity_along_arc(P("x1^2 - x2^3", xy()), parse_arc("(t^3, t^2)", QQ()), 12);
  CHECK(g.m0 == 1);
  CHECK(g.D == 3);
  CHECK(smooth_stabilization_bound(germ("x1^2 - x2^3", xy()), parse_arc("(t^3, t^2)", QQ()), 12, 1) == 3u);
}

TEST_CASE("generic multiplicity is undetermined when the precision is too low") {
  // In characteristic 5 every proper partial derivative of x1^5 vanishes.
  Field F5 = Field::prime(5);
  CHECK_THROWS_AS(generic_multiplicity_along_arc(P("x1^5", xy(), F5), parse_arc("(0, t)", F5), 10), Undetermined);
  // Low precision only bounds m0 from above.
  CHECK(generic_multiplicity_along_arc(P("x1^2 - x2^3", xy()), parse_arc("(t^3, t^2)", QQ()), 1).m0 == 2);
}

TEST_CASE("germ validation") {
  CHECK_THROWS_AS(germ("1 + x1", xy()), std::invalid_argument);
  CHECK_THROWS_AS(GermIdeal(2, {}), std::invalid_argument);
  CHECK_THROWS_AS(GermIdeal(3, parse_polynomial_list("x1", xy(), QQ())), std::invalid_argument);
  CHECK_THROWS_AS(nash_sequences(germ("x1", xy()), parse_arc("(1 + t, t)", QQ()), 2), std::invalid_argument);
}

TEST_CASE("compare_sequences") {
  auto g = germ("x1^2 - x2^3", xy());
  auto a = nash_sequences(g, parse_arc("(t^3, t^2)", QQ()), 3);
  auto b = nash_sequences(g, parse_arc("(t, t)", QQ()), 3);
  CHECK(compare_sequences(a, a) == Comparison::equal);
  CHECK(compare_sequences(a, b) != Comparison::equal);
  CHECK_THROWS(compare_sequences(a, nash_sequences(g, parse_arc("(t^3, t^2)", QQ()), 2)));
}

TEST_CASE("cusp reaches the stabilization index with the generic multiplicity") {
  auto germ2 = germ("x1^2 - x2^3", xy());
  auto arc = parse_arc("(t^3, t^2)", QQ());
  auto r = nash_sequences(germ2, arc, 5);
  CHECK(r.stabilized_at == 3u);
  for (std::size_t j = 3; j <= 5; ++j) CHECK(r.steps[j].multiplicity == 1);
}

TEST_CASE("random hypersurfaces: monotone sequences and eventual stabilization") {
  std::mt19937_64 rng(41);
  int bounded = 0;
  for (int r = 0; r < 40; ++r) {
    const std::size_t n = static_cast<std::size_t>(rand_int(rng, 2, 3));
    Polynomial f(QQ(), n);
    Arc arc(QQ(), n);
    if (r % 2) {
      auto g = random_germ_on_arc(rng, n);
      f = g.f;
      arc = g.arc;
    } else {
      f = random_germ(rng, n, 4);
      arc = random_arc(rng, n, 5);
    }
    GermIdeal G(n, {f});
    auto D = smooth_stabilization_bound(G, arc, 4 * std::max<std::size_t>(arc.order(), 1), n - 1);
    const std::size_t steps = D ? std::max<std::size_t>(*D + 1, 4) : 4;
    auto rep = nash_sequences(G, arc, std::min<std::size_t>(steps, 8));
    check_monotone(rep);
    // The bound concerns arcs lying on the germ.
    const bool on_germ = !compose_arc(f, arc, 4 * 5).provably_nonzero();
    if (on_germ && D && *D + 1 <= rep.steps.size() - 1) {
      auto gm = generic_multiplicity_along_arc(f, arc, 4 * std::max<std::size_t>(arc.order(), 1));
      ++bounded;
      for (std::size_t j = *D; j < rep.steps.size(); ++j) CHECK(rep.steps[j].multiplicity == gm.m0);
    }
  }
  CHECK(bounded > 5);
}

TEST_CASE("derivative ideal orders drop along transform chains") {
  std::mt19937_64 rng(42);
  CHECK(check_derivative_order_drop(P("x1^2 - x2^3", xy()), parse_arc("(t^3, t^2)", QQ()), 4, 40).empty());
  CHECK(check_derivative_order_drop(P("x1^2 - x2*x3^2", xyz()), parse_arc("(0, t, 0)", QQ()), 4, 40).empty());
  for (int r = 0; r < 20; ++r) {
    const std::size_t n = static_cast<std::size_t>(rand_int(rng, 2, 3));
    auto g = random_germ_on_arc(rng, n);
    CHECK(check_derivative_order_drop(g.f, g.arc, 3, 40).empty());
  }
}

TEST_CASE("sequences up to step i depend only on the truncation") {
  std::mt19937_64 rng(43);
  for (int r = 0; r < 20; ++r) {
    const std::size_t n = 2;
    auto f = random_germ(rng, n, 4);
    auto arc = random_arc(rng, n, 5);
    const std::size_t i = static_cast<std::size_t>(rand_int(rng, 1, 3));
    Arc changed = arc.truncated(i).with_coefficient(i + 1, {FieldElement(QQ(), 7L), FieldElement(QQ(), -5L)});
    GermIdeal G(n, {f});
    auto a = nash_sequences(G, arc, i), b = nash_sequences(G, changed, i);
    CHECK(compare_sequences(a, b) == Comparison::equal);
    CHECK(a.multiplicities() == b.multiplicities());
  }
}

TEST_CASE("arcs on the germ never give a pure-t exponent") {
  std::mt19937_64 rng(44);
  for (int r = 0; r < 25; ++r) {
    const std::size_t n = static_cast<std::size_t>(rand_int(rng, 2, 3));
    auto g = random_germ_on_arc(rng, n);
    REQUIRE_FALSE(compose_arc(g.f, g.arc, 40).provably_nonzero());
    auto rep = nash_sequences(GermIdeal(n, {g.f}), g.arc, 4);
    for (const auto& s : rep.steps) CHECK_FALSE(s.diagram.contains_pure_t());
    for (const auto& s : rep.steps) CHECK(s.multiplicity >= 1);
  }
}

TEST_CASE("ideal path agrees with the hypersurface fast path") {
  std::mt19937_64 rng(45);
  NashOptions slow;
  slow.hypersurface_fast_path = false;
  for (int r = 0; r < 15; ++r) {
    auto f = random_germ(rng, 2, 4);
    auto arc = random_arc(rng, 2, 4);
    GermIdeal G(2, {f});
    auto a = nash_sequences(G, arc, 3), b = nash_sequences(G, arc, 3, slow);
    CHECK(compare_sequences(a, b) == Comparison::equal);
    CHECK(a.multiplicities() == b.multiplicities());
  }
}

TEST_CASE("ideals: step diagrams agree with the direct Hilbert-Samuel count") {
  std::mt19937_64 rng(46);
  auto check = [&](const GermIdeal& G, const Arc& arc) {
    auto rep = nash_sequences(G, arc, 3);
    check_monotone(rep);
    for (const auto& s : rep.steps)
      for (std::uint32_t k = 0; k <= 4; ++k)
        CHECK(s.diagram.hilbert(k) == hilbert_samuel_direct(s.generators, G.dim() + 1, k));
  };
  check(germ("x1^2 - x2^3; x3^2 - x1*x2", xyz()), parse_arc("(t^3, t^2, t^3)", QQ()));
  check(germ("x1*x2; x1*x3; x2*x3", xyz()), parse_arc("(t, 0, 0)", QQ()));
  for (int r = 0; r < 10; ++r) {
    std::vector<Polynomial> gens{random_germ(rng, 3, 3), random_germ(rng, 3, 3)};
    check(GermIdeal(3, gens), random_arc(rng, 3, 3));
  }
}

TEST_CASE("Jacobian ideal of a hypersurface") {
  auto J = jacobian_ideal(germ("x1^2 - x2^3", xy()), 1);
  CHECK(J.size() == 3);
  CHECK(J[1] == P("2*x1", xy()));
  CHECK(J[2] == P("-3*x2^2", xy()));
}

TEST_CASE("semicontinuity along lines through the cusp arc") {
  std::mt19937_64 rng(47);
  auto g = germ("x1^2 - x2^3", xy());
  Arc base = parse_arc("(t^3, t^2)", QQ());
  for (int r = 0; r < 5; ++r) {
    Arc dir = random_arc(rng, 2, 3);
    std::vector<FieldElement> params;
    for (int s = 0; s < 5; ++s) params.emplace_back(QQ(), mpq_class(rand_int(rng, 1, 500), rand_int(rng, 1, 500)));
    auto c = check_semicontinuity(g, base, dir, 4, params);
    CHECK(c.constant);
    CHECK(c.generic_vs_special != Comparison::greater);
  }
}

TEST_CASE("principal stratum test") {
  const std::vector<std::string> names{"t", "x1", "x2"};
  CHECK(is_principal(P("x1 + t", names)));
  CHECK_FALSE(is_principal(P("t + x1^2", names)));
  CHECK_FALSE(is_principal(P("x1^2", names)));
  CHECK_FALSE(is_principal(P("1 + x1", names)));
}
