#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "nashseq/staircase.hpp"

using namespace nashseq;

namespace {

ExponentVector E(std::initializer_list<std::uint32_t> e) { return ExponentVector(e); }

Staircase S(std::size_t m, std::vector<ExponentVector> v) { return Staircase::minimalize(m, std::move(v)); }

// Counts lattice points of degree <= k outside N one by one.
std::uint64_t brute_hilbert(const Staircase& n, std::uint32_t k) {
  std::uint64_t count = 0;
  std::vector<std::uint32_t> a(n.dim(), 0);
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t left) {
    if (i == a.size()) {
      if (!n.contains(ExponentVector(a))) ++count;
      return;
    }
    for (std::uint32_t v = 0; v <= left; ++v) {
      a[i] = v;
      rec(i + 1, left - v);
    }
    a[i] = 0;
  };
  rec(0, k);
  return count;
}

Staircase random_staircase(std::mt19937_64& rng, std::size_t m, std::size_t max_vertices, std::uint32_t max_entry) {
  std::uniform_int_distribution<std::size_t> count(1, max_vertices);
  std::uniform_int_distribution<std::uint32_t> entry(0, max_entry);
  std::vector<ExponentVector> v;
  const std::size_t c = count(rng);
  for (std::size_t i = 0; i < c; ++i) {
    std::vector<std::uint32_t> e(m);
    for (auto& x : e) x = entry(rng);
    v.emplace_back(std::move(e));
  }
  return S(m, std::move(v));
}

} // namespace

TEST_CASE("minimalize examples") {
  CHECK(S(2, {E({1, 0}), E({2, 0}), E({1, 1})}).vertices() == std::vector<ExponentVector>{E({1, 0})});
  CHECK(S(2, {}).is_empty());
  CHECK(S(2, {E({0, 2}), E({1, 1}), E({2, 0})}).vertices().size() == 3);
}

TEST_CASE("compare examples") {
  CHECK(compare(S(2, {E({1, 0}), E({0, 2})}), S(2, {E({1, 0})})) == Comparison::less);
  CHECK(compare(S(2, {E({0, 0})}), S(2, {E({1, 0})})) == Comparison::less);
  auto n = S(2, {E({1, 0}), E({0, 2})});
  CHECK(compare(n, n) == Comparison::equal);
}

TEST_CASE("hilbert examples") {
  CHECK(S(2, {E({1, 0}), E({0, 2})}).hilbert(50) == 2);
  CHECK(S(3, {E({2, 0, 0})}).hilbert(1) == 4);
  for (std::uint64_t k = 0; k < 8; ++k) CHECK(Staircase(3).hilbert(k) == binomial(static_cast<long>(k) + 3, 3));
}

TEST_CASE("hilbert_samuel examples") {
  auto h = hilbert_samuel(S(3, {E({2, 0, 0})}));
  CHECK(h.dimension == 2);
  CHECK(h.multiplicity == 2);
  auto line = hilbert_samuel(S(2, {E({0, 1})}));
  CHECK(line.dimension == 1);
  CHECK(line.multiplicity == 1);
  for (std::size_t k = 0; k < line.values.size(); ++k) CHECK(line.values[k] == k + 1);
  auto full = hilbert_samuel(Staircase::full(3));
  CHECK(full.dimension == std::nullopt);
  CHECK(full.multiplicity == 0);
  for (const auto& v : full.values) CHECK(v == 0);
  auto empty = hilbert_samuel(Staircase(2));
  CHECK(empty.full_ring);
  CHECK(empty.dimension == 2);
  CHECK(empty.multiplicity == 1);
}

TEST_CASE("inclusion-exclusion matches lattice enumeration") {
  std::mt19937_64 rng(21);
  for (int r = 0; r < 120; ++r) {
    const std::size_t m = 1 + r % 4;
    auto n = random_staircase(rng, m, 5, m == 4 ? 2 : 3);
    const std::uint32_t top = std::min<std::uint32_t>(2 * n.bound(), m == 4 ? 12 : 18);
    for (std::uint32_t k = 0; k <= top; ++k) CHECK(n.hilbert(k) == brute_hilbert(n, k));
  }
}

TEST_CASE("hilbert function is non-decreasing and eventually the polynomial") {
  std::mt19937_64 rng(22);
  for (int r = 0; r < 80; ++r) {
    auto n = random_staircase(rng, 1 + r % 4, 5, 3);
    auto h = hilbert_samuel(n, 2 * n.bound() + 4);
    for (std::size_t k = 1; k < h.values.size(); ++k) CHECK(h.values[k] >= h.values[k - 1]);
    for (std::size_t k = h.stabilization; k < h.values.size(); ++k)
      CHECK(h.polynomial.evaluate(mpq_class(static_cast<long>(k))) == mpq_class(h.values[k]));
    CHECK(h.stabilization <= n.bound());
  }
}

TEST_CASE("compare is a total order") {
  std::mt19937_64 rng(23);
  auto flip = [](Comparison c) {
    return c == Comparison::less ? Comparison::greater : c == Comparison::greater ? Comparison::less : c;
  };
  for (int r = 0; r < 300; ++r) {
    auto a = random_staircase(rng, 3, 4, 2), b = random_staircase(rng, 3, 4, 2), c = random_staircase(rng, 3, 4, 2);
    CHECK(compare(b, a) == flip(compare(a, b)));
    CHECK((compare(a, b) == Comparison::equal) == (a == b));
    if (compare(a, b) != Comparison::greater && compare(b, c) != Comparison::greater)
      CHECK(compare(a, c) != Comparison::greater);
  }
}

TEST_CASE("containment reverses hilbert") {
  std::mt19937_64 rng(24);
  int seen = 0;
  for (int r = 0; r < 400; ++r) {
    auto a = random_staircase(rng, 3, 4, 2), b = random_staircase(rng, 3, 4, 2);
    if (!a.contains(b)) continue;
    ++seen;
    for (std::uint64_t k = 0; k <= 10; ++k) CHECK(a.hilbert(k) <= b.hilbert(k));
  }
  CHECK(seen > 5);
}

TEST_CASE("minimalize is idempotent and order independent") {
  std::mt19937_64 rng(25);
  for (int r = 0; r < 100; ++r) {
    std::vector<ExponentVector> v;
    for (int i = 0; i < 6; ++i) v.push_back(E({static_cast<std::uint32_t>(rng() % 3), static_cast<std::uint32_t>(rng() % 3),
                                               static_cast<std::uint32_t>(rng() % 3)}));
    auto a = S(3, v);
    CHECK(S(3, a.vertices()) == a);
    std::shuffle(v.begin(), v.end(), rng);
    CHECK(S(3, v) == a);
  }
}

TEST_CASE("membership") {
  auto n = S(3, {E({0, 2, 0}), E({0, 1, 1}), E({3, 1, 0}), E({6, 0, 0})});
  CHECK(n.contains(E({0, 3, 1})));
  CHECK_FALSE(n.contains(E({2, 1, 0})));
  CHECK(n.contains_pure_t());
  CHECK_FALSE(S(3, {E({0, 2, 0})}).contains_pure_t());
  CHECK(n.bound() == 9);
}
