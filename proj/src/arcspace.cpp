#include "nashseq/arcspace.hpp"

#include <random>
#include <stdexcept>

#include "nashseq/nash.hpp"

namespace nashseq {

ArcDistance arc_distance(const Arc& a, const Arc& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("arcs of different dimensions");
  if (!(a.field() == b.field())) throw std::domain_error("arcs over different fields");
  ArcDistance d;
  if (a.base_point() != b.base_point()) {
    d.ord = 0;
    d.distinct_base_points = true;
    return d;
  }
  const std::size_t top = std::max(a.order(), b.order());
  for (std::size_t k = 1; k <= top; ++k)
    if (a.coefficient(k) != b.coefficient(k)) {
      d.ord = static_cast<std::uint32_t>(k);
      return d;
    }
  d.up_to_precision = true;
  return d;
}

std::uint32_t min_order_on_ball(const Polynomial& f, const Arc& arc, std::size_t i) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial");
  if (f.num_vars() != arc.dim()) throw std::invalid_argument("arc dimension does not match the polynomial");
  if (!arc.at_origin()) throw std::invalid_argument("arc must start at the origin");
  std::uint32_t total = 0;
  for (const auto& fj : transform_chain(lift_to_tx(f), arc, i)) total += fj.order().value();
  return total;
}

namespace {

FieldElement random_element(Field field, std::mt19937_64& rng) {
  if (field.is_rational()) {
    std::uniform_int_distribution<long> num(-9, 9);
    return FieldElement(field, num(rng));
  }
  std::uniform_int_distribution<std::uint64_t> r(0, field.characteristic() - 1);
  return FieldElement(field, static_cast<long>(r(rng)));
}

std::vector<FieldElement> random_vector(Field field, std::size_t n, std::mt19937_64& rng) {
  std::vector<FieldElement> v;
  for (std::size_t j = 0; j < n; ++j) v.push_back(random_element(field, rng));
  return v;
}

Arc with_tail(const Arc& arc, std::size_t i, const std::vector<FieldElement>& r0, const std::vector<FieldElement>& r1) {
  Arc theta = arc.truncated(i);
  theta = theta.with_coefficient(i + 1, r0);
  return theta.with_coefficient(i + 2, r1);
}

} // namespace

Arc random_ball_point(const Arc& arc, std::size_t i, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto r0 = random_vector(arc.field(), arc.dim(), rng);
  auto r1 = random_vector(arc.field(), arc.dim(), rng);
  return with_tail(arc, i, r0, r1);
}

Order exact_order_along(const Polynomial& f, const Arc& theta) {
  // deg(f o theta) <= deg(f) * order(theta), so this precision is exact.
  std::size_t precision = static_cast<std::size_t>(f.total_degree()) * std::max<std::size_t>(1, theta.order());
  return compose_arc(f, theta, precision).order();
}

std::vector<Order> sample_ball_orders(const Polynomial& f, const Arc& arc, std::size_t i, std::size_t samples,
                                      std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("need at least one sample");
  std::mt19937_64 rng(seed);
  std::vector<Order> out;
  for (std::size_t s = 0; s < samples; ++s) out.push_back(exact_order_along(f, random_ball_point(arc, i, rng())));
  return out;
}

Arc generic_ball_point(const Polynomial& f, const Arc& arc, std::size_t i, std::uint64_t seed) {
  auto chain = transform_chain(lift_to_tx(f), arc, i);
  Polynomial in = chain.back().initial_form();
  std::mt19937_64 rng(seed);
  const Field field = arc.field();
  for (int attempt = 0; attempt < 1000; ++attempt) {
    auto r0 = random_vector(field, arc.dim(), rng);
    auto r1 = random_vector(field, arc.dim(), rng);
    std::vector<FieldElement> point{FieldElement::one(field)};
    point.insert(point.end(), r0.begin(), r0.end());
    if (!in.evaluate(point).is_zero()) return with_tail(arc, i, r0, r1);
  }
  throw Undetermined("no direction off the initial cone was found");
}

} // namespace nashseq
