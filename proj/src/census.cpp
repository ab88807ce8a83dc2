#include "nashseq/census.hpp"

#include <chrono>
#include <stdexcept>
#include <thread>

#include "nashseq/arc.hpp"
#include "nashseq/nash.hpp"

namespace nashseq {

Polynomial brieskorn_polynomial(Field field, unsigned n, unsigned k) {
  const std::size_t m = n + 2;
  Polynomial f(field, m);
  for (unsigned j = 1; j <= n; ++j) {
    ExponentVector e(m);
    e.set(j, k);
    f.add_term(e, FieldElement::one(field));
  }
  ExponentVector y(m);
  y.set(n + 1, 2 * k);
  f.add_term(y, FieldElement::one(field));
  return f;
}

namespace {

std::uint64_t checked_tuples(unsigned n, unsigned k, unsigned level, std::uint64_t q) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (level < 1) throw std::invalid_argument("level must be at least 1");
  if (!is_prime(q)) throw std::invalid_argument("census needs a prime q");
  if (q == 2) throw std::invalid_argument("census excludes characteristic 2");
  if (k % q == 0) throw std::invalid_argument("census needs q not dividing k");
  std::uint64_t total = 1;
  for (unsigned j = 0; j < (n + 1) * level; ++j) {
    total *= q;
    if (total > 1000000000ULL) throw std::invalid_argument("census enumeration exceeds 10^9 tuples");
  }
  return total;
}

// The tuple with mixed-radix index idx in F_q^{n+1}.
std::vector<FieldElement> tuple_at(Field field, std::size_t len, std::uint64_t idx) {
  std::vector<FieldElement> a;
  const std::uint64_t q = field.characteristic();
  for (std::size_t j = 0; j < len; ++j) {
    a.emplace_back(field, static_cast<long>(idx % q));
    idx /= q;
  }
  return a;
}

struct Walker {
  Field field;
  unsigned n;
  unsigned level;
  std::uint64_t per_level; // q^{n+1}
  std::vector<std::uint64_t> subtree; // subtree[j] = per_level^{level - j}
  std::uint64_t count = 0;
  std::uint64_t pruned = 0;

  void descend(const Polynomial& f, unsigned j) {
    // f is f_{j-1}; enumerate A_j.
    for (std::uint64_t idx = 0; idx < per_level; ++idx) visit(f, j, tuple_at(field, n + 1, idx));
  }

  void visit(const Polynomial& f, unsigned j, const std::vector<FieldElement>& a) {
    const std::uint32_t m = f.order().value();
    if (j == level) {
      // Only the part of degree <= 1 of f_i matters, which comes from terms of degree <= m + 1.
      if (is_principal(strict_transform(f.truncated(m + 1), a))) ++count;
      return;
    }
    Polynomial g = strict_transform(f, a);
    const std::uint32_t mg = g.order().value();
    if (mg == 0) {
      // Orders never increase, so no extension comes back to the germ.
      pruned += subtree[j];
      return;
    }
    // f_level up to degree 1 needs g up to degree mg (level - j) + 1.
    descend(g.truncated(mg * (level - j) + 1), j + 1);
  }
};

} // namespace

CensusResult census(unsigned n, unsigned k, unsigned level, std::uint64_t q, unsigned threads) {
  auto start = std::chrono::steady_clock::now();
  CensusResult r;
  r.n = n;
  r.k = k;
  r.level = level;
  r.q = q;
  r.tuples = checked_tuples(n, k, level, q);
  const Field field = Field::prime(q);
  const Polynomial f = brieskorn_polynomial(field, n, k);

  std::uint64_t per_level = 1;
  for (unsigned j = 0; j <= n; ++j) per_level *= q;
  std::vector<std::uint64_t> subtree(level + 1, 1);
  for (unsigned j = level; j-- > 0;) subtree[j] = subtree[j + 1] * per_level;

  if (threads == 0) threads = 1;
  std::vector<Walker> walkers(threads, Walker{field, n, level, per_level, subtree});
  auto work = [&](unsigned w) {
    for (std::uint64_t idx = w; idx < per_level; idx += threads) walkers[w].visit(f, 1, tuple_at(field, n + 1, idx));
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& w : walkers) {
    r.count += w.count;
    r.pruned += w.pruned;
  }
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::uint64_t census_naive(unsigned n, unsigned k, unsigned level, std::uint64_t q) {
  const std::uint64_t total = checked_tuples(n, k, level, q);
  const Field field = Field::prime(q);
  const Polynomial f = brieskorn_polynomial(field, n, k);
  const std::size_t dim = n + 1;
  std::uint64_t count = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    auto flat = tuple_at(field, dim * level, idx);
    std::vector<std::vector<FieldElement>> coeffs;
    for (unsigned j = 0; j < level; ++j)
      coeffs.emplace_back(flat.begin() + j * dim, flat.begin() + (j + 1) * dim);
    Arc arc(field, dim, coeffs);
    if (is_principal(transform_chain(f, arc, level).back())) ++count;
  }
  return count;
}

} // namespace nashseq
