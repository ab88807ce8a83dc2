#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "nashseq/polynomial.hpp"

namespace nashseq {

struct CensusResult {
  unsigned n = 0, k = 0, level = 0;
  std::uint64_t q = 0;
  std::uint64_t count = 0;
  /// q^{(n+1) level}, the number of tuples in the enumeration space.
  std::uint64_t tuples = 0;
  /// Tuples skipped because a prefix already left the germ.
  std::uint64_t pruned = 0;
  double elapsed_seconds = 0.0;
};

/// X_1^k + ... + X_n^k + Y^{2k} in K[t, X_1..X_n, Y].
Polynomial brieskorn_polynomial(Field field, unsigned n, unsigned k);

/// Counts A^i in F_q^{(n+1)i} whose level-i strict transform of the
/// Brieskorn polynomial has order 1 and a non-pure-t initial exponent.
/// Requires q prime, q != 2, q not dividing k and q^{(n+1)i} <= 10^9.
CensusResult census(unsigned n, unsigned k, unsigned level, std::uint64_t q, unsigned threads = 1);

/// The same count by plain enumeration without prefix reuse or pruning; for testing.
std::uint64_t census_naive(unsigned n, unsigned k, unsigned level, std::uint64_t q);

} // namespace nashseq
