#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "nashseq/exponent.hpp"
#include "nashseq/upoly.hpp"

namespace nashseq {

enum class Comparison { less, equal, greater };

std::string comparison_string(Comparison c);

/// An upward-closed subset N of N^m, N + N^m = N, held by its vertices
/// (the minimal elements) sorted in the ExponentVector order.
class Staircase {
public:
  /// The empty diagram in N^m.
  explicit Staircase(std::size_t m) : m_(m) {}

  static Staircase minimalize(std::size_t m, std::vector<ExponentVector> exponents);
  /// N = N^m, vertex 0.
  static Staircase full(std::size_t m);

  std::size_t dim() const { return m_; }
  const std::vector<ExponentVector>& vertices() const { return vertices_; }
  bool is_empty() const { return vertices_.empty(); }
  bool is_full() const { return vertices_.size() == 1 && vertices_.front().is_zero(); }

  bool contains(const ExponentVector& a) const;
  /// Some (a,0,...,0) lies in N.
  bool contains_pure_t() const;
  /// N1 contains N2 as sets.
  bool contains(const Staircase& other) const;

  /// #{a not in N : |a| <= k}.
  mpz_class hilbert(std::uint64_t k) const;
  /// max |join(S)| over vertex subsets.
  std::uint32_t bound() const;
  /// Inclusion-exclusion coefficients grouped by |join(S)|.
  std::map<std::uint32_t, mpz_class> inclusion_exclusion() const;

  std::string to_string() const;

  friend bool operator==(const Staircase&, const Staircase&) = default;

private:
  std::size_t m_;
  std::vector<ExponentVector> vertices_;
};

/// Lexicographic comparison of the sorted vertex sequences padded with
/// infinity; a longer sequence with a common prefix is smaller.
Comparison compare(const Staircase& a, const Staircase& b);

struct HilbertData {
  std::vector<mpz_class> values;   // H(0..k_max)
  UPoly polynomial;                // Hilbert-Samuel polynomial in k
  std::uint32_t stabilization = 0; // values agree with polynomial from here on
  std::optional<int> dimension;    // nullopt stands for -infinity (H identically 0)
  mpz_class multiplicity;
  bool full_ring = false;          // N empty: the quotient is the whole ring
};

/// k_max defaults to max(bound, 6) when negative.
HilbertData hilbert_samuel(const Staircase& n, long k_max = -1);

mpz_class binomial(long n, unsigned long k);

} // namespace nashseq
