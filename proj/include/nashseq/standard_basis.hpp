#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nashseq/polynomial.hpp"
#include "nashseq/staircase.hpp"

namespace nashseq {

struct StandardBasis {
  std::size_t num_vars = 0;
  std::vector<Polynomial> generators;
  Staircase diagram{0};
  bool distinguished = false;
  /// Degree up to which tails were reduced, when distinguished.
  std::optional<std::uint32_t> degree_bound;

  bool is_unit() const { return diagram.is_full(); }
};

/// ecart(f) = deg(f) - |nu(f)|.
std::uint32_t ecart(const Polynomial& f);

/// Mora's weak normal form: u*f - r lies in (G) for a unit u and nu(r) is
/// divisible by no nu(g), or r = 0.
Polynomial weak_normal_form(const Polynomial& f, const std::vector<Polynomial>& G);

/// Weak normal form followed by elimination of every remaining term of degree
/// <= degree_bound lying in the monomial ideal of the initial exponents of G.
/// degree_bound defaults to the largest total degree among f and G.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       std::optional<std::uint32_t> degree_bound = std::nullopt);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Standard basis for the local degree order; zero generators are dropped.
/// A unit in the ideal gives the basis {1}. Generators all share num_vars.
StandardBasis standard_basis(const std::vector<Polynomial>& generators, std::size_t num_vars);

/// Monic generators with tails reduced off the diagram up to degree_bound.
StandardBasis distinguished_basis(const StandardBasis& basis, std::uint32_t degree_bound);

/// dim K[[X]] / (I + M^{k+1}) by exact linear algebra on truncated multiples.
mpz_class hilbert_samuel_direct(const std::vector<Polynomial>& generators, std::size_t num_vars, std::uint32_t k);

/// Rank of a list of polynomials viewed as vectors over monomials.
std::size_t polynomial_rank(std::vector<Polynomial> rows);

/// Strict transforms of the basis elements along one chart with direction A.
std::vector<Polynomial> strict_transform_ideal(const StandardBasis& basis, std::span<const FieldElement> direction);

} // namespace nashseq
