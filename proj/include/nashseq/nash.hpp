#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "nashseq/arc.hpp"
#include "nashseq/polynomial.hpp"
#include "nashseq/staircase.hpp"
#include "nashseq/standard_basis.hpp"

namespace nashseq {

/// Thrown when a result cannot be decided from the available precision.
class Undetermined : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Germ at the origin of K^n given by generators in X_1..X_n.
class GermIdeal {
public:
  /// Throws std::invalid_argument on a missing generator, a nonzero
  /// constant term or a variable-count mismatch.
  GermIdeal(std::size_t n, std::vector<Polynomial> generators);

  std::size_t dim() const { return n_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_hypersurface() const { return gens_.size() == 1; }
  Field field() const { return gens_.front().field(); }

private:
  std::size_t n_;
  std::vector<Polynomial> gens_;
};

struct NashStep {
  std::size_t index = 0;
  /// Generators of I_j in K[t, X_1..X_n]; a standard basis for j >= 1 in the
  /// general case, the strict transform itself for hypersurfaces.
  std::vector<Polynomial> generators;
  std::uint64_t multiplicity = 0;
  HilbertData hilbert;
  Staircase diagram{0};

  bool smooth() const { return multiplicity == 1; }
};

struct NashReport {
  std::size_t n = 0;
  std::vector<NashStep> steps;
  /// First j such that (m, H) is the same at every step from j on.
  std::optional<std::size_t> stabilized_at;
  /// First j such that every step from j on has multiplicity 1.
  std::optional<std::size_t> smooth_from;
  /// Smoothness bound from the Jacobian ideal, if requested and determined.
  std::optional<std::uint32_t> bound_D;

  std::vector<std::uint64_t> multiplicities() const;
};

struct NashOptions {
  /// Largest k for which Hilbert function values are stored; negative picks
  /// max(bound, 6) per step.
  long hilbert_kmax = -1;
  /// Skip basis completion for principal ideals.
  bool hypersurface_fast_path = true;
};

/// Steps 0..steps of the strict-transform chain along the arc; coefficients
/// A_j beyond the arc's order are zero.
NashReport nash_sequences(const GermIdeal& germ, const Arc& arc, std::size_t steps, const NashOptions& opts = {});

/// The strict transforms f_0, ..., f_steps of one polynomial in K[t, X].
std::vector<Polynomial> transform_chain(const Polynomial& f0, const Arc& arc, std::size_t steps);

/// f(X) viewed in K[t, X] with t as variable 0.
Polynomial lift_to_tx(const Polynomial& f);

/// Lexicographic comparison of the N-sequences.
Comparison compare_sequences(const NashReport& a, const NashReport& b);

/// H_b(k) <= H_a(k) for every k.
bool hilbert_dominates(const Staircase& a, const Staircase& b);

struct GenericMultiplicity {
  std::uint32_t m0 = 0;
  std::uint32_t D = 0;
};

/// Partial derivatives d^a f for |a| <= k.
std::vector<Polynomial> partials_up_to(const Polynomial& f, std::uint32_t k);

/// Smallest k with phi^*(J_k) != 0 at the precision, and D = ord phi^*(J_{m0}).
/// Throws Undetermined when every tested composition vanishes.
GenericMultiplicity generic_multiplicity_along_arc(const Polynomial& f, const Arc& arc, std::size_t precision);

/// Generators of I plus every (n-d)-minor of the Jacobian of every (n-d)-tuple
/// of generators.
std::vector<Polynomial> jacobian_ideal(const GermIdeal& germ, std::size_t dimension);

/// ord phi^*(J) for the Jacobian ideal above; std::nullopt when every element
/// composes to zero at the precision (the arc may lie in the singular locus).
std::optional<std::uint32_t> smooth_stabilization_bound(const GermIdeal& germ, const Arc& arc, std::size_t precision,
                                                        std::size_t dimension);

/// ord of phi_j^*(J_{j,k}) along the graph arc (t, phi_j(t)), derivatives
/// taken in all of t, X; std::nullopt for infinity.
Order derivative_ideal_order(const Polynomial& fj, const Arc& arc, std::size_t j, std::uint32_t k,
                             std::size_t precision);

struct DerivativeOrderViolation {
  std::size_t step;
  std::uint32_t k;
  Order lhs;
  Order rhs;
};

/// Checks ord(phi_j^* J_{j,k}) >= 1 + ord(phi_{j+1}^* J_{j+1,k}) for k < m_j
/// along the chain of a hypersurface.
std::vector<DerivativeOrderViolation> check_derivative_order_drop(const Polynomial& f, const Arc& arc, std::size_t steps,
                                            std::size_t precision);

/// phi + s psi, coefficientwise.
Arc arc_line(const Arc& base, const Arc& direction, const FieldElement& s);

struct SemicontinuityCheck {
  std::vector<Staircase> special;              // N-sequence at s = 0
  std::vector<std::vector<Staircase>> samples; // N-sequences at the sample parameters
  bool constant = true;                        // all samples agree
  Comparison generic_vs_special = Comparison::equal;
  bool holds() const { return constant && generic_vs_special != Comparison::greater; }
};

/// N-sequences along the line s -> base + s direction at the given nonzero
/// parameters, compared with the special member s = 0.
SemicontinuityCheck check_semicontinuity(const GermIdeal& germ, const Arc& base, const Arc& direction,
                                         std::size_t steps, const std::vector<FieldElement>& params);

/// The final hypersurface transform has order 1 and a non-pure-t initial exponent.
bool is_principal(const Polynomial& fi);

} // namespace nashseq
