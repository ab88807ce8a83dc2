#pragma once

#include <cstdint>
#include <vector>

#include "nashseq/arc.hpp"
#include "nashseq/polynomial.hpp"

namespace nashseq {

/// Distance e^{-ord}. Arcs with distinct base points get ord = 0, which is
/// the sentinel distance 1.
struct ArcDistance {
  Order ord;
  bool distinct_base_points = false;
  /// ord is infinite only in the sense that the stored coefficients agree.
  bool up_to_precision = false;
};

/// Arcs are treated as polynomial arcs: coefficients past the stored order are zero.
ArcDistance arc_distance(const Arc& a, const Arc& b);

/// sum_{j=0}^{i} m_0(f_j) along the strict-transform chain of f.
std::uint32_t min_order_on_ball(const Polynomial& f, const Arc& arc, std::size_t i);

/// theta = phi^i + t^{i+1} (R_0 + R_1 t) with random R_0, R_1.
Arc random_ball_point(const Arc& arc, std::size_t i, std::uint64_t seed);

/// ord(f o theta) for `samples` random points of the ball B_i(phi).
std::vector<Order> sample_ball_orders(const Polynomial& f, const Arc& arc, std::size_t i, std::size_t samples,
                                      std::uint64_t seed);

/// A ball point whose leading tail R_0 avoids the zeros of In(f_i)(1, X);
/// throws Undetermined if none is found after a fixed number of draws.
Arc generic_ball_point(const Polynomial& f, const Arc& arc, std::size_t i, std::uint64_t seed);

/// Exact ord(f o theta) for a polynomial arc theta.
Order exact_order_along(const Polynomial& f, const Arc& theta);

} // namespace nashseq
