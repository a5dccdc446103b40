#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "traintrack/fractal.hpp"

namespace tt {

/// The positive root in (0, 1) of x^3 - x^2 - 3x + 1 (bisection plus
/// Newton polish; residual below 1e-14).
double solve_alpha();

/// A piecewise translation of [0, 1] with three branches
/// [0, x1), [x1, x2), [x2, 1], each translated by its shift.
struct ItmConfig {
  double x1 = 0.0;
  double x2 = 0.0;
  double shift[3] = {0.0, 0.0, 0.0};

  static ItmConfig validated(double x1, double x2, double s_a, double s_b, double s_c);
};

/// The Boshernitzan-Kornfeld configuration: breakpoints 1-a, 1-a^2 and
/// shifts (a, a^2, a^2 - 1) for a = solve_alpha().
ItmConfig bk_config();

/// One application of T; x must lie in [0, 1].
double itm_apply(const ItmConfig& cfg, double x);

/// T^n([0, 1]) as a closed-interval union, computed by splitting at the
/// branch boundaries, translating, and merging (merge tolerance 1e-12,
/// pieces shorter than 1e-15 dropped). Nested decreasing in n.
IntervalUnion itm_forward_intervals(const ItmConfig& cfg, std::size_t n);

/// Symbols ('a', 'b', 'c') of the branches visited by x, T(x), ...,
/// T^(n-1)(x).
std::string itm_itinerary(const ItmConfig& cfg, double x, std::size_t n);

/// Dimension estimate of the survivor set: origin-constrained least-squares
/// slope of log(piece count of T^n(I)) against -log(mean piece length) over
/// n in [depth/2, depth] (the box-dimension defining form log N = d log(1/s);
/// an affine fit would be polluted by the slowly decaying total length).
/// When the survivor never fragments (all abscissae ~0, e.g. the identity
/// configuration) the estimate delegates to box_counting_dimension on the
/// depth-n survivor union with the default dyadic ladder.
/// Requires depth >= 6.
double itm_dimension_estimate(const ItmConfig& cfg, std::size_t depth);

/// CSV rows "depth,index,lo,hi" for the survivor pieces of every depth
/// 0..n (12 significant digits).
void write_survivor_csv(std::ostream& os, const ItmConfig& cfg, std::size_t n);

/// JSON summary: alpha (for the BK configuration), depth, piece count,
/// total length, dimension estimate.
void write_itm_summary_json(std::ostream& os, const ItmConfig& cfg, std::size_t depth);

}  // namespace tt
