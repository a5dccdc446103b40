#pragma once

#include <cstdint>
#include <vector>

#include "traintrack/graph_map.hpp"

namespace tt {

/// Non-negative integer matrix indexed by unoriented edges in spec-file
/// order: entry (e, e') counts occurrences of e or ~e in image(e').
struct TransitionMatrix {
  std::size_t order = 0;
  std::vector<std::vector<std::int64_t>> entries;  // entries[row][col]

  std::int64_t at(std::size_t row, std::size_t col) const {
    return entries.at(row).at(col);
  }
  std::int64_t column_sum(std::size_t col) const;

  friend bool operator==(const TransitionMatrix&, const TransitionMatrix&) = default;
};

TransitionMatrix transition_matrix(const GraphMap& gm);

/// Integer matrix product (for occurrence-count identities).
TransitionMatrix multiply(const TransitionMatrix& a, const TransitionMatrix& b);
TransitionMatrix matrix_power(const TransitionMatrix& m, std::size_t n);

/// Exact characteristic polynomial det(xI - M), coefficients in descending
/// degree (leading coefficient 1), by Bareiss fraction-free elimination
/// over Z[x]. Requires order <= 12.
std::vector<std::int64_t> char_poly(const TransitionMatrix& m);

/// Evaluates a descending-coefficient polynomial at x.
double eval_poly(const std::vector<std::int64_t>& coeffs, double x);

/// True iff M^k is entrywise positive for some k <= (order-1)^2 + 1.
bool is_primitive(const TransitionMatrix& m);

/// Certified Perron-Frobenius data from power iteration.
///
/// `lo` and `hi` are the final Collatz-Wielandt bounds
/// [min_i (Mv)_i / v_i, max_i (Mv)_i / v_i]; lambda is their midpoint and
/// mu is the final iterate normalized to max entry 1.
struct PFData {
  double lambda = 0.0;
  std::vector<double> mu;
  double residual = 0.0;  // max_i |(M mu)_i - lambda mu_i|
  double lo = 0.0;
  double hi = 0.0;
  std::size_t iterations = 0;

  double enclosure_width() const { return hi - lo; }
};

/// Power iteration from the all-ones vector until the enclosure width and
/// residual are below `width_target` (default well under the 1e-9 / 1e-10
/// contract bounds). Throws PreconditionError on non-primitive input.
PFData pf_eigenpair(const TransitionMatrix& m, double width_target = 1e-12,
                    std::size_t max_iterations = 2000000);

}  // namespace tt
