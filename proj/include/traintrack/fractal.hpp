#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "traintrack/morphism.hpp"
#include "traintrack/psa.hpp"

namespace tt {

/// Dimension data of the limit set of the repelling tree:
/// delta = ln(lambda_phi) / ln(lambda_phi_inv), heart = max(1, delta).
struct DimensionReport {
  double lambda_phi = 0.0;
  double lambda_phi_inv = 0.0;
  double delta = 0.0;
  double heart_dim = 0.0;
};

/// Throws PreconditionError unless both expansion factors exceed 1.
DimensionReport hausdorff_dimension(const PFData& pf_phi, const PFData& pf_phi_inv);

/// Node of the weighted address tree: an automaton path sigma with
/// scale (1/lambda_phi_inv)^|sigma| and weight mu[terminal]/lambda_phi^|sigma|.
/// Children are the one-edge automaton extensions of sigma.
struct AddressNode {
  std::int64_t parent = -1;   // index into the tree's node vector, -1 at root
  std::uint32_t psa_edge = 0; // edge taken from the parent (unused at root)
  OrientedEdge terminal = 0;  // sigma(|sigma|)
  std::uint32_t depth = 0;
  double scale = 1.0;
  double weight = 0.0;
};

struct AddressTree {
  OrientedEdge root = 0;
  std::vector<AddressNode> nodes;          // breadth-first, deterministic
  std::vector<std::size_t> level_offsets;  // level n spans [offsets[n], offsets[n+1])

  std::size_t level_begin(std::size_t n) const { return level_offsets.at(n); }
  std::size_t level_end(std::size_t n) const { return level_offsets.at(n + 1); }
  std::size_t level_count(std::size_t n) const { return level_end(n) - level_begin(n); }
  double level_total_weight(std::size_t n) const;

  /// Reconstructs the automaton path of a node.
  EPath path_of(std::size_t node_index) const;
};

AddressTree build_address_tree(const PrefixSuffixAutomaton& psa, const PFData& pf_phi,
                               const PFData& pf_phi_inv, OrientedEdge e,
                               std::size_t depth);

/// Planar point cloud (row-major coordinates).
struct PointCloud {
  std::size_t dimension = 2;
  std::vector<double> coords;
  std::string base_letter;
  std::size_t depth = 0;

  std::size_t size() const { return dimension == 0 ? 0 : coords.size() / dimension; }
  double coord(std::size_t point, std::size_t axis) const {
    return coords.at(point * dimension + axis);
  }
};

/// Rauzy-style embedding for a primitive substitution: abelianizes every
/// proper prefix of m^depth(base) and projects along the expanding right
/// eigenvector onto the plane transverse to it (v maps to
/// v - (l.v / l.r) r with l the expanding left eigenvector), expressed in
/// the orthonormal basis obtained from the projected first N-1 coordinate
/// vectors by Gram-Schmidt. Output order is prefix order.
PointCloud rauzy_points(const BasisMorphism& m, std::size_t base_letter,
                        std::size_t depth);

/// Sorted disjoint closed subintervals of [0, 1].
struct IntervalUnion {
  std::vector<std::pair<double, double>> parts;

  std::size_t piece_count() const { return parts.size(); }
  double total_length() const;
};

struct BoxCountFit {
  double dimension = 0.0;
  bool degenerate = false;
  // (scale, occupied cell count) per requested scale.
  std::vector<std::pair<double, std::size_t>> counts;
};

/// Dyadic ladder 2^-k for k = k_lo..k_hi (the default calibration ladder).
std::vector<double> dyadic_scales(int k_lo = 3, int k_hi = 10);

/// Least-squares slope of log N(eps) against log(1/eps) over an anchored
/// grid (anchored at the data bounding-box minimum; the top boundary cell
/// is clamped so a closed right endpoint does not open a new cell).
/// Requires at least 4 strictly decreasing scales. Degenerate data (a
/// single occupied cell at every scale) reports dimension 0 with the flag.
BoxCountFit box_counting_dimension(const PointCloud& cloud,
                                   const std::vector<double>& scales);
BoxCountFit box_counting_dimension(const IntervalUnion& set,
                                   const std::vector<double>& scales);

/// CSV: "# depth=<d> base=<letter>" header then x,y rows (12 significant
/// digits; byte-deterministic).
void write_point_cloud_csv(std::ostream& os, const PointCloud& cloud);

/// SVG scatter with a fixed 1000x1000 viewport computed from the bounding
/// box; byte-deterministic.
void write_point_cloud_svg(std::ostream& os, const PointCloud& cloud);

/// JSON with fields lambdaPhi, lambdaPhiInv, delta, heartDim.
void write_dimension_report_json(std::ostream& os, const DimensionReport& report);

}  // namespace tt
