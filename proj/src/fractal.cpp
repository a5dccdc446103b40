#include "traintrack/fractal.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "traintrack/format.hpp"
#include "traintrack/graph_map.hpp"

namespace tt {

DimensionReport hausdorff_dimension(const PFData& pf_phi, const PFData& pf_phi_inv) {
  if (!(pf_phi.lambda > 1.0) || !(pf_phi_inv.lambda > 1.0)) {
    throw PreconditionError("expansion factor",
                            "both expansion factors must exceed 1");
  }
  DimensionReport r;
  r.lambda_phi = pf_phi.lambda;
  r.lambda_phi_inv = pf_phi_inv.lambda;
  r.delta = std::log(pf_phi.lambda) / std::log(pf_phi_inv.lambda);
  r.heart_dim = std::max(1.0, r.delta);
  return r;
}

double AddressTree::level_total_weight(std::size_t n) const {
  double total = 0.0;
  for (std::size_t i = level_begin(n); i < level_end(n); ++i) total += nodes[i].weight;
  return total;
}

EPath AddressTree::path_of(std::size_t node_index) const {
  std::vector<std::uint32_t> steps;
  for (std::int64_t i = static_cast<std::int64_t>(node_index); nodes[i].parent >= 0;
       i = nodes[i].parent) {
    steps.push_back(nodes[i].psa_edge);
  }
  std::reverse(steps.begin(), steps.end());
  EPath p;
  p.start = root;
  p.steps = std::move(steps);
  return p;
}

AddressTree build_address_tree(const PrefixSuffixAutomaton& psa, const PFData& pf_phi,
                               const PFData& pf_phi_inv, OrientedEdge e,
                               std::size_t depth) {
  if (!psa.has_vertex(e)) {
    throw PreconditionError("automaton vertex",
                            "address tree root must be an automaton vertex");
  }
  const double ratio = 1.0 / pf_phi_inv.lambda;

  AddressTree tree;
  tree.root = e;
  tree.level_offsets.push_back(0);

  AddressNode root;
  root.terminal = e;
  root.weight = pf_phi.mu.at(unoriented(e));
  tree.nodes.push_back(root);
  tree.level_offsets.push_back(1);

  for (std::size_t level = 1; level <= depth; ++level) {
    const std::size_t begin = tree.level_offsets[level - 1];
    const std::size_t end = tree.level_offsets[level];
    for (std::size_t i = begin; i < end; ++i) {
      const AddressNode parent = tree.nodes[i];
      for (std::uint32_t idx : psa.out_edges(parent.terminal)) {
        AddressNode child;
        child.parent = static_cast<std::int64_t>(i);
        child.psa_edge = idx;
        child.terminal = psa.edges()[idx].to;
        child.depth = static_cast<std::uint32_t>(level);
        child.scale = parent.scale * ratio;
        child.weight = pf_phi.mu.at(unoriented(child.terminal)) /
                       std::pow(pf_phi.lambda, static_cast<double>(level));
        tree.nodes.push_back(child);
      }
    }
    tree.level_offsets.push_back(tree.nodes.size());
  }
  return tree;
}

PointCloud rauzy_points(const BasisMorphism& m, std::size_t base_letter,
                        std::size_t depth) {
  if (!m.is_positive()) {
    throw PreconditionError("positive morphism",
                            "the planar embedding is defined for substitutions only");
  }
  if (depth < 1) throw PreconditionError("depth", "depth must be at least 1");
  if (base_letter >= m.alphabet_size()) {
    throw PreconditionError("base letter", "letter index out of range");
  }

  const GraphMap rose = rose_of(m);
  const TransitionMatrix mat = transition_matrix(rose);
  if (!is_primitive(mat)) {
    throw PreconditionError("primitive", "the abelianization must be primitive");
  }
  TransitionMatrix matT = mat;
  for (std::size_t i = 0; i < mat.order; ++i) {
    for (std::size_t j = 0; j < mat.order; ++j) matT.entries[i][j] = mat.entries[j][i];
  }
  const std::vector<double> r = pf_eigenpair(mat).mu;
  const std::vector<double> l = pf_eigenpair(matT).mu;

  const std::size_t n = m.alphabet_size();
  double lr = 0.0;
  for (std::size_t i = 0; i < n; ++i) lr += l[i] * r[i];

  auto project = [&](const std::vector<double>& v) {
    double lv = 0.0;
    for (std::size_t i = 0; i < n; ++i) lv += l[i] * v[i];
    std::vector<double> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = v[i] - (lv / lr) * r[i];
    return p;
  };

  // Orthonormal basis of the transverse plane from projections of the first
  // coordinate vectors (Gram-Schmidt).
  std::vector<std::vector<double>> basis;
  for (std::size_t i = 0; i < n && basis.size() + 1 < n; ++i) {
    std::vector<double> cand(n, 0.0);
    cand[i] = 1.0;
    cand = project(cand);
    for (const auto& u : basis) {
      double dot = 0.0;
      for (std::size_t k = 0; k < n; ++k) dot += cand[k] * u[k];
      for (std::size_t k = 0; k < n; ++k) cand[k] -= dot * u[k];
    }
    double norm = 0.0;
    for (double x : cand) norm += x * x;
    norm = std::sqrt(norm);
    if (norm < 1e-12) continue;
    for (double& x : cand) x /= norm;
    basis.push_back(std::move(cand));
  }
  if (basis.size() + 1 != n) {
    throw InternalError("rauzy_points: transverse basis construction failed");
  }

  // Word length grows like lambda^depth; refuse clouds past desk scale.
  {
    std::vector<double> len(n, 1.0);
    for (std::size_t k = 0; k < depth; ++k) {
      std::vector<double> next(n, 0.0);
      for (std::size_t col = 0; col < n; ++col) {
        for (std::size_t row = 0; row < n; ++row) {
          next[col] += static_cast<double>(mat.entries[row][col]) * len[row];
        }
      }
      len = std::move(next);
    }
    if (len[base_letter] > 4e6) {
      throw PreconditionError("depth", "point cloud would exceed 4e6 points");
    }
  }

  const Word word = iterate_morphism(
      m, Word::from_letter(Letter{static_cast<std::uint32_t>(base_letter), false}),
      depth);

  PointCloud cloud;
  cloud.dimension = n - 1;
  cloud.base_letter = m.names().at(base_letter);
  cloud.depth = depth;
  cloud.coords.reserve(word.size() * (n - 1));

  std::vector<double> abelian(n, 0.0);
  for (const Letter& letter : word.letters()) {
    const std::vector<double> p = project(abelian);
    for (const auto& u : basis) {
      double coord = 0.0;
      for (std::size_t k = 0; k < n; ++k) coord += p[k] * u[k];
      cloud.coords.push_back(coord);
    }
    abelian[letter.index] += 1.0;
  }
  return cloud;
}

double IntervalUnion::total_length() const {
  double total = 0.0;
  for (const auto& [lo, hi] : parts) total += hi - lo;
  return total;
}

std::vector<double> dyadic_scales(int k_lo, int k_hi) {
  std::vector<double> scales;
  for (int k = k_lo; k <= k_hi; ++k) scales.push_back(std::ldexp(1.0, -k));
  return scales;
}

namespace {

void validate_scales(const std::vector<double>& scales) {
  if (scales.size() < 4) {
    throw PreconditionError("scales", "need at least 4 scales");
  }
  for (std::size_t i = 0; i < scales.size(); ++i) {
    if (!(scales[i] > 0.0) || (i > 0 && !(scales[i] < scales[i - 1]))) {
      throw PreconditionError("scales", "scales must be positive and decreasing");
    }
  }
}

BoxCountFit fit_counts(std::vector<std::pair<double, std::size_t>> counts) {
  BoxCountFit fit;
  fit.counts = std::move(counts);
  std::size_t max_count = 0;
  for (const auto& [eps, n] : fit.counts) max_count = std::max(max_count, n);
  if (max_count <= 1) {
    fit.degenerate = true;
    fit.dimension = 0.0;
    return fit;
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(fit.counts.size());
  for (const auto& [eps, n] : fit.counts) {
    const double x = std::log(1.0 / eps);
    const double y = std::log(static_cast<double>(n));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  fit.dimension = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  return fit;
}

// Histogram-style binning: the cell grid is anchored at the bounding-box
// minimum and the closed top boundary belongs to the last cell.
std::int64_t cell_index(double x, double lo, double hi, double eps) {
  const std::int64_t ncell =
      std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil((hi - lo) / eps - 1e-12)));
  const auto raw = static_cast<std::int64_t>(std::floor((x - lo) / eps));
  return std::clamp<std::int64_t>(raw, 0, ncell - 1);
}

}  // namespace

BoxCountFit box_counting_dimension(const PointCloud& cloud,
                                   const std::vector<double>& scales) {
  validate_scales(scales);
  const std::size_t npts = cloud.size();
  if (npts == 0) throw PreconditionError("data", "empty point cloud");
  const std::size_t dim = cloud.dimension;

  std::vector<double> lo(dim, 0.0), hi(dim, 0.0);
  for (std::size_t a = 0; a < dim; ++a) {
    lo[a] = hi[a] = cloud.coord(0, a);
    for (std::size_t i = 1; i < npts; ++i) {
      lo[a] = std::min(lo[a], cloud.coord(i, a));
      hi[a] = std::max(hi[a], cloud.coord(i, a));
    }
  }

  std::vector<std::pair<double, std::size_t>> counts;
  std::vector<std::vector<std::int64_t>> cells(npts, std::vector<std::int64_t>(dim));
  for (double eps : scales) {
    for (std::size_t i = 0; i < npts; ++i) {
      for (std::size_t a = 0; a < dim; ++a) {
        cells[i][a] = cell_index(cloud.coord(i, a), lo[a], hi[a], eps);
      }
    }
    std::vector<std::vector<std::int64_t>> sorted = cells;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    counts.emplace_back(eps, sorted.size());
  }
  return fit_counts(std::move(counts));
}

BoxCountFit box_counting_dimension(const IntervalUnion& set,
                                   const std::vector<double>& scales) {
  validate_scales(scales);
  if (set.parts.empty()) throw PreconditionError("data", "empty interval union");
  const double lo = set.parts.front().first;

  std::vector<std::pair<double, std::size_t>> counts;
  for (double eps : scales) {
    // Cells [k eps, (k+1) eps) meeting some part in more than a point.
    std::vector<std::pair<std::int64_t, std::int64_t>> ranges;
    for (const auto& [a, b] : set.parts) {
      auto k0 = static_cast<std::int64_t>(std::floor((a - lo) / eps + 1e-12));
      auto k1 = static_cast<std::int64_t>(std::floor((b - lo) / eps - 1e-12));
      if (k1 < k0) k1 = k0;
      ranges.emplace_back(k0, k1);
    }
    std::sort(ranges.begin(), ranges.end());
    std::int64_t total = 0;
    std::int64_t cur_lo = 0, cur_hi = -1;
    bool open = false;
    for (const auto& [k0, k1] : ranges) {
      if (open && k0 <= cur_hi + 1) {
        cur_hi = std::max(cur_hi, k1);
      } else {
        if (open) total += cur_hi - cur_lo + 1;
        cur_lo = k0;
        cur_hi = k1;
        open = true;
      }
    }
    if (open) total += cur_hi - cur_lo + 1;
    counts.emplace_back(eps, static_cast<std::size_t>(total));
  }
  return fit_counts(std::move(counts));
}

void write_point_cloud_csv(std::ostream& os, const PointCloud& cloud) {
  os << "# depth=" << cloud.depth << " base=" << cloud.base_letter << "\n";
  os << "x,y\n";
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    for (std::size_t a = 0; a < cloud.dimension; ++a) {
      if (a > 0) os << ',';
      os << fmt12(cloud.coord(i, a));
    }
    os << '\n';
  }
}

void write_point_cloud_svg(std::ostream& os, const PointCloud& cloud) {
  if (cloud.dimension != 2) {
    throw PreconditionError("dimension", "SVG scatter requires planar clouds");
  }
  const double view = 1000.0, margin = 40.0;
  double xlo = 0, xhi = 0, ylo = 0, yhi = 0;
  if (cloud.size() > 0) {
    xlo = xhi = cloud.coord(0, 0);
    ylo = yhi = cloud.coord(0, 1);
    for (std::size_t i = 1; i < cloud.size(); ++i) {
      xlo = std::min(xlo, cloud.coord(i, 0));
      xhi = std::max(xhi, cloud.coord(i, 0));
      ylo = std::min(ylo, cloud.coord(i, 1));
      yhi = std::max(yhi, cloud.coord(i, 1));
    }
  }
  const double span = std::max({xhi - xlo, yhi - ylo, 1e-9});
  const double scale = (view - 2 * margin) / span;

  char buf[128];
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\">\n";
  os << "<!-- depth=" << cloud.depth << " base=" << cloud.base_letter << " -->\n";
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const double px = margin + (cloud.coord(i, 0) - xlo) * scale;
    const double py = view - margin - (cloud.coord(i, 1) - ylo) * scale;
    std::snprintf(buf, sizeof(buf),
                  "<circle cx=\"%.3f\" cy=\"%.3f\" r=\"1.5\"/>\n", px, py);
    os << buf;
  }
  os << "</svg>\n";
}

void write_dimension_report_json(std::ostream& os, const DimensionReport& report) {
  os << "{\n"
     << "  \"lambdaPhi\": " << fmt12(report.lambda_phi) << ",\n"
     << "  \"lambdaPhiInv\": " << fmt12(report.lambda_phi_inv) << ",\n"
     << "  \"delta\": " << fmt12(report.delta) << ",\n"
     << "  \"heartDim\": " << fmt12(report.heart_dim) << "\n"
     << "}\n";
}

}  // namespace tt
