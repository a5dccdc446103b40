#include "traintrack/lamination.hpp"

#include <algorithm>
#include <map>

namespace tt {

LeafSegment iterate_edge(const GraphMap& gm, OrientedEdge e, std::size_t n,
                         std::size_t max_length) {
  const Graph& g = gm.graph();
  if (unoriented(e) >= g.edge_count()) {
    throw MalformedInputError("iterate_edge: unknown edge");
  }

  // Predict |f^n(e)| in floating point before expanding anything.
  {
    const TransitionMatrix m = transition_matrix(gm);
    std::vector<double> len(m.order, 1.0);
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<double> next(m.order, 0.0);
      for (std::size_t col = 0; col < m.order; ++col) {
        for (std::size_t row = 0; row < m.order; ++row) {
          next[col] += static_cast<double>(m.entries[row][col]) * len[row];
        }
      }
      len = std::move(next);
      if (len[unoriented(e)] > static_cast<double>(max_length)) {
        throw PreconditionError(
            "depth", "f^" + std::to_string(n) + "(" + g.oriented_name(e) +
                         ") exceeds the segment length cap of " +
                         std::to_string(max_length));
      }
    }
  }

  std::vector<OrientedEdge> cur{e};
  for (std::size_t step = 0; step < n; ++step) {
    std::vector<OrientedEdge> next;
    for (OrientedEdge x : cur) {
      const EdgePath& img = gm.image(x);
      if (!next.empty() && img[0] == reverse_edge(next.back())) {
        throw InternalError("iterate_edge: cancellation at iterate " +
                            std::to_string(step + 1) +
                            "; the map is not a train track");
      }
      next.insert(next.end(), img.edges().begin(), img.edges().end());
    }
    cur = std::move(next);
  }

  LeafSegment seg;
  seg.base = e;
  seg.depth = n;
  seg.occurrences.assign(g.oriented_edge_count(), {});
  for (std::size_t i = 0; i < cur.size(); ++i) {
    seg.occurrences[cur[i]].push_back(i);
  }
  seg.path = EdgePath(std::move(cur));
  return seg;
}

namespace {

// |f^k(edge)| for k = 0..n, per unoriented edge (column sums of M^k).
std::vector<std::vector<std::int64_t>> iterate_lengths(const GraphMap& gm, std::size_t n) {
  const TransitionMatrix m = transition_matrix(gm);
  std::vector<std::vector<std::int64_t>> lengths;
  TransitionMatrix p = matrix_power(m, 0);
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<std::int64_t> col(m.order);
    for (std::size_t u = 0; u < m.order; ++u) col[u] = p.column_sum(u);
    lengths.push_back(std::move(col));
    if (k < n) p = multiply(m, p);
  }
  return lengths;
}

std::int64_t path_length_under(const std::vector<std::int64_t>& lengths_k,
                               const EdgePath& p) {
  std::int64_t total = 0;
  for (OrientedEdge x : p.edges()) total += lengths_k[unoriented(x)];
  return total;
}

}  // namespace

std::vector<OccurrenceCylinder> decompose_occurrences(const GraphMap& gm, OrientedEdge e,
                                                      std::size_t n) {
  if (n == 0) {
    throw PreconditionError("decomposition depth", "n must be at least 1");
  }
  const PrefixSuffixAutomaton psa = build_psa(gm);
  const auto lengths = iterate_lengths(gm, n);

  // Forward direction: each e-path of length n names one occurrence, at the
  // position given by its accumulated iterated prefix lengths.
  std::vector<OccurrenceCylinder> result;
  for (EPath& sigma : enumerate_paths(psa, e, n)) {
    std::int64_t position = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const PsaEdge& step = psa.edges()[sigma.steps[k]];
      position += path_length_under(lengths[k], step.prefix);
    }
    OccurrenceCylinder occ;
    occ.host = sigma.terminal(psa);
    occ.position = static_cast<std::size_t>(position);
    occ.sigma = std::move(sigma);
    result.push_back(std::move(occ));
  }

  // Injectivity: distinct paths name distinct (host, position) pairs.
  std::map<std::pair<OrientedEdge, std::size_t>, std::size_t> seen;
  for (std::size_t i = 0; i < result.size(); ++i) {
    auto key = std::make_pair(result[i].host, result[i].position);
    if (!seen.emplace(key, i).second) {
      throw InternalError("decompose_occurrences: two paths name one occurrence");
    }
  }

  // Surjectivity: every scanned occurrence of e in the iterated images is
  // named, and nothing else is.
  std::size_t scanned = 0;
  for (OrientedEdge host = 0; host < gm.graph().oriented_edge_count(); ++host) {
    const LeafSegment seg = iterate_edge(gm, host, n);
    for (std::size_t pos : seg.positions_of(e)) {
      ++scanned;
      auto it = seen.find({host, pos});
      if (it == seen.end()) {
        throw InternalError("decompose_occurrences: unnamed occurrence of " +
                            gm.graph().oriented_name(e) + " in f^" + std::to_string(n) +
                            "(" + gm.graph().oriented_name(host) + ") at " +
                            std::to_string(pos));
      }
    }
  }
  if (scanned != result.size()) {
    throw InternalError("decompose_occurrences: path count differs from occurrences");
  }
  return result;
}

LoopRealization verify_loop_realization(const GraphMap& gm,
                                        const PrefixSuffixAutomaton& psa,
                                        const EPath& loop, std::size_t repeats) {
  const std::size_t n = loop.length();
  if (n == 0) throw PreconditionError("loop", "loop must be non-empty");
  if (loop.terminal(psa) != loop.start) {
    throw PreconditionError("loop", "path does not return to its start vertex");
  }

  LoopRealization cert;
  cert.base = loop.start;
  cert.loop_length = n;

  const auto lengths = iterate_lengths(gm, n * repeats);
  for (std::size_t k = 1; k <= repeats; ++k) {
    std::int64_t position = 0;
    for (std::size_t j = 0; j < k * n; ++j) {
      const PsaEdge& step = psa.edges()[loop.steps[j % n]];
      position += path_length_under(lengths[j], step.prefix);
    }
    const LeafSegment seg = iterate_edge(gm, loop.start, k * n);
    const auto pos = static_cast<std::size_t>(position);
    if (pos >= seg.path.size() || seg.path[pos] != loop.start) {
      throw InternalError("loop realization: expected " +
                          gm.graph().oriented_name(loop.start) + " at position " +
                          std::to_string(pos) + " of f^" + std::to_string(k * n) + "(" +
                          gm.graph().oriented_name(loop.start) + ")");
    }
    cert.nested.emplace_back(k, pos);
  }
  return cert;
}

}  // namespace tt
