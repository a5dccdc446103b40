#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "traintrack/graph_map.hpp"
#include "traintrack/transition.hpp"

namespace tt {

/// One occurrence of edge `from` inside the image of edge `to`:
/// image(to) = prefix . from . suffix, with `position` the 0-based index
/// of the occurrence inside the image path.
struct PsaEdge {
  OrientedEdge from = 0;
  OrientedEdge to = 0;
  EdgePath prefix;
  EdgePath suffix;
  std::uint32_t position = 0;

  friend bool operator==(const PsaEdge&, const PsaEdge&) = default;
};

/// The prefix-suffix automaton of a train-track map: vertices are oriented
/// edges of the graph, one automaton edge per occurrence of an edge inside
/// an edge image. Edges are ordered by (host edge, position).
///
/// Views: the full oriented automaton; the positive component (sub-automaton
/// on forward orientations, the classical picture for substitutions); and
/// the unoriented quotient, which identifies e with ~e on vertices and each
/// edge with its reversal partner (the partner of an occurrence at position
/// i in image(e') is the occurrence at position |image(e')|-1-i in
/// image(~e') with prefix and suffix swapped and reversed). That pairing is
/// fixed-point-free, so the quotient keeps exactly one representative per
/// pair: the one whose host edge is forward.
class PrefixSuffixAutomaton {
 public:
  enum class Kind { Oriented, PositiveComponent, Unoriented };

  PrefixSuffixAutomaton(Graph graph, Kind kind, std::vector<OrientedEdge> vertices,
                        std::vector<PsaEdge> edges);

  const Graph& graph() const noexcept { return graph_; }
  Kind kind() const noexcept { return kind_; }

  /// Vertices as oriented-edge ids (canonical forward representatives for
  /// the unoriented quotient and the positive component).
  const std::vector<OrientedEdge>& vertices() const noexcept { return vertices_; }
  const std::vector<PsaEdge>& edges() const noexcept { return edges_; }

  /// Indices into edges() with from == v, in global edge order.
  const std::vector<std::uint32_t>& out_edges(OrientedEdge v) const;

  bool has_vertex(OrientedEdge v) const;

 private:
  Graph graph_;
  Kind kind_;
  std::vector<OrientedEdge> vertices_;
  std::vector<PsaEdge> edges_;
  std::vector<std::vector<std::uint32_t>> out_;  // indexed by oriented edge id
};

/// Full oriented automaton. Throws PreconditionError unless gm is a
/// validated train track.
PrefixSuffixAutomaton build_psa(const GraphMap& gm);

/// Sub-automaton on forward orientations (edges whose endpoints are both
/// forward). For a substitution rose this is the classical automaton.
PrefixSuffixAutomaton positive_component(const PrefixSuffixAutomaton& psa);

/// Unoriented quotient (see class docs for the identification rule).
PrefixSuffixAutomaton build_unoriented_psa(const PrefixSuffixAutomaton& psa);

/// A path in the automaton starting at vertex `start`; steps index into
/// the automaton's edge list and compose head-to-tail, so the vertex
/// sequence is start = sigma(0), sigma(1), ..., sigma(length).
struct EPath {
  OrientedEdge start = 0;
  std::vector<std::uint32_t> steps;

  std::size_t length() const noexcept { return steps.size(); }

  OrientedEdge terminal(const PrefixSuffixAutomaton& psa) const;
  OrientedEdge vertex_at(const PrefixSuffixAutomaton& psa, std::size_t n) const;

  friend bool operator==(const EPath&, const EPath&) = default;
};

/// Finite description of an eventually periodic infinite e-path.
struct PreperiodicPath {
  EPath preperiod;
  EPath period;  // non-empty loop based at the preperiod's terminal vertex
};

/// All paths of length exactly n from vertex e, in lexicographic order by
/// successive edge indices. Count equals the e-row sum of A^n for the
/// oriented adjacency count matrix A.
std::vector<EPath> enumerate_paths(const PrefixSuffixAutomaton& psa, OrientedEdge e,
                                   std::size_t n);

/// A[e][e'] = number of automaton edges from e to e' (oriented occurrence
/// counts), indexed by position in psa.vertices().
TransitionMatrix oriented_adjacency(const PrefixSuffixAutomaton& psa);

/// All simple loops (no repeated vertex except start = end) of length
/// <= max_len, listed per starting vertex in deterministic order.
std::vector<std::pair<OrientedEdge, EPath>> loops_up_to(const PrefixSuffixAutomaton& psa,
                                                        std::size_t max_len);

/// Measure of the cylinder named by a finite e-path:
/// mu[terminal edge] / lambda^length.
double cylinder_weight(const PFData& pf, const PrefixSuffixAutomaton& psa,
                       const EPath& sigma);

/// DOT emission with stable node and edge order; labels are "p | s" with
/// empty paths printed as an epsilon.
void write_dot(std::ostream& os, const PrefixSuffixAutomaton& psa);

std::string format_epath(const PrefixSuffixAutomaton& psa, const EPath& p);

}  // namespace tt
