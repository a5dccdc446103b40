#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "traintrack/graph.hpp"
#include "traintrack/morphism.hpp"

namespace tt {

/// An unordered pair of distinct directions (oriented edges) at a common
/// vertex, stored with first < second.
struct Turn {
  OrientedEdge first = 0;
  OrientedEdge second = 0;

  static Turn make(OrientedEdge a, OrientedEdge b) {
    return a < b ? Turn{a, b} : Turn{b, a};
  }
  friend bool operator==(const Turn&, const Turn&) = default;
  friend auto operator<=>(const Turn&, const Turn&) = default;
};

/// A graph self-map: vertices to vertices, oriented edges to non-empty
/// reduced edge paths, compatible with reversal and with the vertex map.
///
/// The optional marking stores, per generator of F_N, a loop class as an
/// edge path; it is descriptive metadata and is not consumed by any
/// computation here.
class GraphMap {
 public:
  GraphMap(Graph graph, std::vector<std::uint32_t> vertex_image,
           std::vector<EdgePath> forward_edge_images,
           std::vector<std::pair<std::string, EdgePath>> marking = {});

  const Graph& graph() const noexcept { return graph_; }
  std::uint32_t vertex_image(std::uint32_t v) const { return vertex_image_.at(v); }

  /// Image of an oriented edge; reverse orientations give reversed paths.
  const EdgePath& image(OrientedEdge e) const { return images_.at(e); }

  const std::vector<std::pair<std::string, EdgePath>>& marking() const noexcept {
    return marking_;
  }

 private:
  Graph graph_;
  std::vector<std::uint32_t> vertex_image_;
  std::vector<EdgePath> images_;  // indexed by oriented edge id
  std::vector<std::pair<std::string, EdgePath>> marking_;
};

/// The rose with one petal per generator; edge images transliterate the
/// morphism's image words, and the marking records generator = petal.
GraphMap rose_of(const BasisMorphism& m);

/// The derivative map on directions: e goes to the first edge of image(e).
OrientedEdge derivative(const GraphMap& gm, OrientedEdge e);

/// Verdict of the train-track check.
///
/// On failure, `offender` names an edge whose image crosses an illegal
/// turn: position i means the turn between image(edge)[i] and
/// image(edge)[i+1], and `collapse_iterate` is the number of derivative
/// steps after which that turn degenerates (so cancellation appears in
/// f^(collapse_iterate+1)(edge)).
struct TrainTrackReport {
  bool ok = false;

  struct Offender {
    OrientedEdge edge = 0;
    std::size_t position = 0;
    std::size_t collapse_iterate = 0;
  };
  std::optional<Offender> offender;

  /// All illegal turns of the map (computed in both outcomes; disjoint
  /// from the crossed turns exactly when ok).
  std::vector<Turn> illegal_turns;
};

/// True iff every turn crossed by an edge image is legal. A turn is
/// illegal iff some iterate of the derivative map degenerates it; the
/// iteration terminates by cycle detection on the finite turn set.
TrainTrackReport is_train_track(const GraphMap& gm);

/// No valence-1 or valence-2 vertices, and the transition digraph on
/// unoriented edges is strongly connected.
bool is_irreducible_representative(const GraphMap& gm);

}  // namespace tt
