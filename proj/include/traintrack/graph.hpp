#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "traintrack/errors.hpp"

namespace tt {

/// Oriented edge id. Unoriented edge u has orientations 2u (forward) and
/// 2u+1 (reverse); reversal is the fixed-point-free involution id ^ 1.
using OrientedEdge = std::uint32_t;

constexpr OrientedEdge reverse_edge(OrientedEdge e) noexcept { return e ^ 1u; }
constexpr std::uint32_t unoriented(OrientedEdge e) noexcept { return e >> 1; }
constexpr bool is_forward(OrientedEdge e) noexcept { return (e & 1u) == 0; }
constexpr OrientedEdge forward_of(std::uint32_t unoriented_id) noexcept {
  return unoriented_id << 1;
}

/// A finite graph with named unoriented edges and the reversal involution
/// on oriented edges.
class Graph {
 public:
  /// `endpoints[u] = (source, target)` of the forward orientation of edge u.
  Graph(std::uint32_t vertex_count,
        std::vector<std::pair<std::uint32_t, std::uint32_t>> endpoints,
        std::vector<std::string> edge_names);

  std::uint32_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return endpoints_.size(); }
  std::size_t oriented_edge_count() const noexcept { return 2 * endpoints_.size(); }

  std::uint32_t source(OrientedEdge e) const {
    const auto& [s, t] = endpoints_.at(unoriented(e));
    return is_forward(e) ? s : t;
  }
  std::uint32_t target(OrientedEdge e) const { return source(reverse_edge(e)); }

  /// Number of oriented edges starting at v.
  std::uint32_t valence(std::uint32_t v) const;

  const std::string& edge_name(std::uint32_t unoriented_id) const {
    return edge_names_.at(unoriented_id);
  }
  /// "A" for the forward orientation, "~A" for the reverse.
  std::string oriented_name(OrientedEdge e) const;

  /// Unoriented edge index by name, or -1.
  std::int64_t find_edge(const std::string& name) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::uint32_t vertex_count_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> endpoints_;
  std::vector<std::string> edge_names_;
};

/// A sequence of composable oriented edges. Paths used as edge images are
/// additionally required to be reduced (no adjacent pair e, ~e).
class EdgePath {
 public:
  EdgePath() = default;
  explicit EdgePath(std::vector<OrientedEdge> edges) : edges_(std::move(edges)) {}

  const std::vector<OrientedEdge>& edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  OrientedEdge operator[](std::size_t i) const { return edges_[i]; }

  EdgePath reversed() const;

  friend bool operator==(const EdgePath&, const EdgePath&) = default;

 private:
  std::vector<OrientedEdge> edges_;
};

/// Consecutive edges are incident in g.
bool is_path(const Graph& g, const EdgePath& p);

/// No adjacent pair (e, ~e).
bool is_reduced(const EdgePath& p);

std::string format_path(const Graph& g, const EdgePath& p);

}  // namespace tt
