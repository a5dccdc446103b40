#include "traintrack/graph.hpp"

#include <set>
#include <sstream>

namespace tt {

Graph::Graph(std::uint32_t vertex_count,
             std::vector<std::pair<std::uint32_t, std::uint32_t>> endpoints,
             std::vector<std::string> edge_names)
    : vertex_count_(vertex_count),
      endpoints_(std::move(endpoints)),
      edge_names_(std::move(edge_names)) {
  if (edge_names_.size() != endpoints_.size()) {
    throw MalformedInputError("edge name count does not match edge count");
  }
  std::set<std::string> seen;
  for (const auto& n : edge_names_) {
    if (n.empty() || !seen.insert(n).second) {
      throw MalformedInputError("edge names must be unique and non-empty");
    }
  }
  std::vector<std::uint32_t> val(vertex_count_, 0);
  for (const auto& [s, t] : endpoints_) {
    if (s >= vertex_count_ || t >= vertex_count_) {
      throw MalformedInputError("edge endpoint out of range");
    }
    ++val[s];
    ++val[t];
  }
  for (std::uint32_t v = 0; v < vertex_count_; ++v) {
    if (val[v] == 0) {
      throw MalformedInputError("vertex " + std::to_string(v) + " has valence 0");
    }
  }
}

std::uint32_t Graph::valence(std::uint32_t v) const {
  std::uint32_t count = 0;
  for (OrientedEdge e = 0; e < oriented_edge_count(); ++e) {
    if (source(e) == v) ++count;
  }
  return count;
}

std::string Graph::oriented_name(OrientedEdge e) const {
  const std::string& base = edge_names_.at(unoriented(e));
  return is_forward(e) ? base : "~" + base;
}

std::int64_t Graph::find_edge(const std::string& name) const {
  for (std::size_t i = 0; i < edge_names_.size(); ++i) {
    if (edge_names_[i] == name) return static_cast<std::int64_t>(i);
  }
  return -1;
}

EdgePath EdgePath::reversed() const {
  std::vector<OrientedEdge> rev;
  rev.reserve(edges_.size());
  for (auto it = edges_.rbegin(); it != edges_.rend(); ++it) {
    rev.push_back(reverse_edge(*it));
  }
  return EdgePath(std::move(rev));
}

bool is_path(const Graph& g, const EdgePath& p) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (g.target(p[i]) != g.source(p[i + 1])) return false;
  }
  return true;
}

bool is_reduced(const EdgePath& p) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (p[i + 1] == reverse_edge(p[i])) return false;
  }
  return true;
}

std::string format_path(const Graph& g, const EdgePath& p) {
  if (p.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) os << ' ';
    os << g.oriented_name(p[i]);
  }
  return os.str();
}

}  // namespace tt
