#include "traintrack/graph_map.hpp"

#include <map>
#include <queue>
#include <set>

namespace tt {

GraphMap::GraphMap(Graph graph, std::vector<std::uint32_t> vertex_image,
                   std::vector<EdgePath> forward_edge_images,
                   std::vector<std::pair<std::string, EdgePath>> marking)
    : graph_(std::move(graph)),
      vertex_image_(std::move(vertex_image)),
      marking_(std::move(marking)) {
  if (vertex_image_.size() != graph_.vertex_count()) {
    throw MalformedInputError("vertex image count does not match vertex count");
  }
  for (std::uint32_t v : vertex_image_) {
    if (v >= graph_.vertex_count()) {
      throw MalformedInputError("vertex image out of range");
    }
  }
  if (forward_edge_images.size() != graph_.edge_count()) {
    throw MalformedInputError("edge image count does not match edge count");
  }
  images_.resize(graph_.oriented_edge_count());
  for (std::size_t u = 0; u < forward_edge_images.size(); ++u) {
    const OrientedEdge e = forward_of(static_cast<std::uint32_t>(u));
    EdgePath& img = forward_edge_images[u];
    const std::string where = "image of edge " + graph_.edge_name(u);
    if (img.empty()) throw MalformedInputError(where + " is empty");
    for (OrientedEdge x : img.edges()) {
      if (unoriented(x) >= graph_.edge_count()) {
        throw MalformedInputError(where + " uses an unknown edge");
      }
    }
    if (!is_path(graph_, img)) {
      throw MalformedInputError(where + " is not a composable path");
    }
    if (!is_reduced(img)) {
      throw MalformedInputError(where + " is not reduced");
    }
    if (graph_.source(img[0]) != vertex_image_[graph_.source(e)] ||
        graph_.target(img[img.size() - 1]) != vertex_image_[graph_.target(e)]) {
      throw MalformedInputError(where + " does not match the vertex images");
    }
    images_[reverse_edge(e)] = img.reversed();
    images_[e] = std::move(img);
  }
  for (const auto& [name, loop] : marking_) {
    if (!is_path(graph_, loop) || !is_reduced(loop) || loop.empty() ||
        graph_.source(loop[0]) != graph_.target(loop[loop.size() - 1])) {
      throw MalformedInputError("marking of " + name + " is not a reduced loop");
    }
  }
}

GraphMap rose_of(const BasisMorphism& m) {
  const std::size_t n = m.alphabet_size();
  std::vector<std::pair<std::uint32_t, std::uint32_t>> endpoints(n, {0u, 0u});
  Graph rose(1, std::move(endpoints), m.names());

  std::vector<EdgePath> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<OrientedEdge> path;
    path.reserve(m.image(i).size());
    for (const Letter& l : m.image(i).letters()) {
      path.push_back(forward_of(l.index) | (l.inverse ? 1u : 0u));
    }
    images.push_back(EdgePath(std::move(path)));
  }
  std::vector<std::pair<std::string, EdgePath>> marking;
  for (std::size_t i = 0; i < n; ++i) {
    marking.emplace_back(m.names()[i],
                         EdgePath({forward_of(static_cast<std::uint32_t>(i))}));
  }
  return GraphMap(std::move(rose), {0u}, std::move(images), std::move(marking));
}

OrientedEdge derivative(const GraphMap& gm, OrientedEdge e) {
  return gm.image(e)[0];
}

namespace {

// Steps to degeneracy under the derivative map, or -1 when the orbit
// cycles without degenerating (legal turn).
std::int64_t collapse_steps(const GraphMap& gm, Turn t) {
  std::set<Turn> seen;
  std::pair<OrientedEdge, OrientedEdge> cur{t.first, t.second};
  std::int64_t steps = 0;
  while (true) {
    if (cur.first == cur.second) return steps;
    Turn key = Turn::make(cur.first, cur.second);
    if (!seen.insert(key).second) return -1;
    cur = {derivative(gm, cur.first), derivative(gm, cur.second)};
    ++steps;
  }
}

}  // namespace

TrainTrackReport is_train_track(const GraphMap& gm) {
  const Graph& g = gm.graph();
  TrainTrackReport report;

  std::map<Turn, std::int64_t> verdict;  // collapse steps, -1 if legal
  for (OrientedEdge a = 0; a < g.oriented_edge_count(); ++a) {
    for (OrientedEdge b = a + 1; b < g.oriented_edge_count(); ++b) {
      if (g.source(a) != g.source(b)) continue;
      Turn t = Turn::make(a, b);
      std::int64_t c = collapse_steps(gm, t);
      verdict[t] = c;
      if (c >= 0) report.illegal_turns.push_back(t);
    }
  }

  report.ok = true;
  for (OrientedEdge e = 0; e < g.oriented_edge_count(); ++e) {
    const EdgePath& img = gm.image(e);
    for (std::size_t i = 0; i + 1 < img.size(); ++i) {
      Turn crossed = Turn::make(reverse_edge(img[i]), img[i + 1]);
      std::int64_t c = verdict.at(crossed);
      if (c >= 0) {
        report.ok = false;
        report.offender = TrainTrackReport::Offender{
            e, i, static_cast<std::size_t>(c)};
        return report;
      }
    }
  }
  return report;
}

bool is_irreducible_representative(const GraphMap& gm) {
  const Graph& g = gm.graph();
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    if (g.valence(v) < 3) return false;
  }

  // Transition digraph on unoriented edges: e' -> e iff e occurs in
  // image(e'). Strong connectivity via forward and backward reachability.
  const std::size_t n = g.edge_count();
  std::vector<std::vector<std::uint32_t>> fwd(n), bwd(n);
  for (std::uint32_t u = 0; u < n; ++u) {
    std::set<std::uint32_t> hits;
    for (OrientedEdge x : gm.image(forward_of(u)).edges()) hits.insert(unoriented(x));
    for (std::uint32_t h : hits) {
      fwd[u].push_back(h);
      bwd[h].push_back(u);
    }
  }
  auto reaches_all = [n](const std::vector<std::vector<std::uint32_t>>& adj) {
    std::vector<bool> vis(n, false);
    std::queue<std::uint32_t> q;
    q.push(0);
    vis[0] = true;
    std::size_t count = 1;
    while (!q.empty()) {
      std::uint32_t u = q.front();
      q.pop();
      for (std::uint32_t w : adj[u]) {
        if (!vis[w]) {
          vis[w] = true;
          ++count;
          q.push(w);
        }
      }
    }
    return count == n;
  };
  return reaches_all(fwd) && reaches_all(bwd);
}

}  // namespace tt
