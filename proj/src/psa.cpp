#include "traintrack/psa.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace tt {

PrefixSuffixAutomaton::PrefixSuffixAutomaton(Graph graph, Kind kind,
                                             std::vector<OrientedEdge> vertices,
                                             std::vector<PsaEdge> edges)
    : graph_(std::move(graph)),
      kind_(kind),
      vertices_(std::move(vertices)),
      edges_(std::move(edges)) {
  out_.assign(graph_.oriented_edge_count(), {});
  for (std::uint32_t i = 0; i < edges_.size(); ++i) {
    out_[edges_[i].from].push_back(i);
  }
}

const std::vector<std::uint32_t>& PrefixSuffixAutomaton::out_edges(OrientedEdge v) const {
  return out_.at(v);
}

bool PrefixSuffixAutomaton::has_vertex(OrientedEdge v) const {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

PrefixSuffixAutomaton build_psa(const GraphMap& gm) {
  TrainTrackReport tt_report = is_train_track(gm);
  if (!tt_report.ok) {
    throw PreconditionError("train-track",
                            "prefix-suffix automaton requires a train-track map");
  }
  const Graph& g = gm.graph();
  std::vector<OrientedEdge> vertices(g.oriented_edge_count());
  for (OrientedEdge e = 0; e < vertices.size(); ++e) vertices[e] = e;

  std::vector<PsaEdge> edges;
  for (OrientedEdge host = 0; host < g.oriented_edge_count(); ++host) {
    const EdgePath& img = gm.image(host);
    for (std::uint32_t pos = 0; pos < img.size(); ++pos) {
      PsaEdge e;
      e.from = img[pos];
      e.to = host;
      e.position = pos;
      e.prefix = EdgePath(std::vector<OrientedEdge>(img.edges().begin(),
                                                    img.edges().begin() + pos));
      e.suffix = EdgePath(std::vector<OrientedEdge>(img.edges().begin() + pos + 1,
                                                    img.edges().end()));
      edges.push_back(std::move(e));
    }
  }
  return PrefixSuffixAutomaton(g, PrefixSuffixAutomaton::Kind::Oriented,
                               std::move(vertices), std::move(edges));
}

PrefixSuffixAutomaton positive_component(const PrefixSuffixAutomaton& psa) {
  if (psa.kind() != PrefixSuffixAutomaton::Kind::Oriented) {
    throw PreconditionError("oriented automaton",
                            "positive component is cut from the full automaton");
  }
  std::vector<OrientedEdge> vertices;
  for (OrientedEdge v : psa.vertices()) {
    if (is_forward(v)) vertices.push_back(v);
  }
  std::vector<PsaEdge> edges;
  for (const PsaEdge& e : psa.edges()) {
    if (is_forward(e.from) && is_forward(e.to)) edges.push_back(e);
  }
  return PrefixSuffixAutomaton(psa.graph(), PrefixSuffixAutomaton::Kind::PositiveComponent,
                               std::move(vertices), std::move(edges));
}

PrefixSuffixAutomaton build_unoriented_psa(const PrefixSuffixAutomaton& psa) {
  if (psa.kind() != PrefixSuffixAutomaton::Kind::Oriented) {
    throw PreconditionError("oriented automaton",
                            "the unoriented quotient is cut from the full automaton");
  }
  // Each reversal pair of automaton edges has exactly one member whose host
  // is forward; keep that representative and project sources to forward ids.
  std::vector<OrientedEdge> vertices;
  for (OrientedEdge v : psa.vertices()) {
    if (is_forward(v)) vertices.push_back(v);
  }
  std::vector<PsaEdge> edges;
  for (const PsaEdge& e : psa.edges()) {
    if (!is_forward(e.to)) continue;
    PsaEdge q = e;
    q.from = forward_of(unoriented(e.from));
    edges.push_back(std::move(q));
  }
  return PrefixSuffixAutomaton(psa.graph(), PrefixSuffixAutomaton::Kind::Unoriented,
                               std::move(vertices), std::move(edges));
}

OrientedEdge EPath::terminal(const PrefixSuffixAutomaton& psa) const {
  return steps.empty() ? start : psa.edges().at(steps.back()).to;
}

OrientedEdge EPath::vertex_at(const PrefixSuffixAutomaton& psa, std::size_t n) const {
  if (n == 0) return start;
  return psa.edges().at(steps.at(n - 1)).to;
}

std::vector<EPath> enumerate_paths(const PrefixSuffixAutomaton& psa, OrientedEdge e,
                                   std::size_t n) {
  if (!psa.has_vertex(e)) {
    throw PreconditionError("automaton vertex", "edge " + psa.graph().oriented_name(e) +
                                                    " is not a vertex of this view");
  }
  std::vector<EPath> result;
  EPath cur;
  cur.start = e;
  auto rec = [&](auto&& self, OrientedEdge at, std::size_t remaining) -> void {
    if (remaining == 0) {
      result.push_back(cur);
      return;
    }
    for (std::uint32_t idx : psa.out_edges(at)) {
      cur.steps.push_back(idx);
      self(self, psa.edges()[idx].to, remaining - 1);
      cur.steps.pop_back();
    }
  };
  rec(rec, e, n);
  return result;
}

TransitionMatrix oriented_adjacency(const PrefixSuffixAutomaton& psa) {
  const auto& verts = psa.vertices();
  std::vector<std::int64_t> index(psa.graph().oriented_edge_count(), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = static_cast<std::int64_t>(i);

  TransitionMatrix a;
  a.order = verts.size();
  a.entries.assign(a.order, std::vector<std::int64_t>(a.order, 0));
  for (const PsaEdge& e : psa.edges()) {
    ++a.entries[static_cast<std::size_t>(index[e.from])]
               [static_cast<std::size_t>(index[e.to])];
  }
  return a;
}

std::vector<std::pair<OrientedEdge, EPath>> loops_up_to(const PrefixSuffixAutomaton& psa,
                                                        std::size_t max_len) {
  if (max_len == 0) {
    throw PreconditionError("loop length", "max_len must be at least 1");
  }
  std::vector<std::pair<OrientedEdge, EPath>> result;
  for (OrientedEdge s : psa.vertices()) {
    EPath cur;
    cur.start = s;
    std::vector<OrientedEdge> visited{s};
    auto rec = [&](auto&& self, OrientedEdge at) -> void {
      for (std::uint32_t idx : psa.out_edges(at)) {
        const OrientedEdge next = psa.edges()[idx].to;
        if (next == s) {
          cur.steps.push_back(idx);
          result.emplace_back(s, cur);
          cur.steps.pop_back();
          continue;
        }
        if (cur.steps.size() + 1 >= max_len) continue;
        if (std::find(visited.begin(), visited.end(), next) != visited.end()) continue;
        cur.steps.push_back(idx);
        visited.push_back(next);
        self(self, next);
        visited.pop_back();
        cur.steps.pop_back();
      }
    };
    rec(rec, s);
  }
  return result;
}

double cylinder_weight(const PFData& pf, const PrefixSuffixAutomaton& psa,
                       const EPath& sigma) {
  const OrientedEdge end = sigma.terminal(psa);
  double w = pf.mu.at(unoriented(end));
  for (std::size_t i = 0; i < sigma.length(); ++i) w /= pf.lambda;
  return w;
}

namespace {

std::string label_path(const Graph& g, const EdgePath& p) {
  return p.empty() ? "\xce\xb5" : format_path(g, p);  // epsilon for the empty path
}

}  // namespace

void write_dot(std::ostream& os, const PrefixSuffixAutomaton& psa) {
  const Graph& g = psa.graph();
  os << "digraph psa {\n";
  for (OrientedEdge v : psa.vertices()) {
    os << "  \"" << g.oriented_name(v) << "\";\n";
  }
  for (const PsaEdge& e : psa.edges()) {
    os << "  \"" << g.oriented_name(e.from) << "\" -> \"" << g.oriented_name(e.to)
       << "\" [label=\"" << label_path(g, e.prefix) << " | " << label_path(g, e.suffix)
       << "\"];\n";
  }
  os << "}\n";
}

std::string format_epath(const PrefixSuffixAutomaton& psa, const EPath& p) {
  const Graph& g = psa.graph();
  std::ostringstream os;
  os << g.oriented_name(p.start);
  for (std::uint32_t idx : p.steps) {
    const PsaEdge& e = psa.edges().at(idx);
    os << " -(" << label_path(g, e.prefix) << " | " << label_path(g, e.suffix) << ")-> "
       << g.oriented_name(e.to);
  }
  return os.str();
}

}  // namespace tt
