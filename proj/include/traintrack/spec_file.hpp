#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "traintrack/graph_map.hpp"
#include "traintrack/morphism.hpp"

namespace tt {

/// A parsed automorphism spec file.
///
/// Line-oriented format, '#' comments, two modes:
///
///   mode = basis                     mode = graph
///   letters = a b c                  [graph]
///   [map]                            vertices = 2
///   a = b                            edge A = 0 0
///   b = c a a a                      edge D = 0 1
///   c = c a a                        [map]
///   [inverse]                        vertex 0 = 0
///   file = bk-inv.spec               A = D C
///                                    B = ~D A
///                                    [marking]
///                                    a = A
///
/// Basis mode writes inverse letters with a trailing apostrophe (c'),
/// graph mode writes reversed edges with a leading tilde (~D).
struct AutoSpec {
  enum class Mode { Basis, Graph };

  Mode mode = Mode::Basis;
  std::vector<std::string> names;  // letters (basis) or edge names (graph)

  // Basis mode payload.
  std::optional<BasisMorphism> basis;

  // Graph mode payload (also materialized for basis mode as the rose).
  std::optional<GraphMap> graph_map;

  std::optional<std::string> inverse_ref;  // declared-inverse file reference

  const GraphMap& as_graph_map() const;
};

AutoSpec parse_spec_text(const std::string& text);
AutoSpec parse_spec_file(const std::string& path);

/// Canonical re-emission; parsing the result yields an identical model.
void echo_spec(std::ostream& os, const AutoSpec& spec);

}  // namespace tt
