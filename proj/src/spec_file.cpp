#include "traintrack/spec_file.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace tt {

namespace {

struct Token {
  std::string text;
  std::size_t column = 0;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    tokens.push_back(Token{line.substr(start, i - start), start + 1});
  }
  return tokens;
}

bool is_name(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

std::uint32_t parse_uint(const Token& t, std::size_t line) {
  for (char c : t.text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError(line, t.column, "expected a non-negative integer, got '" +
                                           t.text + "'");
    }
  }
  if (t.text.size() > 9) {
    throw ParseError(line, t.column, "integer '" + t.text + "' is out of range");
  }
  return static_cast<std::uint32_t>(std::stoul(t.text));
}

std::size_t find_name(const std::vector<std::string>& names, const std::string& s) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == s) return i;
  }
  return names.size();
}

enum class Section { None, Graph, Map, Marking, Inverse };

}  // namespace

const GraphMap& AutoSpec::as_graph_map() const {
  if (!graph_map) throw InternalError("spec has no materialized graph map");
  return *graph_map;
}

AutoSpec parse_spec_text(const std::string& text) {
  AutoSpec spec;
  bool mode_seen = false;
  Section section = Section::None;

  // Graph-mode staging.
  std::optional<std::uint32_t> vertices;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> endpoints;
  std::map<std::uint32_t, std::uint32_t> vertex_images;
  std::vector<std::optional<EdgePath>> edge_images;
  std::vector<std::pair<std::string, EdgePath>> marking;

  // Basis-mode staging.
  std::vector<std::optional<Word>> letter_images;

  std::optional<Graph> graph;
  std::size_t last_map_line = 1;

  auto parse_edge_path = [&](const std::vector<Token>& tokens, std::size_t first,
                             std::size_t line) {
    std::vector<OrientedEdge> edges;
    for (std::size_t i = first; i < tokens.size(); ++i) {
      std::string name = tokens[i].text;
      bool reversed = false;
      if (name.size() > 1 && name[0] == '~') {
        reversed = true;
        name = name.substr(1);
      }
      if (name == "1" && tokens.size() - first == 1) break;  // empty path
      const std::size_t idx = find_name(spec.names, name);
      if (idx == spec.names.size()) {
        throw ParseError(line, tokens[i].column, "unknown edge '" + name + "'");
      }
      edges.push_back(forward_of(static_cast<std::uint32_t>(idx)) | (reversed ? 1u : 0u));
    }
    return EdgePath(std::move(edges));
  };

  auto parse_letter_word = [&](const std::vector<Token>& tokens, std::size_t first,
                               std::size_t line) {
    std::vector<Letter> letters;
    for (std::size_t i = first; i < tokens.size(); ++i) {
      std::string name = tokens[i].text;
      bool inv = false;
      if (name.size() > 1 && name.back() == '\'') {
        inv = true;
        name.pop_back();
      }
      if (name == "1" && tokens.size() - first == 1) break;
      const std::size_t idx = find_name(spec.names, name);
      if (idx == spec.names.size()) {
        throw ParseError(line, tokens[i].column, "unknown letter '" + name + "'");
      }
      letters.push_back(Letter{static_cast<std::uint32_t>(idx), inv});
    }
    return Word(std::move(letters));
  };

  std::istringstream stream(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(stream, raw)) {
    ++line_no;
    std::vector<Token> tokens = tokenize(raw);
    if (tokens.empty()) continue;
    const Token& head = tokens[0];

    if (head.text == "[graph]" || head.text == "[map]" || head.text == "[marking]" ||
        head.text == "[inverse]") {
      if (!mode_seen) throw ParseError(line_no, head.column, "'mode = ...' must come first");
      if (head.text == "[graph]") {
        if (spec.mode != AutoSpec::Mode::Graph) {
          throw ParseError(line_no, head.column, "[graph] section requires mode = graph");
        }
        section = Section::Graph;
      } else if (head.text == "[map]") {
        if (spec.mode == AutoSpec::Mode::Graph) {
          if (!vertices) {
            throw ParseError(line_no, head.column, "[map] before [graph] declared vertices");
          }
          if (!graph) {
            graph = Graph(*vertices, endpoints, spec.names);
            edge_images.assign(endpoints.size(), std::nullopt);
          }
        } else {
          if (spec.names.empty()) {
            throw ParseError(line_no, head.column, "[map] before 'letters = ...'");
          }
          letter_images.assign(spec.names.size(), std::nullopt);
        }
        section = Section::Map;
      } else if (head.text == "[marking]") {
        if (spec.mode != AutoSpec::Mode::Graph) {
          throw ParseError(line_no, head.column, "[marking] applies to graph mode only");
        }
        if (!graph) throw ParseError(line_no, head.column, "[marking] before [map]");
        section = Section::Marking;
      } else {
        section = Section::Inverse;
      }
      continue;
    }

    if (!mode_seen) {
      if (head.text == "mode" && tokens.size() == 3 && tokens[1].text == "=") {
        if (tokens[2].text == "basis") {
          spec.mode = AutoSpec::Mode::Basis;
        } else if (tokens[2].text == "graph") {
          spec.mode = AutoSpec::Mode::Graph;
        } else {
          throw ParseError(line_no, tokens[2].column,
                           "mode must be 'basis' or 'graph'");
        }
        mode_seen = true;
        continue;
      }
      throw ParseError(line_no, head.column, "expected 'mode = basis' or 'mode = graph'");
    }

    switch (section) {
      case Section::None: {
        if (head.text == "letters" && spec.mode == AutoSpec::Mode::Basis) {
          if (tokens.size() < 3 || tokens[1].text != "=") {
            throw ParseError(line_no, head.column, "expected 'letters = a b c ...'");
          }
          for (std::size_t i = 2; i < tokens.size(); ++i) {
            if (!is_name(tokens[i].text)) {
              throw ParseError(line_no, tokens[i].column,
                               "invalid letter name '" + tokens[i].text + "'");
            }
            if (find_name(spec.names, tokens[i].text) != spec.names.size()) {
              throw ParseError(line_no, tokens[i].column,
                               "duplicate letter '" + tokens[i].text + "'");
            }
            spec.names.push_back(tokens[i].text);
          }
          continue;
        }
        throw ParseError(line_no, head.column, "statement outside any section");
      }

      case Section::Graph: {
        if (head.text == "vertices") {
          if (tokens.size() != 3 || tokens[1].text != "=") {
            throw ParseError(line_no, head.column, "expected 'vertices = <count>'");
          }
          vertices = parse_uint(tokens[2], line_no);
          continue;
        }
        if (head.text == "edge") {
          if (tokens.size() != 5 || tokens[2].text != "=") {
            throw ParseError(line_no, head.column,
                             "expected 'edge NAME = <source> <target>'");
          }
          if (!is_name(tokens[1].text)) {
            throw ParseError(line_no, tokens[1].column, "invalid edge name");
          }
          if (find_name(spec.names, tokens[1].text) != spec.names.size()) {
            throw ParseError(line_no, tokens[1].column,
                             "duplicate edge '" + tokens[1].text + "'");
          }
          if (!vertices) {
            throw ParseError(line_no, head.column, "declare 'vertices = ...' first");
          }
          const std::uint32_t s = parse_uint(tokens[3], line_no);
          const std::uint32_t t = parse_uint(tokens[4], line_no);
          if (s >= *vertices || t >= *vertices) {
            throw ParseError(line_no, tokens[3].column, "edge endpoint out of range");
          }
          spec.names.push_back(tokens[1].text);
          endpoints.emplace_back(s, t);
          continue;
        }
        throw ParseError(line_no, head.column, "unexpected statement in [graph]");
      }

      case Section::Map: {
        last_map_line = line_no;
        if (spec.mode == AutoSpec::Mode::Graph && head.text == "vertex") {
          if (tokens.size() != 4 || tokens[2].text != "=") {
            throw ParseError(line_no, head.column, "expected 'vertex <v> = <image>'");
          }
          const std::uint32_t v = parse_uint(tokens[1], line_no);
          const std::uint32_t img = parse_uint(tokens[3], line_no);
          if (v >= *vertices || img >= *vertices) {
            throw ParseError(line_no, tokens[1].column, "vertex out of range");
          }
          vertex_images[v] = img;
          continue;
        }
        if (tokens.size() < 2 || tokens[1].text != "=") {
          throw ParseError(line_no, head.column, "expected 'NAME = image ...'");
        }
        const std::size_t idx = find_name(spec.names, head.text);
        if (idx == spec.names.size()) {
          throw ParseError(line_no, head.column, "unknown name '" + head.text + "'");
        }
        if (spec.mode == AutoSpec::Mode::Graph) {
          EdgePath img = parse_edge_path(tokens, 2, line_no);
          if (img.empty()) {
            throw ParseError(line_no, head.column, "edge images must be non-empty");
          }
          if (!is_path(*graph, img)) {
            throw ParseError(line_no, tokens[2].column,
                             "image of " + head.text + " is not a composable path");
          }
          if (!is_reduced(img)) {
            throw ParseError(line_no, tokens[2].column,
                             "image of " + head.text + " is not reduced");
          }
          edge_images[idx] = std::move(img);
        } else {
          Word img = parse_letter_word(tokens, 2, line_no);
          if (img.empty()) {
            throw ParseError(line_no, head.column, "generator images must be non-empty");
          }
          letter_images[idx] = std::move(img);
        }
        continue;
      }

      case Section::Marking: {
        if (tokens.size() < 3 || tokens[1].text != "=") {
          throw ParseError(line_no, head.column, "expected 'name = edge path'");
        }
        marking.emplace_back(head.text, parse_edge_path(tokens, 2, line_no));
        continue;
      }

      case Section::Inverse: {
        if (head.text == "file" && tokens.size() == 3 && tokens[1].text == "=") {
          spec.inverse_ref = tokens[2].text;
          continue;
        }
        throw ParseError(line_no, head.column, "expected 'file = <path>' in [inverse]");
      }
    }
  }

  if (!mode_seen) throw ParseError(1, 1, "empty spec: expected 'mode = ...'");

  try {
    if (spec.mode == AutoSpec::Mode::Basis) {
      if (spec.names.empty()) throw ParseError(1, 1, "no letters declared");
      std::vector<Word> images;
      for (std::size_t i = 0; i < spec.names.size(); ++i) {
        if (letter_images.size() <= i || !letter_images[i]) {
          throw ParseError(last_map_line, 1,
                           "missing image for letter '" + spec.names[i] + "'");
        }
        images.push_back(*letter_images[i]);
      }
      spec.basis = BasisMorphism(spec.names.size(), std::move(images), spec.names);
      spec.graph_map = rose_of(*spec.basis);
    } else {
      if (!graph) throw ParseError(last_map_line, 1, "graph mode requires [map]");
      std::vector<std::uint32_t> vimg(*vertices, 0);
      for (std::uint32_t v = 0; v < *vertices; ++v) {
        auto it = vertex_images.find(v);
        if (it == vertex_images.end()) {
          throw ParseError(last_map_line, 1,
                           "missing image for vertex " + std::to_string(v));
        }
        vimg[v] = it->second;
      }
      std::vector<EdgePath> eimg;
      for (std::size_t i = 0; i < spec.names.size(); ++i) {
        if (!edge_images[i]) {
          throw ParseError(last_map_line, 1,
                           "missing image for edge '" + spec.names[i] + "'");
        }
        eimg.push_back(*edge_images[i]);
      }
      spec.graph_map = GraphMap(*graph, std::move(vimg), std::move(eimg), marking);
    }
  } catch (const MalformedInputError& e) {
    throw ParseError(last_map_line, 1, e.what());
  }
  return spec;
}

AutoSpec parse_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInputError("cannot open spec file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_spec_text(buffer.str());
}

void echo_spec(std::ostream& os, const AutoSpec& spec) {
  if (spec.mode == AutoSpec::Mode::Basis) {
    os << "mode = basis\n";
    os << "letters =";
    for (const auto& n : spec.names) os << ' ' << n;
    os << "\n\n[map]\n";
    for (std::size_t i = 0; i < spec.names.size(); ++i) {
      os << spec.names[i] << " = " << format_word(spec.basis->image(i), spec.names)
         << "\n";
    }
  } else {
    const GraphMap& gm = *spec.graph_map;
    const Graph& g = gm.graph();
    os << "mode = graph\n\n[graph]\n";
    os << "vertices = " << g.vertex_count() << "\n";
    for (std::size_t u = 0; u < g.edge_count(); ++u) {
      const OrientedEdge e = forward_of(static_cast<std::uint32_t>(u));
      os << "edge " << g.edge_name(u) << " = " << g.source(e) << ' ' << g.target(e)
         << "\n";
    }
    os << "\n[map]\n";
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
      os << "vertex " << v << " = " << gm.vertex_image(v) << "\n";
    }
    for (std::size_t u = 0; u < g.edge_count(); ++u) {
      const OrientedEdge e = forward_of(static_cast<std::uint32_t>(u));
      os << g.edge_name(u) << " = " << format_path(g, gm.image(e)) << "\n";
    }
    if (!gm.marking().empty()) {
      os << "\n[marking]\n";
      for (const auto& [name, loop] : gm.marking()) {
        os << name << " = " << format_path(g, loop) << "\n";
      }
    }
  }
  if (spec.inverse_ref) {
    os << "\n[inverse]\nfile = " << *spec.inverse_ref << "\n";
  }
}

}  // namespace tt
