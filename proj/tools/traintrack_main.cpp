#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "traintrack/format.hpp"
#include "traintrack/fractal.hpp"
#include "traintrack/itm.hpp"
#include "traintrack/lamination.hpp"
#include "traintrack/psa.hpp"
#include "traintrack/spec_file.hpp"

namespace {

using namespace tt;

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw MalformedInputError("cannot open output file '" + path + "'");
  return out;
}

void write_eigen_csv(std::ostream& os, const Graph& g, const TransitionMatrix& m,
                     const PFData& pf) {
  os << "edge";
  for (std::size_t j = 0; j < m.order; ++j) os << ',' << g.edge_name(j);
  os << '\n';
  for (std::size_t i = 0; i < m.order; ++i) {
    os << g.edge_name(i);
    for (std::size_t j = 0; j < m.order; ++j) os << ',' << m.entries[i][j];
    os << '\n';
  }
  os << "lambda," << fmt12(pf.lambda) << '\n';
  os << "mu";
  for (double x : pf.mu) os << ',' << fmt12(x);
  os << '\n';
  os << "enclosure," << fmt12(pf.lo) << ',' << fmt12(pf.hi) << '\n';
  os << "residual," << fmt12(pf.residual) << '\n';
}

void write_eigen_json(std::ostream& os, const Graph& g, const TransitionMatrix& m,
                      const PFData& pf) {
  os << "{\n  \"edges\": [";
  for (std::size_t i = 0; i < m.order; ++i) {
    os << (i ? ", " : "") << '"' << g.edge_name(i) << '"';
  }
  os << "],\n  \"matrix\": [";
  for (std::size_t i = 0; i < m.order; ++i) {
    os << (i ? ", " : "") << '[';
    for (std::size_t j = 0; j < m.order; ++j) {
      os << (j ? ", " : "") << m.entries[i][j];
    }
    os << ']';
  }
  os << "],\n  \"charPoly\": [";
  const auto cp = char_poly(m);
  for (std::size_t i = 0; i < cp.size(); ++i) os << (i ? ", " : "") << cp[i];
  os << "],\n  \"lambda\": " << fmt12(pf.lambda) << ",\n  \"enclosure\": ["
     << fmt12(pf.lo) << ", " << fmt12(pf.hi) << "],\n  \"residual\": "
     << fmt12(pf.residual) << ",\n  \"iterations\": " << pf.iterations
     << ",\n  \"mu\": [";
  for (std::size_t i = 0; i < pf.mu.size(); ++i) {
    os << (i ? ", " : "") << fmt12(pf.mu[i]);
  }
  os << "]\n}\n";
}

// Exits 2 via PreconditionError when a named validation check fails.
void require_valid_representative(const AutoSpec& spec, const std::string& label) {
  const GraphMap& gm = spec.as_graph_map();
  const TrainTrackReport report = is_train_track(gm);
  if (!report.ok) {
    const auto& off = *report.offender;
    throw PreconditionError(
        "train-track",
        label + ": image of " + gm.graph().oriented_name(off.edge) +
            " crosses an illegal turn at position " + std::to_string(off.position) +
            "; cancellation appears in f^" + std::to_string(off.collapse_iterate + 1) +
            "(" + gm.graph().oriented_name(off.edge) + ")");
  }
  if (!is_irreducible_representative(gm)) {
    throw PreconditionError("irreducible", label + ": representative is reducible");
  }
}

OrientedEdge parse_oriented_name(const Graph& g, std::string name) {
  bool reversed = false;
  if (!name.empty() && name[0] == '~') {
    reversed = true;
    name = name.substr(1);
  }
  const std::int64_t idx = g.find_edge(name);
  if (idx < 0) throw MalformedInputError("unknown edge '" + name + "'");
  return forward_of(static_cast<std::uint32_t>(idx)) | (reversed ? 1u : 0u);
}

int cmd_validate(const std::string& path, bool echo) {
  const AutoSpec spec = parse_spec_file(path);
  if (echo) {
    echo_spec(std::cout, spec);
    return 0;
  }
  const GraphMap& gm = spec.as_graph_map();
  std::cout << "spec: " << path << " ("
            << (spec.mode == AutoSpec::Mode::Basis ? "basis" : "graph") << " mode, "
            << gm.graph().edge_count() << " edges)\n";

  const TrainTrackReport report = is_train_track(gm);
  if (report.ok) {
    std::cout << "train-track: PASS (" << report.illegal_turns.size()
              << " illegal turns, none crossed)\n";
  } else {
    const auto& off = *report.offender;
    std::cout << "train-track: FAIL — image of " << gm.graph().oriented_name(off.edge)
              << " crosses an illegal turn at position " << off.position
              << "; cancellation in f^" << (off.collapse_iterate + 1) << "("
              << gm.graph().oriented_name(off.edge) << ")\n";
  }
  const bool irreducible = is_irreducible_representative(gm);
  std::cout << "irreducible: " << (irreducible ? "PASS" : "FAIL") << "\n";
  return (report.ok && irreducible) ? 0 : 2;
}

int cmd_eigen(const std::string& path, const std::string& csv_path) {
  const AutoSpec spec = parse_spec_file(path);
  require_valid_representative(spec, path);
  const GraphMap& gm = spec.as_graph_map();
  const TransitionMatrix m = transition_matrix(gm);
  const PFData pf = pf_eigenpair(m);
  if (!csv_path.empty()) {
    auto out = open_out(csv_path);
    write_eigen_csv(out, gm.graph(), m, pf);
  }
  write_eigen_json(std::cout, gm.graph(), m, pf);
  return 0;
}

int cmd_psa(const std::string& path, bool unoriented, const std::string& dot_path) {
  const AutoSpec spec = parse_spec_file(path);
  require_valid_representative(spec, path);
  const GraphMap& gm = spec.as_graph_map();
  const PrefixSuffixAutomaton oriented = build_psa(gm);

  // Default view: the classical positive component for substitutions,
  // otherwise the full oriented automaton.
  const bool substitution = spec.basis.has_value() && spec.basis->is_positive();
  PrefixSuffixAutomaton view = oriented;
  std::string view_name = "oriented";
  if (unoriented) {
    view = build_unoriented_psa(oriented);
    view_name = "unoriented";
  } else if (substitution) {
    view = positive_component(oriented);
    view_name = "positive component";
  }

  std::cout << "automaton: " << view_name << "\n"
            << "vertices: " << view.vertices().size() << "\n"
            << "edges: " << view.edges().size() << "\n"
            << "oriented vertices: " << oriented.vertices().size() << "\n"
            << "oriented edges: " << oriented.edges().size() << "\n";
  if (!dot_path.empty()) {
    auto out = open_out(dot_path);
    write_dot(out, view);
  }
  return 0;
}

int cmd_dimension(const std::string& phi_path, const std::string& inv_path) {
  const AutoSpec phi = parse_spec_file(phi_path);
  const AutoSpec inv = parse_spec_file(inv_path);
  require_valid_representative(phi, phi_path);
  require_valid_representative(inv, inv_path);
  if (phi.basis && inv.basis &&
      phi.basis->alphabet_size() == inv.basis->alphabet_size() &&
      !verify_inverse_pair(*phi.basis, *inv.basis)) {
    throw PreconditionError("declared inverse",
                            "the two basis morphisms are not mutually inverse");
  }
  const PFData pf_phi = pf_eigenpair(transition_matrix(phi.as_graph_map()));
  const PFData pf_inv = pf_eigenpair(transition_matrix(inv.as_graph_map()));
  write_dimension_report_json(std::cout, hausdorff_dimension(pf_phi, pf_inv));
  return 0;
}

int cmd_leaves(const std::string& path, const std::string& edge_name, std::size_t depth,
               const std::string& csv_path) {
  const AutoSpec spec = parse_spec_file(path);
  require_valid_representative(spec, path);
  const GraphMap& gm = spec.as_graph_map();
  const OrientedEdge e = parse_oriented_name(gm.graph(), edge_name);
  const LeafSegment seg = iterate_edge(gm, e, depth);
  std::cout << format_path(gm.graph(), seg.path) << "\n";
  if (!csv_path.empty()) {
    auto out = open_out(csv_path);
    out << "edge,position\n";
    for (OrientedEdge x = 0; x < gm.graph().oriented_edge_count(); ++x) {
      for (std::size_t pos : seg.positions_of(x)) {
        out << gm.graph().oriented_name(x) << ',' << pos << '\n';
      }
    }
  }
  return 0;
}

int cmd_render(const std::string& path, const std::string& letter, std::size_t depth,
               const std::string& out_path) {
  const AutoSpec spec = parse_spec_file(path);
  if (!spec.basis) {
    throw PreconditionError("positive morphism",
                            "render requires a basis-mode substitution spec");
  }
  const auto& names = spec.basis->names();
  std::size_t idx = names.size();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == letter) idx = i;
  }
  if (idx == names.size()) throw MalformedInputError("unknown letter '" + letter + "'");

  const PointCloud cloud = rauzy_points(*spec.basis, idx, depth);
  auto out = open_out(out_path);
  if (out_path.size() >= 4 && out_path.substr(out_path.size() - 4) == ".svg") {
    write_point_cloud_svg(out, cloud);
  } else {
    write_point_cloud_csv(out, cloud);
  }
  std::cout << "points: " << cloud.size() << "\n";
  return 0;
}

int cmd_itm(std::size_t depth, const std::string& csv_path) {
  const ItmConfig cfg = bk_config();
  if (!csv_path.empty()) {
    auto out = open_out(csv_path);
    write_survivor_csv(out, cfg, depth);
  }
  write_itm_summary_json(std::cout, cfg, depth);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symbolic and self-similar invariants of train-track maps"};
  app.require_subcommand(1);

  std::string spec_path, second_path, edge_name, letter, out_path, csv_path, dot_path;
  std::size_t depth = 14;
  bool unoriented = false, echo = false;
  int rc = 0;

  auto* validate = app.add_subcommand("validate", "train-track and irreducibility check");
  validate->add_option("spec", spec_path)->required();
  validate->add_flag("--echo-spec", echo, "re-emit the parsed spec canonically");
  validate->callback([&] { rc = cmd_validate(spec_path, echo); });

  auto* eigen = app.add_subcommand("eigen", "transition matrix and Perron-Frobenius data");
  eigen->add_option("spec", spec_path)->required();
  eigen->add_option("--csv", csv_path, "write the transition matrix as CSV");
  eigen->callback([&] { rc = cmd_eigen(spec_path, csv_path); });

  auto* psa = app.add_subcommand("psa", "prefix-suffix automaton summary and DOT");
  psa->add_option("spec", spec_path)->required();
  psa->add_flag("--unoriented", unoriented, "emit the unoriented quotient");
  psa->add_option("--dot", dot_path, "write the automaton in DOT format");
  psa->callback([&] { rc = cmd_psa(spec_path, unoriented, dot_path); });

  auto* dimension = app.add_subcommand("dimension", "Hausdorff dimension report");
  dimension->add_option("specPhi", spec_path)->required();
  dimension->add_option("specPhiInv", second_path)->required();
  dimension->callback([&] { rc = cmd_dimension(spec_path, second_path); });

  auto* leaves = app.add_subcommand("leaves", "iterated edge image (leaf segment)");
  leaves->add_option("spec", spec_path)->required();
  leaves->add_option("--edge", edge_name, "base edge (~X for reversed)")->required();
  leaves->add_option("--depth", depth, "iterate count")->required();
  leaves->add_option("--csv", csv_path, "write the occurrence table as CSV");
  leaves->callback([&] { rc = cmd_leaves(spec_path, edge_name, depth, csv_path); });

  auto* render = app.add_subcommand("render", "Rauzy point cloud (positive specs only)");
  render->add_option("spec", spec_path)->required();
  render->add_option("--letter", letter)->required();
  render->add_option("--depth", depth)->required();
  render->add_option("--out", out_path, "output file (.csv or .svg)")->required();
  render->callback([&] { rc = cmd_render(spec_path, letter, depth, out_path); });

  auto* itm = app.add_subcommand("itm", "Boshernitzan-Kornfeld interval translation report");
  itm->add_option("--depth", depth);
  itm->add_option("--csv", csv_path, "write survivor intervals per depth as CSV");
  itm->callback([&] { rc = cmd_itm(depth, csv_path); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const tt::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const tt::PreconditionError& e) {
    std::cerr << "check failed [" << e.check() << "]: " << e.message() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
