// Acceptance suite: every check prints one [PASS]/[FAIL] line; the binary
// exits non-zero if any criterion fails.

#include <cmath>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "traintrack/fractal.hpp"
#include "traintrack/itm.hpp"
#include "traintrack/lamination.hpp"
#include "traintrack/psa.hpp"
#include "traintrack/spec_file.hpp"

using namespace tt;

namespace {

int failures = 0;

void criterion(const std::string& name, const std::function<void()>& body) {
  try {
    body();
    std::cout << "[PASS] " << name << "\n";
  } catch (const std::exception& e) {
    ++failures;
    std::cout << "[FAIL] " << name << ": " << e.what() << "\n";
  }
}

void require(bool cond, const std::string& detail) {
  if (!cond) throw std::runtime_error(detail);
}

std::string spec_path(const std::string& name) {
  return std::string(TT_SPEC_DIR) + "/" + name;
}

struct Bundle {
  AutoSpec bk, bk_inv, tribo, tribo_inv;
  std::vector<const AutoSpec*> all() const { return {&bk, &bk_inv, &tribo, &tribo_inv}; }
};

TransitionMatrix rows(std::vector<std::vector<std::int64_t>> r) {
  TransitionMatrix m;
  m.order = r.size();
  m.entries = std::move(r);
  return m;
}

std::vector<Word> reduced_words_rank2(std::size_t max_len) {
  const std::vector<Letter> alphabet = {{0, false}, {0, true}, {1, false}, {1, true}};
  std::vector<Word> result;
  std::vector<std::vector<Letter>> frontier{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<Letter>> next;
    for (const auto& stem : frontier) {
      for (const Letter& l : alphabet) {
        if (!stem.empty() && stem.back() == l.inverted()) continue;
        auto word = stem;
        word.push_back(l);
        result.emplace_back(Word(word));
        next.push_back(std::move(word));
      }
    }
    frontier = std::move(next);
  }
  return result;
}

}  // namespace

int main() {
  Bundle specs{parse_spec_file(spec_path("bk.spec")),
               parse_spec_file(spec_path("bk-inv.spec")),
               parse_spec_file(spec_path("tribonacci.spec")),
               parse_spec_file(spec_path("tribonacci-inv.spec"))};

  criterion("1. transition matrices match the reference matrices exactly", [&] {
    require(transition_matrix(specs.bk.as_graph_map()) ==
                rows({{0, 3, 2}, {1, 0, 0}, {0, 1, 1}}),
            "BK matrix");
    require(transition_matrix(specs.bk_inv.as_graph_map()) ==
                rows({{0, 1, 0}, {1, 0, 2}, {1, 0, 3}}),
            "BK inverse matrix");
    require(transition_matrix(specs.tribo.as_graph_map()) ==
                rows({{1, 1, 1}, {1, 0, 0}, {0, 1, 0}}),
            "Tribonacci matrix");
    require(transition_matrix(specs.tribo_inv.as_graph_map()) ==
                rows({{0, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 1}, {1, 1, 0, 0}}),
            "Tribonacci inverse matrix");
  });

  criterion("2. expansion factors with certified enclosures", [&] {
    const std::pair<const AutoSpec*, double> cases[] = {{&specs.bk, 2.170},
                                                        {&specs.bk_inv, 3.214},
                                                        {&specs.tribo, 1.839},
                                                        {&specs.tribo_inv, 1.395}};
    for (const auto& [spec, expected] : cases) {
      const PFData pf = pf_eigenpair(transition_matrix(spec->as_graph_map()));
      require(std::abs(pf.lambda - expected) < 2e-3,
              "lambda " + std::to_string(pf.lambda) + " vs " + std::to_string(expected));
      require(pf.residual < 1e-10, "residual " + std::to_string(pf.residual));
      require(pf.enclosure_width() < 1e-9, "enclosure width");
    }
  });

  criterion("3. Hausdorff dimensions and compact-heart dimensions", [&] {
    const DimensionReport bk =
        hausdorff_dimension(pf_eigenpair(transition_matrix(specs.bk.as_graph_map())),
                            pf_eigenpair(transition_matrix(specs.bk_inv.as_graph_map())));
    require(std::abs(bk.delta - 0.664) < 0.003, "delta(BK) = " + std::to_string(bk.delta));
    require(bk.heart_dim == 1.0, "heartDim(BK)");

    const DimensionReport tribo = hausdorff_dimension(
        pf_eigenpair(transition_matrix(specs.tribo.as_graph_map())),
        pf_eigenpair(transition_matrix(specs.tribo_inv.as_graph_map())));
    require(std::abs(tribo.delta - 1.829) < 0.004,
            "delta(Tribonacci) = " + std::to_string(tribo.delta));
    require(tribo.heart_dim == tribo.delta, "heartDim(Tribonacci)");
  });

  criterion("4. characteristic-polynomial cross-checks", [&] {
    require(char_poly(transition_matrix(specs.bk.as_graph_map())) ==
                std::vector<std::int64_t>({1, -1, -3, 1}),
            "charpoly(BK)");
    const double alpha = solve_alpha();
    const PFData bk_inv = pf_eigenpair(transition_matrix(specs.bk_inv.as_graph_map()));
    require(std::abs(1.0 / alpha - bk_inv.lambda) < 1e-6, "1/alpha vs lambda");

    const TransitionMatrix ti = transition_matrix(specs.tribo_inv.as_graph_map());
    const double at_lambda = eval_poly(char_poly(ti), pf_eigenpair(ti).lambda);
    require(std::abs(at_lambda) < 1e-6, "charpoly(Tribonacci inverse) at lambda");
  });

  criterion("5. prefix-suffix automata: edge counts and path-count identity", [&] {
    require(positive_component(build_psa(specs.bk.as_graph_map())).edges().size() == 8,
            "BK positive component");
    require(positive_component(build_psa(specs.tribo.as_graph_map())).edges().size() == 5,
            "Tribonacci positive component");
    require(build_unoriented_psa(build_psa(specs.tribo_inv.as_graph_map())).edges().size() ==
                6,
            "Tribonacci-inverse unoriented automaton");

    for (const AutoSpec* spec : specs.all()) {
      const PrefixSuffixAutomaton psa = build_psa(spec->as_graph_map());
      const TransitionMatrix a = oriented_adjacency(psa);
      for (std::size_t n = 0; n <= 6; ++n) {
        const TransitionMatrix an = matrix_power(a, n);
        for (std::size_t vi = 0; vi < psa.vertices().size(); ++vi) {
          std::int64_t expected = 0;
          for (std::size_t j = 0; j < an.order; ++j) expected += an.at(vi, j);
          const auto paths = enumerate_paths(psa, psa.vertices()[vi], n);
          require(static_cast<std::int64_t>(paths.size()) == expected,
                  "path count at n=" + std::to_string(n));
        }
      }
    }
  });

  criterion("6. occurrence decomposition is a bijection (n <= 4, all edges)", [&] {
    for (const AutoSpec* spec : specs.all()) {
      const GraphMap& gm = spec->as_graph_map();
      const PrefixSuffixAutomaton psa = build_psa(gm);
      for (OrientedEdge e = 0; e < gm.graph().oriented_edge_count(); ++e) {
        for (std::size_t n = 1; n <= 4; ++n) {
          // decompose_occurrences throws if the bijection fails.
          const auto decomposition = decompose_occurrences(gm, e, n);
          std::set<std::pair<OrientedEdge, std::size_t>> keys;
          for (const auto& occ : decomposition) keys.emplace(occ.host, occ.position);
          require(keys.size() == decomposition.size(), "disjointness");
          require(decomposition.size() == enumerate_paths(psa, e, n).size(),
                  "path/occurrence count");
        }
      }
    }
  });

  criterion("7. measure self-similarity: outflow and address-tree mass", [&] {
    const std::pair<const AutoSpec*, const AutoSpec*> pairs[] = {
        {&specs.bk, &specs.bk_inv},
        {&specs.bk_inv, &specs.bk},
        {&specs.tribo, &specs.tribo_inv},
        {&specs.tribo_inv, &specs.tribo}};
    for (const auto& [phi, inv] : pairs) {
      const GraphMap& gm = phi->as_graph_map();
      const PFData pf = pf_eigenpair(transition_matrix(gm));
      const PFData pf_inv = pf_eigenpair(transition_matrix(inv->as_graph_map()));
      const PrefixSuffixAutomaton psa = build_psa(gm);
      const PrefixSuffixAutomaton quotient = build_unoriented_psa(psa);
      for (OrientedEdge v : quotient.vertices()) {
        double outflow = 0.0;
        for (std::uint32_t idx : quotient.out_edges(v)) {
          outflow += pf.mu[unoriented(quotient.edges()[idx].to)];
        }
        require(std::abs(outflow - pf.lambda * pf.mu[unoriented(v)]) < 1e-9,
                "outflow at " + gm.graph().oriented_name(v));
      }

      for (OrientedEdge e : psa.vertices()) {
        const AddressTree tree = build_address_tree(psa, pf, pf_inv, e, 10);
        for (std::size_t n = 0; n <= 10; ++n) {
          require(std::abs(tree.level_total_weight(n) - pf.mu[unoriented(e)]) <
                      1e-8 * static_cast<double>(n + 1),
                  "level mass at n=" + std::to_string(n));
        }
      }
    }
  });

  criterion("8. periodic leaves: simple loops of length <= 3 are realized", [&] {
    for (const AutoSpec* spec : specs.all()) {
      const GraphMap& gm = spec->as_graph_map();
      const PrefixSuffixAutomaton psa = build_psa(gm);
      const auto loops = loops_up_to(psa, 3);
      require(!loops.empty(), "no loops found");
      for (const auto& [v, loop] : loops) {
        const LoopRealization cert = verify_loop_realization(gm, psa, loop, 3);
        require(cert.nested.size() == 3, "nested occurrences");
      }
    }
  });

  criterion("9. interval translation map", [&] {
    const ItmConfig cfg = bk_config();
    const double alpha = solve_alpha();

    const IntervalUnion first = itm_forward_intervals(cfg, 1);
    require(first.parts.size() == 2, "T(I) piece count");
    require(std::abs(first.parts[0].first - 0.0) < 1e-12 &&
                std::abs(first.parts[0].second - alpha * alpha) < 1e-12 &&
                std::abs(first.parts[1].first - alpha) < 1e-12 &&
                std::abs(first.parts[1].second - 1.0) < 1e-12,
            "T(I) endpoints");
    require(std::abs(first.total_length() - (1.0 - alpha + alpha * alpha)) < 1e-12,
            "survivor length at n=1");

    IntervalUnion previous = itm_forward_intervals(cfg, 0);
    for (std::size_t n = 1; n <= 16; ++n) {
      const IntervalUnion current = itm_forward_intervals(cfg, n);
      for (const auto& [a, b] : current.parts) {
        bool covered = false;
        for (const auto& [c, d] : previous.parts) {
          if (a >= c - 1e-12 && b <= d + 1e-12) {
            covered = true;
            break;
          }
        }
        require(covered, "nesting at n=" + std::to_string(n));
      }
      previous = current;
    }

    const double estimate = itm_dimension_estimate(cfg, 14);
    require(std::abs(estimate - 0.664) < 0.05,
            "dimension estimate " + std::to_string(estimate));
    const DimensionReport bk =
        hausdorff_dimension(pf_eigenpair(transition_matrix(specs.bk.as_graph_map())),
                            pf_eigenpair(transition_matrix(specs.bk_inv.as_graph_map())));
    require(std::abs(estimate - bk.delta) < 0.05, "estimate vs log-ratio delta");
  });

  criterion("10. box-counting calibration", [&] {
    IntervalUnion cantor;
    cantor.parts = {{0.0, 1.0}};
    for (int d = 0; d < 10; ++d) {
      std::vector<std::pair<double, double>> next;
      for (const auto& [a, b] : cantor.parts) {
        const double third = (b - a) / 3.0;
        next.emplace_back(a, a + third);
        next.emplace_back(b - third, b);
      }
      cantor.parts = std::move(next);
    }
    std::vector<double> ternary;
    for (int j = 1; j <= 8; ++j) ternary.push_back(std::pow(3.0, -j));
    const double cantor_dim = box_counting_dimension(cantor, ternary).dimension;
    require(std::abs(cantor_dim - std::log(2.0) / std::log(3.0)) < 0.02,
            "Cantor " + std::to_string(cantor_dim));

    PointCloud segment;
    segment.dimension = 1;
    for (int i = 0; i < 10000; ++i) segment.coords.push_back(i / 9999.0);
    const double unit = box_counting_dimension(segment, dyadic_scales()).dimension;
    require(std::abs(unit - 1.0) < 0.02, "segment " + std::to_string(unit));
  });

  criterion("11. Rauzy render: count recurrence and byte-identical CSV", [&] {
    const PointCloud cloud = rauzy_points(*specs.tribo.basis, 0, 8);
    require(cloud.size() == 149, "point count " + std::to_string(cloud.size()));

    std::ostringstream once, twice;
    write_point_cloud_csv(once, cloud);
    write_point_cloud_csv(twice, rauzy_points(*specs.tribo.basis, 0, 8));
    require(once.str() == twice.str(), "CSV not byte-identical");
  });

  criterion("12. train-track gate and the searched rank-2 counterexample", [&] {
    for (const AutoSpec* spec : specs.all()) {
      require(is_train_track(spec->as_graph_map()).ok, "bundled spec rejected");
      require(is_irreducible_representative(spec->as_graph_map()), "reducible");
    }

    // Brute-force oracle: enumerate all rank-2 morphisms with reduced
    // images of length <= 3 in length-lexicographic order; the first map
    // whose word expansion cancels must be rejected with a certificate
    // that names the collapsing iterate.
    const std::vector<Word> words = reduced_words_rank2(3);
    require(words.size() == 52, "word enumeration");
    bool found = false;
    for (const Word& ia : words) {
      for (const Word& ib : words) {
        const BasisMorphism m(2, {ia, ib});
        std::size_t cancel_at = 0;
        for (std::uint32_t g = 0; g < 2 && cancel_at == 0; ++g) {
          Word cur = Word::from_letter(Letter{g, false});
          for (std::size_t k = 1; k <= 8; ++k) {
            std::size_t unreduced = 0;
            for (const Letter& l : cur.letters()) unreduced += m.image(l.index).size();
            cur = apply_morphism(m, cur);
            if (cur.size() != unreduced) {
              cancel_at = k;
              break;
            }
          }
        }
        const TrainTrackReport report = is_train_track(rose_of(m));
        require(report.ok == (cancel_at == 0), "verdict disagrees with the oracle");
        if (!report.ok && !found) {
          found = true;
          require(report.offender.has_value(), "missing certificate");
          require(cancel_at <= report.offender->collapse_iterate + 1,
                  "certificate iterate too small");
        }
      }
    }
    require(found, "no counterexample found");
  });

  std::cout << (failures == 0 ? "all criteria passed\n"
                              : std::to_string(failures) + " criteria failed\n");
  return failures == 0 ? 0 : 1;
}
