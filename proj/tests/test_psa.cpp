#include <cmath>
#include <set>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "traintrack/psa.hpp"

using namespace tt;

namespace {

PrefixSuffixAutomaton psa_of(const AutoSpec& spec) {
  return build_psa(spec.as_graph_map());
}

std::string edge_label(const Graph& g, const PsaEdge& e) {
  return g.oriented_name(e.from) + "->" + g.oriented_name(e.to) + "(" +
         format_path(g, e.prefix) + "|" + format_path(g, e.suffix) + ")";
}

}  // namespace

TEST_CASE("build_psa requires a train track") {
  const BasisMorphism bad(2, {fixtures::w("a", 2), fixtures::w("a b' a", 2)});
  CHECK_THROWS_AS(build_psa(rose_of(bad)), PreconditionError);
}

TEST_CASE("edge-count identity") {
  for (const AutoSpec* spec : fixtures::all_specs()) {
    const GraphMap& gm = spec->as_graph_map();
    const PrefixSuffixAutomaton psa = psa_of(*spec);
    std::size_t total = 0;
    for (OrientedEdge e = 0; e < gm.graph().oriented_edge_count(); ++e) {
      total += gm.image(e).size();
    }
    CHECK(psa.edges().size() == total);
  }
}

TEST_CASE("Tribonacci positive component lists the five classical edges") {
  const PrefixSuffixAutomaton pos = positive_component(psa_of(fixtures::tribonacci()));
  const Graph& g = pos.graph();
  REQUIRE(pos.vertices().size() == 3);
  REQUIRE(pos.edges().size() == 5);
  std::set<std::string> labels;
  for (const PsaEdge& e : pos.edges()) labels.insert(edge_label(g, e));
  CHECK(labels == std::set<std::string>{
                      "a->a(1|b)", "b->a(a|1)", "a->b(1|c)", "c->b(a|1)", "a->c(1|1)"});
}

TEST_CASE("BK positive component") {
  const PrefixSuffixAutomaton pos = positive_component(psa_of(fixtures::bk()));
  const Graph& g = pos.graph();
  CHECK(pos.edges().size() == 8);
  std::set<std::string> a_to_b;
  for (const PsaEdge& e : pos.edges()) {
    if (g.oriented_name(e.from) == "a" && g.oriented_name(e.to) == "b") {
      a_to_b.insert(format_path(g, e.prefix) + "|" + format_path(g, e.suffix));
    }
  }
  CHECK(a_to_b == std::set<std::string>{"c|a a", "c a|a", "c a a|1"});
}

TEST_CASE("oriented sizes and unoriented quotients") {
  const PrefixSuffixAutomaton tribo = psa_of(fixtures::tribonacci());
  CHECK(tribo.vertices().size() == 6);
  CHECK(tribo.edges().size() == 10);
  const PrefixSuffixAutomaton tribo_u = build_unoriented_psa(tribo);
  CHECK(tribo_u.vertices().size() == 3);
  CHECK(tribo_u.edges().size() == 5);

  const PrefixSuffixAutomaton bk = psa_of(fixtures::bk());
  CHECK(bk.edges().size() == 16);
  const PrefixSuffixAutomaton bk_u = build_unoriented_psa(bk);
  CHECK(bk_u.vertices().size() == 3);
  CHECK(bk_u.edges().size() == 8);

  const PrefixSuffixAutomaton ti = psa_of(fixtures::tribonacci_inv());
  CHECK(ti.edges().size() == 12);
  const PrefixSuffixAutomaton ti_u = build_unoriented_psa(ti);
  CHECK(ti_u.vertices().size() == 4);
  CHECK(ti_u.edges().size() == 6);
}

TEST_CASE("a reversal-asymmetric self-loop survives the quotient unchanged") {
  // Rank-1 rose with the identity map: one occurrence of a in f(a), so the
  // oriented automaton is two mirror self-loops and the quotient keeps one,
  // with the same (empty) prefix and suffix labels.
  const BasisMorphism one(1, {fixtures::w("a", 1)});
  const PrefixSuffixAutomaton psa = build_psa(rose_of(one));
  CHECK(psa.edges().size() == 2);
  const PrefixSuffixAutomaton quotient = build_unoriented_psa(psa);
  REQUIRE(quotient.edges().size() == 1);
  const PsaEdge& loop = quotient.edges()[0];
  CHECK(loop.from == loop.to);
  CHECK(loop.prefix.empty());
  CHECK(loop.suffix.empty());
  CHECK(loop.position == 0);
}

TEST_CASE("unoriented out-degrees match transition matrix rows") {
  for (const AutoSpec* spec : fixtures::all_specs()) {
    const TransitionMatrix m = transition_matrix(spec->as_graph_map());
    const PrefixSuffixAutomaton u = build_unoriented_psa(psa_of(*spec));
    for (std::size_t row = 0; row < m.order; ++row) {
      std::int64_t row_sum = 0;
      for (std::size_t col = 0; col < m.order; ++col) row_sum += m.at(row, col);
      CHECK(static_cast<std::int64_t>(
                u.out_edges(forward_of(static_cast<std::uint32_t>(row))).size()) ==
            row_sum);
    }
  }
}

TEST_CASE("path enumeration matches adjacency powers") {
  for (const AutoSpec* spec : fixtures::all_specs()) {
    const PrefixSuffixAutomaton psa = psa_of(*spec);
    const TransitionMatrix a = oriented_adjacency(psa);
    for (std::size_t n = 0; n <= 6; ++n) {
      const TransitionMatrix an = matrix_power(a, n);
      for (std::size_t vi = 0; vi < psa.vertices().size(); ++vi) {
        std::int64_t expected = 0;
        for (std::size_t j = 0; j < an.order; ++j) expected += an.at(vi, j);
        const auto paths = enumerate_paths(psa, psa.vertices()[vi], n);
        CHECK(static_cast<std::int64_t>(paths.size()) == expected);
      }
    }
  }
}

TEST_CASE("path enumeration basics") {
  const PrefixSuffixAutomaton psa = psa_of(fixtures::tribonacci());
  const Graph& g = psa.graph();
  const auto a = forward_of(static_cast<std::uint32_t>(g.find_edge("a")));
  const auto c = forward_of(static_cast<std::uint32_t>(g.find_edge("c")));
  CHECK(enumerate_paths(psa, a, 1).size() == 3);
  CHECK(enumerate_paths(psa, c, 1).size() == 1);
  const auto empty = enumerate_paths(psa, a, 0);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].length() == 0);
  CHECK(empty[0].terminal(psa) == a);
}

TEST_CASE("shift compatibility: prepending an automaton edge is a bijection") {
  for (const AutoSpec* spec : {&fixtures::bk(), &fixtures::tribonacci()}) {
    const PrefixSuffixAutomaton psa = psa_of(*spec);
    for (std::size_t n = 0; n <= 5; ++n) {
      for (OrientedEdge e0 : psa.vertices()) {
        std::set<std::vector<std::uint32_t>> extended;
        std::size_t built = 0;
        for (std::uint32_t idx : psa.out_edges(e0)) {
          const OrientedEdge e1 = psa.edges()[idx].to;
          for (const EPath& tail : enumerate_paths(psa, e1, n)) {
            std::vector<std::uint32_t> steps{idx};
            steps.insert(steps.end(), tail.steps.begin(), tail.steps.end());
            extended.insert(steps);
            ++built;
          }
        }
        CHECK(built == extended.size());  // injective
        const auto full = enumerate_paths(psa, e0, n + 1);
        CHECK(full.size() == built);      // surjective by counting
        for (const EPath& p : full) CHECK(extended.count(p.steps) == 1);
      }
    }
  }
}

TEST_CASE("simple loops") {
  const PrefixSuffixAutomaton tribo = psa_of(fixtures::tribonacci());
  const Graph& tg = tribo.graph();
  const auto tribo_loops = loops_up_to(tribo, 1);
  bool tribo_a_loop = false;
  for (const auto& [v, loop] : tribo_loops) {
    if (tg.oriented_name(v) == "a") {
      const PsaEdge& e = tribo.edges()[loop.steps[0]];
      CHECK(e.prefix.empty());
      CHECK(format_path(tg, e.suffix) == "b");
      tribo_a_loop = true;
    }
  }
  CHECK(tribo_a_loop);

  const PrefixSuffixAutomaton bk = psa_of(fixtures::bk());
  const Graph& bg = bk.graph();
  bool bk_c_loop = false;
  for (const auto& [v, loop] : loops_up_to(bk, 1)) {
    CHECK(bg.oriented_name(v) != "a");  // a does not occur in f(a) = b
    if (bg.oriented_name(v) == "c") {
      const PsaEdge& e = bk.edges()[loop.steps[0]];
      CHECK(e.prefix.empty());
      CHECK(format_path(bg, e.suffix) == "a a");
      bk_c_loop = true;
    }
  }
  CHECK(bk_c_loop);
}

TEST_CASE("cylinder weights") {
  const PrefixSuffixAutomaton psa = psa_of(fixtures::tribonacci());
  const Graph& g = psa.graph();
  const PFData pf = pf_eigenpair(transition_matrix(fixtures::tribonacci().as_graph_map()));
  const auto a = forward_of(static_cast<std::uint32_t>(g.find_edge("a")));
  const auto b = forward_of(static_cast<std::uint32_t>(g.find_edge("b")));

  EPath empty;
  empty.start = a;
  CHECK(cylinder_weight(pf, psa, empty) == doctest::Approx(pf.mu[0]));

  for (const EPath& p : enumerate_paths(psa, a, 1)) {
    if (p.terminal(psa) == b) {
      CHECK(cylinder_weight(pf, psa, p) == doctest::Approx(0.2956).epsilon(1e-3));
    }
  }

  for (const auto& [v, loop] : loops_up_to(psa, 3)) {
    const double expected =
        pf.mu[unoriented(v)] / std::pow(pf.lambda, static_cast<double>(loop.length()));
    CHECK(cylinder_weight(pf, psa, loop) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("outflow identity on the unoriented automaton") {
  for (const AutoSpec* spec : fixtures::all_specs()) {
    const PFData pf = pf_eigenpair(transition_matrix(spec->as_graph_map()));
    const PrefixSuffixAutomaton u = build_unoriented_psa(psa_of(*spec));
    for (OrientedEdge v : u.vertices()) {
      double outflow = 0.0;
      for (std::uint32_t idx : u.out_edges(v)) {
        outflow += pf.mu[unoriented(u.edges()[idx].to)];
      }
      CHECK(std::abs(outflow - pf.lambda * pf.mu[unoriented(v)]) < 1e-9);
    }
  }
}

TEST_CASE("DOT emission is stable") {
  const PrefixSuffixAutomaton pos = positive_component(psa_of(fixtures::tribonacci()));
  std::ostringstream first, second;
  write_dot(first, pos);
  write_dot(second, pos);
  CHECK(first.str() == second.str());
  CHECK(first.str().find("\"a\" -> \"a\" [label=\"\xce\xb5 | b\"]") != std::string::npos);
}
