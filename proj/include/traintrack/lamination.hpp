#pragma once

#include <cstdint>
#include <vector>

#include "traintrack/psa.hpp"

namespace tt {

/// A finite leaf segment of the attracting lamination: the reduced path
/// f^n(e) together with, for each oriented edge, the sorted positions at
/// which it occurs in the path.
struct LeafSegment {
  OrientedEdge base = 0;
  std::size_t depth = 0;
  EdgePath path;
  std::vector<std::vector<std::size_t>> occurrences;  // by oriented edge id

  const std::vector<std::size_t>& positions_of(OrientedEdge e) const {
    return occurrences.at(e);
  }
};

/// Computes f^n(e) by edge-image substitution, asserting that no free
/// reduction ever occurs (throws InternalError otherwise; a validated
/// train track cannot cancel). Growth is exponential in n, so the segment
/// length is capped; raise max_length explicitly for deeper segments.
LeafSegment iterate_edge(const GraphMap& gm, OrientedEdge e, std::size_t n,
                         std::size_t max_length = 1u << 24);

/// One occurrence of the decomposed edge in an iterated image, paired with
/// the automaton path that names it.
struct OccurrenceCylinder {
  OrientedEdge host = 0;       // e' with e occurring in f^n(e')
  std::size_t position = 0;    // 0-based position of e in f^n(e')
  EPath sigma;                 // e-path of length n with terminal e'

  friend bool operator==(const OccurrenceCylinder&, const OccurrenceCylinder&) = default;
};

/// The verified bijection between occurrences of e in {f^n(e')} over all
/// oriented e' and e-paths of length n: every path's accumulated prefix
/// lengths sum(|f^k(p_k)|) reproduce a distinct occurrence position, and
/// every occurrence is hit. Throws InternalError if the bijection fails.
std::vector<OccurrenceCylinder> decompose_occurrences(const GraphMap& gm, OrientedEdge e,
                                                      std::size_t n);

/// Certificate that a loop in the automaton is realized by nested
/// occurrences: for k = 1..repeats, e sits inside f^(k n)(e) at the
/// position dictated by the loop's accumulated prefixes.
struct LoopRealization {
  OrientedEdge base = 0;
  std::size_t loop_length = 0;
  std::vector<std::pair<std::size_t, std::size_t>> nested;  // (k, position)
};

/// Verifies a loop against direct expansion (throws InternalError on any
/// position mismatch).
LoopRealization verify_loop_realization(const GraphMap& gm, const PrefixSuffixAutomaton& psa,
                                        const EPath& loop, std::size_t repeats = 3);

}  // namespace tt
