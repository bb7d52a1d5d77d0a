#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "edgechroma/graph.hpp"

namespace ec {

bool is_matching(const Graph& g, const std::vector<Edge>& m);

/// G_M: subgraph induced by the vertices covered by the matching, with maps.
DeleteResult induced_submatching_graph(const Graph& g, const std::vector<Edge>& m);

/// Every vertex of G_M is pendant (strong / induced matching).
bool is_induced_matching(const Graph& g, const std::vector<Edge>& m);

/// Every edge of M has an endpoint pendant in G_M.
bool is_semistrong_matching(const Graph& g, const std::vector<Edge>& m);

/// No M-alternating cycle in G; production path for the UR predicate.
bool is_uniquely_restricted_matching(const Graph& g, const std::vector<Edge>& m);

/// An M-alternating cycle when one exists, as a closed vertex sequence.
std::optional<std::vector<int>> find_alternating_cycle(const Graph& g,
                                                       const std::vector<Edge>& m);

/// Perfect-matching count, memoized over vertex subsets; |V| <= 24.
/// Definitional oracle for the UR predicate: M is UR iff G_M has exactly one.
std::uint64_t count_perfect_matchings(const Graph& g);

namespace detail {
/// Simple alternating cycle through the matched edge e, given mate[]
/// (partner or -1). Used by the incremental coloring legality checks.
std::optional<std::vector<int>> alternating_cycle_through(const Graph& g,
                                                          const std::vector<int>& mate,
                                                          const Edge& e);
}  // namespace detail

}  // namespace ec
