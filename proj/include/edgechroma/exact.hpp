#pragma once

#include <optional>
#include <vector>

#include "edgechroma/coloring.hpp"
#include "edgechroma/graph.hpp"

namespace ec {

struct SolveOptions {
    long long node_budget = -1;  // < 0: unlimited
    int jobs = 1;
};

struct SolveResult {
    bool exact = true;
    int optimum = -1;            // valid when exact
    int lower_bound = 0;         // proven; == optimum when exact
    int upper_bound = 0;         // witnessed; == optimum when exact
    PartialColoring witness;     // total, verified; best known on timeout
    long long nodes = 0;
    double seconds = 0.0;
};

/// Exact minimum palette for the class, by iterative deepening from the
/// conflict-clique lower bound with branch-and-bound decisions per k.
SolveResult chromatic_index(const Graph& g, ColoringClass cls, SolveOptions opt = {});

/// Any total coloring with palette <= k, or nullopt if none exists.
/// timed_out is set instead when the node budget runs out first.
std::optional<PartialColoring> feasible_coloring(const Graph& g, ColoringClass cls,
                                                 int k, SolveOptions opt = {},
                                                 long long* nodes_out = nullptr,
                                                 bool* timed_out = nullptr);

/// Exhaustive set-partition oracle, |E| <= 10; full verify at every leaf.
int brute_force_index(const Graph& g, ColoringClass cls);

/// Pairwise-conflict clique: a set of edges no two of which may share a color
/// in the class (adjacent, or jointly violating the two-edge class test).
std::vector<int> conflict_clique(const Graph& g, ColoringClass cls);
int conflict_clique_lower_bound(const Graph& g, ColoringClass cls);

/// The pairwise predicate behind the clique bound (exposed for oracle tests).
bool edges_conflict(const Graph& g, ColoringClass cls, const Edge& e, const Edge& f);

}  // namespace ec
