#pragma once

#include <vector>

#include "edgechroma/graph.hpp"
#include "edgechroma/rational.hpp"

namespace ec {

struct MadResult {
    Rational value;
    std::vector<int> witness;  // vertex set inducing a subgraph of average degree = value
};

/// Exact maximum average degree: max over nonempty subgraphs H of 2|E(H)|/|V(H)|.
/// Binary search on the density guess with a max-flow feasibility test; the
/// final rational is pinned by Stern-Brocot refinement over denominators <= |V|.
MadResult mad(const Graph& g);

struct MadBelowResult {
    bool holds;
    Rational value;
    std::vector<int> witness;  // dense witness when holds == false
};

/// Exact test mad(g) < bound.
MadBelowResult mad_below(const Graph& g, const Rational& bound);

/// 2g/(g-2), the Euler-formula density bound for planar graphs of girth g.
Rational girth_mad_bound(int g);

/// Exhaustive-subset oracle, |V| <= 20. Independent of the flow path.
MadResult mad_exhaustive(const Graph& g);

}  // namespace ec
