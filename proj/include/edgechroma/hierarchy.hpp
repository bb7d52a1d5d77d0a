#pragma once

#include <vector>

#include "edgechroma/exact.hpp"

namespace ec {

struct HierarchyRow {
    ColoringClass cls;
    bool exact;
    int value;    // when exact
    int lo, hi;   // bounds when not
};

/// The five chromatic indices in chain order (proper, acyclic, ur, ss,
/// strong). Throws std::logic_error if the exact entries violate the chain
/// inequality.
std::vector<HierarchyRow> hierarchy(const Graph& g, SolveOptions opt = {});

}  // namespace ec
