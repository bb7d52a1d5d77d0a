#include "edgechroma/hierarchy.hpp"

#include <stdexcept>

namespace ec {

std::vector<HierarchyRow> hierarchy(const Graph& g, SolveOptions opt) {
    const ColoringClass order[] = {ColoringClass::Proper, ColoringClass::Acyclic,
                                   ColoringClass::UniquelyRestricted,
                                   ColoringClass::Semistrong, ColoringClass::Strong};
    std::vector<HierarchyRow> rows;
    for (ColoringClass cls : order) {
        SolveResult r = chromatic_index(g, cls, opt);
        HierarchyRow row;
        row.cls = cls;
        row.exact = r.exact;
        row.value = r.exact ? r.optimum : -1;
        row.lo = r.lower_bound;
        row.hi = r.upper_bound;
        rows.push_back(row);
    }
    // Chain inequality among the exact entries, in chain order.
    int prev = 0;
    for (const HierarchyRow& row : rows) {
        if (!row.exact) continue;
        if (row.value < prev)
            throw std::logic_error("chromatic-index chain violated at class " +
                                   class_name(row.cls));
        prev = row.value;
    }
    return rows;
}

}  // namespace ec
