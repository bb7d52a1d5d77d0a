#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "edgechroma/graph.hpp"

namespace ec {

enum class ColoringClass { Proper, Acyclic, UniquelyRestricted, Semistrong, Strong };

std::string class_name(ColoringClass cls);
/// Accepts proper|acyclic|ur|ss|strong.
ColoringClass parse_class(const std::string& s);

/// Partial edge coloring of a host graph: assign[i] is the color of edge i
/// (0 = uncolored, otherwise in [1,k]).
struct PartialColoring {
    int k = 0;
    std::vector<int> assign;

    PartialColoring() = default;
    PartialColoring(int palette, int edge_count) : k(palette), assign(edge_count, 0) {
        if (palette <= 0) throw InputError("palette size must be positive");
    }
    bool colored(int i) const { return assign[i] != 0; }
    bool total() const {
        for (int c : assign)
            if (c == 0) return false;
        return true;
    }
    int colors_used() const;
    std::vector<int> uncolored() const;
};

struct Violation {
    ColoringClass cls;
    int color = 0;
    std::vector<Edge> evidence;     // offending color class edges
    std::vector<int> cycle;         // closed vertex sequence (UR / acyclic)
    std::string detail;
};

/// nullopt = ok. Every color class must be a matching of the required type
/// with respect to the full graph, even for partial colorings; ACYCLIC
/// additionally forbids bichromatic cycles among colored edges.
std::optional<Violation> verify(const Graph& g, const PartialColoring& phi,
                                ColoringClass cls);

/// Would assigning color c to uncolored edge `ei` keep the coloring valid?
/// Re-checks only the affected color class (and for ACYCLIC only the
/// bichromatic cycles through the new edge).
bool legal_color(const Graph& g, const PartialColoring& phi, int ei, int c,
                 ColoringClass cls);

/// F_phi(e) under the class: colors whose assignment to e breaks validity.
std::vector<int> forbidden_set(const Graph& g, const PartialColoring& phi, int ei,
                               ColoringClass cls);
std::vector<int> available_set(const Graph& g, const PartialColoring& phi, int ei,
                               ColoringClass cls);

/// SF_phi(e): colors appearing on edges at distance <= 2 from e.
std::vector<int> strongly_forbidden_set(const Graph& g, const PartialColoring& phi,
                                        int ei);
std::vector<int> strongly_available_set(const Graph& g, const PartialColoring& phi,
                                        int ei);

std::vector<Edge> color_class(const Graph& g, const PartialColoring& phi, int c);

/// Coloring text format: "k <palette>" header then "c <u> <v> <color>" lines.
PartialColoring read_coloring(std::istream& in, const Graph& g);
PartialColoring read_coloring_file(const std::string& path, const Graph& g);
std::string write_coloring(const Graph& g, const PartialColoring& phi);

}  // namespace ec
