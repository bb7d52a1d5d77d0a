#pragma once

#include <map>
#include <string>
#include <vector>

#include "edgechroma/graph.hpp"

namespace ec {

/// G* = G minus all its 1-vertices (one simultaneous pass), with back-maps
/// and the pendant bookkeeping N1_G(v) / E1_G(v).
struct CoreView {
    Graph core;
    std::vector<int> old_to_core;  // -1 for deleted 1-vertices
    std::vector<int> core_to_old;
    std::vector<std::vector<int>> pendant_neighbors;  // per original vertex

    std::vector<Edge> pendant_edges(int original_v) const {
        std::vector<Edge> es;
        for (int w : pendant_neighbors[original_v]) es.emplace_back(original_v, w);
        return es;
    }
};

CoreView core_view(const Graph& g);

/// l-thread: a run of degree-2 interior vertices between 3+-ends. Ends may
/// coincide when the interior has length >= 2.
struct Thread {
    int u1, u2;
    std::vector<int> interior;  // ordered from u1 to u2
    int length() const { return static_cast<int>(interior.size()); }
};

struct ThreadsResult {
    std::vector<Thread> threads;
    /// Components that are pure cycles of 2-vertices; these are not threads.
    std::vector<std::vector<int>> cycle_components;
};

ThreadsResult find_threads(const Graph& core);

enum class VertexClass {
    TwoPoor,
    TwoNonpoor,
    ThreeGood,
    ThreeBad,
    ThreeTerrible,
    FourPlus,
    Other,  // degree <= 1, or a 3-vertex with three 2-neighbors (unclassifiable)
};

std::string vertex_class_name(VertexClass c);

struct StructureInfo {
    std::vector<VertexClass> cls;          // vertex classes, 14/5 vocabulary
    std::vector<std::map<int, int>> li;    // l_i(v): i-threads incident with v
    std::vector<char> bad83;               // 3-vertex with l_1(v) == 2 (8/3-case notion)
    std::vector<int> bn83;                 // bad neighbors, BAD_8_3 tag
    std::vector<int> bn145;                // bad neighbors, BAD_14_5 tag (ThreeBad)
    ThreadsResult threads;

    int l(int v, int i) const {
        auto it = li[v].find(i);
        return it == li[v].end() ? 0 : it->second;
    }
    int l_total_weighted(int v) const {  // sum over i of i * l_i(v)
        int s = 0;
        for (auto [i, c] : li[v]) s += i * c;
        return s;
    }
};

StructureInfo classify(const Graph& core);

/// Core-local structural conclusions of the 8/3 case; empty string when all
/// hold, otherwise a description of the first failure. A graph passing this
/// check is exactly one on which discharge_8_3 reports no deficiency.
std::string check_conclusions_8_3(const Graph& core);

/// Mirror for the 14/5 case.
std::string check_conclusions_14_5(const Graph& core);

}  // namespace ec
