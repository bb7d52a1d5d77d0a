#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "edgechroma/generators.hpp"
#include "edgechroma/graph.hpp"

namespace testutil {

// Brute-force girth oracle: enumerate all cycles by DFS over simple paths.
inline std::optional<int> girth_brute(const ec::Graph& g) {
    int n = g.vertex_count();
    int best = -1;
    std::vector<char> onpath(n, 0);
    std::function<void(int, int, int, int)> dfs = [&](int start, int x, int prev, int len) {
        for (int y : g.neighbors(x)) {
            if (y == prev) continue;
            if (y == start && len >= 2) {
                if (best < 0 || len + 1 < best) best = len + 1;
            } else if (y > start && !onpath[y]) {
                onpath[y] = 1;
                dfs(start, y, x, len + 1);
                onpath[y] = 0;
            }
        }
    };
    for (int s = 0; s < n; ++s) {
        onpath[s] = 1;
        dfs(s, s, -1, 0);
        onpath[s] = 0;
    }
    if (best < 0) return std::nullopt;
    return best;
}

// All matchings of g (including the empty one), as edge sets.
inline std::vector<std::vector<ec::Edge>> all_matchings(const ec::Graph& g) {
    std::vector<std::vector<ec::Edge>> out;
    std::vector<ec::Edge> cur;
    std::vector<char> used(g.vertex_count(), 0);
    std::function<void(int)> rec = [&](int i) {
        out.push_back(cur);
        for (int j = i; j < g.edge_count(); ++j) {
            const ec::Edge& e = g.edge(j);
            if (used[e.u] || used[e.v]) continue;
            used[e.u] = used[e.v] = 1;
            cur.push_back(e);
            rec(j + 1);
            cur.pop_back();
            used[e.u] = used[e.v] = 0;
        }
    };
    rec(0);
    return out;
}

// Seeded random connected graph on n vertices with extra random edges.
inline ec::Graph random_connected(int n, int extra_edges, uint64_t seed) {
    ec::SplitMix64 rng(seed);
    std::vector<ec::Edge> es;
    for (int v = 1; v < n; ++v) es.emplace_back(static_cast<int>(rng.below(v)), v);
    ec::Graph g = ec::Graph::from_edges(n, es);
    for (int t = 0; t < extra_edges * 4 && g.edge_count() < n * (n - 1) / 2; ++t) {
        int u = static_cast<int>(rng.below(n)), v = static_cast<int>(rng.below(n));
        if (u == v || g.has_edge(u, v)) continue;
        es = g.edges();
        es.emplace_back(u, v);
        g = ec::Graph::from_edges(n, es);
        if (--extra_edges == 0) break;
    }
    return g;
}

}  // namespace testutil
