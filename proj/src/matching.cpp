#include "edgechroma/matching.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <unordered_map>

namespace ec {

namespace {

void check_edges(const Graph& g, const std::vector<Edge>& m) {
    for (const Edge& e : m)
        if (g.edge_index(e) < 0) throw InputError("matching edge not in graph");
}

std::vector<int> covered_vertices(const std::vector<Edge>& m) {
    std::vector<int> vs;
    for (const Edge& e : m) {
        vs.push_back(e.u);
        vs.push_back(e.v);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

}  // namespace

bool is_matching(const Graph& g, const std::vector<Edge>& m) {
    check_edges(g, m);
    std::vector<int> vs;
    for (const Edge& e : m) {
        vs.push_back(e.u);
        vs.push_back(e.v);
    }
    std::sort(vs.begin(), vs.end());
    return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

DeleteResult induced_submatching_graph(const Graph& g, const std::vector<Edge>& m) {
    check_edges(g, m);
    return induced_subgraph(g, covered_vertices(m));
}

bool is_induced_matching(const Graph& g, const std::vector<Edge>& m) {
    if (!is_matching(g, m)) return false;
    DeleteResult gm = induced_submatching_graph(g, m);
    for (int v = 0; v < gm.graph.vertex_count(); ++v)
        if (degree(gm.graph, v) != 1) return false;
    return true;
}

bool is_semistrong_matching(const Graph& g, const std::vector<Edge>& m) {
    if (!is_matching(g, m)) return false;
    DeleteResult gm = induced_submatching_graph(g, m);
    for (const Edge& e : m) {
        int u = gm.old_to_new[e.u], v = gm.old_to_new[e.v];
        if (degree(gm.graph, u) != 1 && degree(gm.graph, v) != 1) return false;
    }
    return true;
}

namespace detail {

// Simple alternating cycle through matched edge e: a vertex-simple path from
// e.u to e.v that starts and ends with non-matching edges and alternates in
// between. Backtracking DFS; a (vertex,parity) visited set would be unsound
// here since non-simple closed walks can reuse a matched edge in both
// directions without certifying a second perfect matching.
std::optional<std::vector<int>> alternating_cycle_through(const Graph& g,
                                                          const std::vector<int>& mate,
                                                          const Edge& e) {
    std::vector<char> onpath(g.vertex_count(), 0);
    std::vector<int> path{e.u};
    onpath[e.u] = 1;
    auto dfs = [&](auto&& self, int x, bool want_matched) -> bool {
        if (!want_matched) {
            for (int y : g.neighbors(x)) {
                if (mate[x] == y) continue;
                if (y == e.v) {
                    path.push_back(y);
                    return true;
                }
                if (!onpath[y]) {
                    onpath[y] = 1;
                    path.push_back(y);
                    if (self(self, y, true)) return true;
                    path.pop_back();
                    onpath[y] = 0;
                }
            }
        } else {
            int y = mate[x];
            if (y >= 0 && y != e.v && !onpath[y]) {
                onpath[y] = 1;
                path.push_back(y);
                if (self(self, y, false)) return true;
                path.pop_back();
                onpath[y] = 0;
            }
        }
        return false;
    };
    if (dfs(dfs, e.u, false)) return path;  // e closes the cycle
    return std::nullopt;
}

}  // namespace detail

std::optional<std::vector<int>> find_alternating_cycle(const Graph& g,
                                                       const std::vector<Edge>& m) {
    check_edges(g, m);
    std::vector<int> mate(g.vertex_count(), -1);
    for (const Edge& e : m) {
        if (mate[e.u] != -1 || mate[e.v] != -1)
            throw InputError("find_alternating_cycle: not a matching");
        mate[e.u] = e.v;
        mate[e.v] = e.u;
    }
    for (const Edge& e : m)
        if (auto cyc = detail::alternating_cycle_through(g, mate, e)) return cyc;
    return std::nullopt;
}

bool is_uniquely_restricted_matching(const Graph& g, const std::vector<Edge>& m) {
    if (!is_matching(g, m)) return false;
    return !find_alternating_cycle(g, m).has_value();
}

std::uint64_t count_perfect_matchings(const Graph& g) {
    int n = g.vertex_count();
    if (n > 24) throw InputError("count_perfect_matchings limited to 24 vertices");
    if (n % 2 == 1) return 0;
    std::vector<uint32_t> adj(n, 0);
    for (const Edge& e : g.edges()) {
        adj[e.u] |= 1u << e.v;
        adj[e.v] |= 1u << e.u;
    }
    std::unordered_map<uint32_t, std::uint64_t> memo;
    uint32_t full = (n == 0) ? 0 : ((n == 32 ? 0 : (1u << n)) - 1);
    // Count matchings covering exactly the vertices of `mask`.
    auto rec = [&](auto&& self, uint32_t mask) -> std::uint64_t {
        if (mask == 0) return 1;
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        int v = std::countr_zero(mask);
        std::uint64_t total = 0;
        uint32_t partners = adj[v] & mask;
        while (partners) {
            int w = std::countr_zero(partners);
            partners &= partners - 1;
            total += self(self, mask & ~(1u << v) & ~(1u << w));
        }
        memo.emplace(mask, total);
        return total;
    };
    return rec(rec, full);
}

}  // namespace ec
