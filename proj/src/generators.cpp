#include "edgechroma/generators.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "edgechroma/density.hpp"

namespace ec {

Graph cycle(int n) {
    if (n < 3) throw InputError("cycle needs n >= 3");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, es);
}

Graph path(int n) {
    if (n < 1) throw InputError("path needs n >= 1");
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph::from_edges(n, es);
}

Graph star(int leaves) {
    if (leaves < 1) throw InputError("star needs >= 1 leaf");
    std::vector<Edge> es;
    for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, es);
}

Graph complete(int n) {
    if (n < 1) throw InputError("complete needs n >= 1");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph::from_edges(n, es);
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw InputError("complete_bipartite needs positive sides");
    std::vector<Edge> es;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) es.emplace_back(i, a + j);
    return Graph::from_edges(a + b, es);
}

Graph prism(int n) {
    if (n < 3) throw InputError("prism needs n >= 3");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) {
        es.emplace_back(i, (i + 1) % n);
        es.emplace_back(n + i, n + (i + 1) % n);
        es.emplace_back(i, n + i);
    }
    return Graph::from_edges(2 * n, es);
}

Graph cycle_join_I2(int delta) {
    if (delta < 4) throw InputError("cycle_join_I2 needs Delta >= 4");
    std::vector<Edge> es;
    for (int i = 0; i < delta; ++i) es.emplace_back(i, (i + 1) % delta);
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < delta; ++i) es.emplace_back(i, delta + j);
    return Graph::from_edges(delta + 2, es);
}

Graph subdivide(const Graph& base, const Edge& e, int t) {
    if (t < 0) throw InputError("subdivide needs t >= 0");
    if (base.edge_index(e) < 0) throw InputError("subdivide: edge not in graph");
    if (t == 0) return base;
    std::vector<Edge> es;
    for (const Edge& f : base.edges())
        if (!(f == e)) es.push_back(f);
    int n = base.vertex_count();
    int prev = e.u;
    for (int i = 0; i < t; ++i) {
        es.emplace_back(prev, n + i);
        prev = n + i;
    }
    es.emplace_back(prev, e.v);
    return Graph::from_edges(n + t, es);
}

Graph attach_pendants(const Graph& base, int v, int t) {
    base.check_vertex(v);
    if (t < 0) throw InputError("attach_pendants needs t >= 0");
    std::vector<Edge> es = base.edges();
    int n = base.vertex_count();
    for (int i = 0; i < t; ++i) es.emplace_back(v, n + i);
    return Graph::from_edges(n + t, es);
}

Graph sparse_test(DischargeCase which, int delta, uint64_t seed) {
    if (delta < 4) throw InputError("sparse_test needs Delta >= 4");
    Rational bound = discharge_bound(which);
    SplitMix64 rng(seed * 0x9e3779b97f4a7c15ull + delta * 131 +
                   (which == DischargeCase::EightThirds ? 0 : 1));
    int n = std::max(delta + 2, 8 + static_cast<int>(rng.below(37)));  // base size
    std::vector<Edge> es;
    std::vector<int> deg(n, 0);
    for (int v = 1; v < n; ++v) {
        int u = -1;
        for (int tries = 0; tries < 8 && u < 0; ++tries) {
            int c = static_cast<int>(rng.below(v));
            if (deg[c] < delta - 1) u = c;
        }
        if (u < 0)
            for (int c = 0; c < v && u < 0; ++c)
                if (deg[c] < delta - 1) u = c;
        if (u < 0) u = 0;
        es.emplace_back(u, v);
        ++deg[u];
        ++deg[v];
    }
    Graph g = Graph::from_edges(n, es);
    // Extra edges while the density gate holds.
    int tries = 2 * n;
    while (tries-- > 0) {
        int u = static_cast<int>(rng.below(n)), v = static_cast<int>(rng.below(n));
        if (u == v || g.has_edge(u, v)) continue;
        if (degree(g, u) >= delta - 1 || degree(g, v) >= delta - 1) continue;
        std::vector<Edge> next = g.edges();
        next.emplace_back(u, v);
        Graph cand = Graph::from_edges(n, next);
        if (mad_below(cand, bound).holds) g = cand;
    }
    // Pendants: push one vertex to degree exactly delta (pendants only dilute
    // density above 2, so the gate keeps holding), then scatter a few more.
    int top = 0;
    for (int v = 1; v < n; ++v)
        if (degree(g, v) > degree(g, top)) top = v;
    g = attach_pendants(g, top, delta - degree(g, top));
    int extra = static_cast<int>(rng.below(static_cast<uint64_t>(n) / 3 + 1));
    for (int i = 0; i < extra && g.vertex_count() < 60; ++i) {
        int v = static_cast<int>(rng.below(g.vertex_count()));
        if (degree(g, v) < delta) g = attach_pendants(g, v, 1);
    }
    if (max_degree(g) != delta)
        throw std::logic_error("sparse_test: max degree drifted");
    return g;
}

Graph gen(const FamilySpec& spec) {
    const auto& p = spec.params;
    auto want = [&](size_t k) {
        if (p.size() != k)
            throw InputError("family " + spec.family + " takes " + std::to_string(k) +
                             " parameter(s)");
    };
    if (spec.family == "cycle") {
        want(1);
        return cycle(static_cast<int>(p[0]));
    }
    if (spec.family == "path") {
        want(1);
        return path(static_cast<int>(p[0]));
    }
    if (spec.family == "star") {
        want(1);
        return star(static_cast<int>(p[0]));
    }
    if (spec.family == "complete") {
        want(1);
        return complete(static_cast<int>(p[0]));
    }
    if (spec.family == "complete_bipartite") {
        want(2);
        return complete_bipartite(static_cast<int>(p[0]), static_cast<int>(p[1]));
    }
    if (spec.family == "prism") {
        want(1);
        return prism(static_cast<int>(p[0]));
    }
    if (spec.family == "cycle_join_I2") {
        want(1);
        return cycle_join_I2(static_cast<int>(p[0]));
    }
    if (spec.family == "sparse_test") {
        want(2);
        if (p[0] != 83 && p[0] != 145)
            throw InputError("sparse_test case parameter must be 83 (8/3) or 145 (14/5)");
        return sparse_test(p[0] == 83 ? DischargeCase::EightThirds
                                      : DischargeCase::FourteenFifths,
                           static_cast<int>(p[1]), spec.seed);
    }
    throw InputError("unknown family '" + spec.family + "'");
}

namespace {

// Iterated neighborhood refinement, then minimum adjacency mask over the
// permutations respecting the refined classes.
uint64_t canonical_search(const Graph& g) {
    int n = g.vertex_count();
    std::vector<uint64_t> inv(n);
    for (int v = 0; v < n; ++v) inv[v] = degree(g, v);
    for (int round = 0; round < n; ++round) {
        std::vector<uint64_t> next(n);
        for (int v = 0; v < n; ++v) {
            std::vector<uint64_t> nb;
            for (int y : g.neighbors(v)) nb.push_back(inv[y]);
            std::sort(nb.begin(), nb.end());
            uint64_t h = inv[v] * 0x100000001b3ull + 14695981039346656037ull;
            for (uint64_t x : nb) h = (h ^ x) * 0x100000001b3ull;
            next[v] = h;
        }
        if (next == inv) break;
        inv = next;
    }
    // Group vertices into classes ordered by invariant value.
    std::map<uint64_t, std::vector<int>> classes;
    for (int v = 0; v < n; ++v) classes[inv[v]].push_back(v);
    std::vector<std::vector<int>> blocks;
    for (auto& [h, vs] : classes) blocks.push_back(vs);
    std::vector<int> perm;  // position -> original vertex
    uint64_t best = ~0ull;
    std::vector<int> pos_of(n, -1);
    auto mask_of = [&]() {
        uint64_t m = 0;
        for (const Edge& e : g.edges()) {
            int a = pos_of[e.u], b = pos_of[e.v];
            if (a > b) std::swap(a, b);
            m |= 1ull << (a * 8 + b);
        }
        return m;
    };
    auto rec = [&](auto&& self, size_t bi) -> void {
        if (bi == blocks.size()) {
            for (int i = 0; i < n; ++i) pos_of[perm[i]] = i;
            best = std::min(best, mask_of());
            return;
        }
        std::vector<int>& blk = blocks[bi];
        std::sort(blk.begin(), blk.end());
        do {
            size_t old = perm.size();
            perm.insert(perm.end(), blk.begin(), blk.end());
            self(self, bi + 1);
            perm.resize(old);
        } while (std::next_permutation(blk.begin(), blk.end()));
    };
    rec(rec, 0);
    return best;
}

}  // namespace

uint64_t canonical_form64(const Graph& g) {
    if (g.vertex_count() > 8) throw InputError("canonical_form64 limited to 8 vertices");
    return canonical_search(g);
}

std::vector<Graph> enumerate_small(int n) {
    if (n < 1 || n > 7) throw InputError("enumerate_small limited to 1..7 vertices");
    std::vector<Graph> cur{Graph::from_edges(1, {})};
    for (int size = 2; size <= n; ++size) {
        std::set<uint64_t> seen;
        std::vector<Graph> next;
        for (const Graph& base : cur) {
            for (unsigned sub = 1; sub < (1u << (size - 1)); ++sub) {
                std::vector<Edge> es = base.edges();
                for (int v = 0; v < size - 1; ++v)
                    if (sub >> v & 1) es.emplace_back(v, size - 1);
                Graph h = Graph::from_edges(size, es);
                uint64_t key = canonical_form64(h);
                if (seen.insert(key).second) next.push_back(std::move(h));
            }
        }
        cur = std::move(next);
    }
    return cur;
}

}  // namespace ec
