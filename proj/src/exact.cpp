#include "edgechroma/exact.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <thread>

#include "edgechroma/matching.hpp"

namespace ec {

namespace {

constexpr int kMaxPalette = 63;  // colors live in uint64 bitmasks

std::vector<std::vector<int>> edge_balls2(const Graph& g) {
    // near2[e]: edges at line-graph distance 1 or 2 from e.
    std::vector<std::vector<int>> near2(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge e = g.edge(i);
        std::vector<char> seen(g.edge_count(), 0);
        seen[i] = 1;
        for (int x : {e.u, e.v})
            for (int y : g.neighbors(x))
                for (int z : g.neighbors(y)) {
                    int j = g.edge_index(y, z);
                    if (!seen[j]) {
                        seen[j] = 1;
                        near2[i].push_back(j);
                    }
                }
    }
    return near2;
}

struct Searcher {
    const Graph& g;
    ColoringClass cls;
    int k;
    const std::vector<std::vector<int>>& near2;
    std::vector<int> assign;
    std::vector<uint64_t> vmask;   // colors incident to a vertex
    std::vector<uint64_t> sfmask;  // colors within edge distance <= 2
    std::vector<uint16_t> cnt2;
    std::vector<std::vector<int>> mate_c;   // per color, UR/acyclic only
    std::vector<std::vector<int>> class_e;  // per color, edge indices
    std::vector<char> cover_scratch;
    int max_used = 0;
    int uncolored = 0;

    std::atomic<long long>* nodes;
    long long budget;
    std::atomic<bool>* stop;
    bool timed_out = false;

    Searcher(const Graph& graph, ColoringClass c, int palette,
             const std::vector<std::vector<int>>& balls, std::atomic<long long>* node_ctr,
             long long node_budget, std::atomic<bool>* stop_flag)
        : g(graph),
          cls(c),
          k(palette),
          near2(balls),
          assign(graph.edge_count(), 0),
          vmask(graph.vertex_count(), 0),
          sfmask(graph.edge_count(), 0),
          cnt2(static_cast<size_t>(graph.edge_count()) * (palette + 1), 0),
          cover_scratch(graph.vertex_count(), 0),
          uncolored(graph.edge_count()),
          nodes(node_ctr),
          budget(node_budget),
          stop(stop_flag) {
        if (palette < 1 || palette > kMaxPalette)
            throw InputError("solver palette must be in [1," + std::to_string(kMaxPalette) +
                             "]");
        class_e.resize(palette + 1);
        bool track_mates =
            cls == ColoringClass::UniquelyRestricted || cls == ColoringClass::Acyclic;
        if (track_mates) mate_c.assign(palette + 1, std::vector<int>(g.vertex_count(), -1));
    }

    void put(int ei, int c) {
        const Edge e = g.edge(ei);
        assign[ei] = c;
        vmask[e.u] |= 1ull << c;
        vmask[e.v] |= 1ull << c;
        for (int f : near2[ei])
            if (++cnt2[static_cast<size_t>(f) * (k + 1) + c] == 1) sfmask[f] |= 1ull << c;
        class_e[c].push_back(ei);
        if (!mate_c.empty()) {
            mate_c[c][e.u] = e.v;
            mate_c[c][e.v] = e.u;
        }
        --uncolored;
    }

    void take(int ei, int c) {
        const Edge e = g.edge(ei);
        assign[ei] = 0;
        vmask[e.u] &= ~(1ull << c);
        vmask[e.v] &= ~(1ull << c);
        for (int f : near2[ei])
            if (--cnt2[static_cast<size_t>(f) * (k + 1) + c] == 0) sfmask[f] &= ~(1ull << c);
        class_e[c].pop_back();
        if (!mate_c.empty()) {
            mate_c[c][e.u] = -1;
            mate_c[c][e.v] = -1;
        }
        ++uncolored;
    }

    // Candidate colors respecting the matching constraint and the
    // color-symmetry cap (a color may be used only if <= 1 + max used).
    uint64_t candidates(int ei) const {
        const Edge e = g.edge(ei);
        int cap = std::min(k, max_used + 1);
        uint64_t capmask = (cap >= 63 ? ~0ull : ((1ull << (cap + 1)) - 1)) & ~1ull;
        return ~(vmask[e.u] | vmask[e.v]) & capmask;
    }

    bool class_legal(int ei, int c) {
        const Edge e = g.edge(ei);
        switch (cls) {
            case ColoringClass::Proper: return true;
            case ColoringClass::Strong: return !(sfmask[ei] >> c & 1);
            case ColoringClass::Semistrong: {
                if (!(sfmask[ei] >> c & 1)) return true;  // strongly available
                return semistrong_class_ok(ei, c);
            }
            case ColoringClass::UniquelyRestricted: {
                auto& mate = mate_c[c];
                mate[e.u] = e.v;
                mate[e.v] = e.u;
                bool cyc = detail::alternating_cycle_through(g, mate, e).has_value();
                mate[e.u] = -1;
                mate[e.v] = -1;
                return !cyc;
            }
            case ColoringClass::Acyclic: {
                uint64_t both = vmask[e.u] & vmask[e.v] & ~(1ull << c) & ~1ull;
                while (both) {
                    int d = std::countr_zero(both);
                    both &= both - 1;
                    // Deterministic walk in the (c,d) union from e.u; a
                    // bichromatic cycle through e ends at e.v on a d-edge.
                    int x = mate_c[d][e.u];
                    bool want_c = true;  // next expected color
                    int guard = g.vertex_count() + 1;
                    bool closed = false;
                    while (x >= 0 && x != e.v && guard-- > 0) {
                        bool used_c = want_c;
                        x = want_c ? mate_c[c][x] : mate_c[d][x];
                        want_c = !want_c;
                        if (x == e.v) closed = !used_c;  // arrived via a d-edge
                    }
                    if (closed) return false;
                }
                return true;
            }
        }
        return false;
    }

    bool semistrong_class_ok(int ei, int c) {
        // Pendancy of class_e[c] + ei within the induced covered subgraph.
        const Edge e = g.edge(ei);
        auto& cover = cover_scratch;
        cover[e.u] = cover[e.v] = 1;
        for (int f : class_e[c]) {
            cover[g.edge(f).u] = 1;
            cover[g.edge(f).v] = 1;
        }
        auto covered_degree = [&](int x) {
            int d = 0;
            for (int y : g.neighbors(x)) d += cover[y];
            return d;
        };
        bool ok = true;
        auto pendant = [&](const Edge& f) {
            return covered_degree(f.u) == 1 || covered_degree(f.v) == 1;
        };
        if (!pendant(e)) ok = false;
        for (int f : class_e[c])
            if (ok && !pendant(g.edge(f))) ok = false;
        cover[e.u] = cover[e.v] = 0;
        for (int f : class_e[c]) {
            cover[g.edge(f).u] = 0;
            cover[g.edge(f).v] = 0;
        }
        return ok;
    }

    int pick_edge() const {
        int best = -1, best_cnt = 65, best_ball = -1;
        for (int i = 0; i < g.edge_count(); ++i) {
            if (assign[i]) continue;
            int cnt = std::popcount(candidates(i));
            int ball = static_cast<int>(near2[i].size());
            if (cnt < best_cnt || (cnt == best_cnt && ball > best_ball)) {
                best = i;
                best_cnt = cnt;
                best_ball = ball;
            }
        }
        return best;
    }

    bool dfs() {
        if (stop && stop->load(std::memory_order_relaxed)) return false;
        long long seen = nodes->fetch_add(1, std::memory_order_relaxed) + 1;
        if (budget >= 0 && seen > budget) {
            timed_out = true;
            return false;
        }
        if (uncolored == 0) return true;
        int ei = pick_edge();
        uint64_t cand = candidates(ei);
        if (!cand) return false;
        while (cand) {
            int c = std::countr_zero(cand);
            cand &= cand - 1;
            if (!class_legal(ei, c)) continue;
            int saved_max = max_used;
            max_used = std::max(max_used, c);
            put(ei, c);
            if (dfs()) return true;
            take(ei, c);
            max_used = saved_max;
            if (timed_out || (stop && stop->load(std::memory_order_relaxed))) return false;
        }
        return false;
    }
};

struct DecideOutcome {
    bool sat = false;
    bool timed_out = false;
    PartialColoring witness;
};

// Expand the search tree breadth-first until it has enough leaves to feed the
// workers; each leaf is a legal assignment prefix.
void expand_tasks(Searcher& s, int depth, std::vector<std::vector<std::pair<int, int>>>& out,
                  std::vector<std::pair<int, int>>& prefix, size_t want) {
    if (depth == 0 || out.size() >= want || s.uncolored == 0) {
        out.push_back(prefix);
        return;
    }
    int ei = s.pick_edge();
    uint64_t cand = s.candidates(ei);
    while (cand) {
        int c = std::countr_zero(cand);
        cand &= cand - 1;
        if (!s.class_legal(ei, c)) continue;
        int saved_max = s.max_used;
        s.max_used = std::max(s.max_used, c);
        s.put(ei, c);
        prefix.push_back({ei, c});
        expand_tasks(s, depth - 1, out, prefix, want);
        prefix.pop_back();
        s.take(ei, c);
        s.max_used = saved_max;
    }
}

DecideOutcome decide(const Graph& g, ColoringClass cls, int k,
                     const std::vector<std::vector<int>>& balls, long long budget,
                     int jobs, std::atomic<long long>& nodes) {
    DecideOutcome out;
    if (jobs <= 1) {
        Searcher s(g, cls, k, balls, &nodes, budget, nullptr);
        bool sat = s.dfs();
        out.timed_out = s.timed_out;
        out.sat = sat;
        if (sat) {
            out.witness = PartialColoring(k, g.edge_count());
            out.witness.assign = s.assign;
        }
        return out;
    }
    // Parallel: carve the top of the tree into prefixes, then work-steal.
    std::vector<std::vector<std::pair<int, int>>> tasks;
    {
        Searcher seed(g, cls, k, balls, &nodes, -1, nullptr);
        std::vector<std::pair<int, int>> prefix;
        expand_tasks(seed, 6, tasks, prefix, static_cast<size_t>(4) * jobs);
    }
    if (tasks.empty()) {  // no legal prefix at all
        out.sat = false;
        return out;
    }
    std::atomic<bool> stop{false};
    std::atomic<size_t> next{0};
    std::atomic<bool> any_timeout{false};
    std::mutex witness_mu;
    std::optional<std::vector<int>> witness;
    auto worker = [&]() {
        while (!stop.load()) {
            size_t t = next.fetch_add(1);
            if (t >= tasks.size()) return;
            Searcher s(g, cls, k, balls, &nodes, budget, &stop);
            for (auto [ei, c] : tasks[t]) {
                s.max_used = std::max(s.max_used, c);
                s.put(ei, c);
            }
            if (s.dfs()) {
                std::lock_guard<std::mutex> lock(witness_mu);
                if (!witness) witness = s.assign;
                stop = true;
                return;
            }
            if (s.timed_out) {
                any_timeout = true;
                stop = true;
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (witness) {
        out.sat = true;
        out.witness = PartialColoring(k, g.edge_count());
        out.witness.assign = *witness;
    } else {
        out.timed_out = any_timeout.load();
    }
    return out;
}

}  // namespace

bool edges_conflict(const Graph& g, ColoringClass cls, const Edge& e, const Edge& f) {
    if (e == f) return false;
    if (e.covers(f.u) || e.covers(f.v)) return true;
    auto adj = [&](int a, int b) { return g.has_edge(a, b); };
    int a = e.u, b = e.v, c = f.u, d = f.v;
    switch (cls) {
        case ColoringClass::Proper:
        case ColoringClass::Acyclic: return false;
        case ColoringClass::Strong:
            return adj(a, c) || adj(a, d) || adj(b, c) || adj(b, d);
        case ColoringClass::Semistrong:
            return ((adj(a, c) || adj(a, d)) && (adj(b, c) || adj(b, d))) ||
                   ((adj(c, a) || adj(c, b)) && (adj(d, a) || adj(d, b)));
        case ColoringClass::UniquelyRestricted:
            return (adj(a, c) && adj(b, d)) || (adj(a, d) && adj(b, c));
    }
    return false;
}

std::vector<int> conflict_clique(const Graph& g, ColoringClass cls) {
    int m = g.edge_count();
    if (m == 0) return {};
    std::vector<std::vector<char>> conf(m, std::vector<char>(m, 0));
    std::vector<int> deg(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (edges_conflict(g, cls, g.edge(i), g.edge(j))) {
                conf[i][j] = conf[j][i] = 1;
                ++deg[i];
                ++deg[j];
            }
    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (deg[x] != deg[y]) return deg[x] > deg[y];
        return x < y;
    });
    std::vector<int> best;
    for (int seed : order) {
        std::vector<int> clique{seed};
        std::vector<char> cand(m, 0);
        for (int j = 0; j < m; ++j) cand[j] = conf[seed][j];
        while (true) {
            int pick = -1;
            for (int j : order)
                if (cand[j]) {
                    pick = j;
                    break;
                }
            if (pick < 0) break;
            clique.push_back(pick);
            for (int j = 0; j < m; ++j) cand[j] = cand[j] && conf[pick][j];
        }
        if (clique.size() > best.size()) best = clique;
    }
    std::sort(best.begin(), best.end());
    return best;
}

int conflict_clique_lower_bound(const Graph& g, ColoringClass cls) {
    return std::max<int>(1, static_cast<int>(conflict_clique(g, cls).size()));
}

std::optional<PartialColoring> feasible_coloring(const Graph& g, ColoringClass cls, int k,
                                                 SolveOptions opt, long long* nodes_out,
                                                 bool* timed_out) {
    if (timed_out) *timed_out = false;
    if (g.edge_count() == 0) return PartialColoring(std::max(1, k), 0);
    std::vector<std::vector<int>> balls = edge_balls2(g);
    std::atomic<long long> nodes{0};
    DecideOutcome out = decide(g, cls, k, balls, opt.node_budget, opt.jobs, nodes);
    if (nodes_out) *nodes_out = nodes.load();
    if (out.timed_out && timed_out) *timed_out = true;
    if (out.sat) return out.witness;
    return std::nullopt;
}

namespace {

PartialColoring greedy_coloring(const Graph& g, ColoringClass cls,
                                const std::vector<std::vector<int>>& balls) {
    int m = g.edge_count();
    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (balls[x].size() != balls[y].size()) return balls[x].size() > balls[y].size();
        return x < y;
    });
    PartialColoring phi(m, m);  // palette can't exceed one color per edge
    for (int ei : order) {
        for (int c = 1; c <= m; ++c)
            if (legal_color(g, phi, ei, c, cls)) {
                phi.assign[ei] = c;
                break;
            }
    }
    phi.k = std::max(1, phi.colors_used());
    return phi;
}

}  // namespace

SolveResult chromatic_index(const Graph& g, ColoringClass cls, SolveOptions opt) {
    if (g.edge_count() == 0) throw InputError("chromatic_index needs at least one edge");
    auto t0 = std::chrono::steady_clock::now();
    SolveResult res;
    std::vector<std::vector<int>> balls = edge_balls2(g);
    int lb = conflict_clique_lower_bound(g, cls);
    PartialColoring greedy = greedy_coloring(g, cls, balls);
    int ub = greedy.k;
    res.witness = greedy;
    std::atomic<long long> nodes{0};
    bool timed = false;
    int k = lb;
    for (; k < ub; ++k) {
        if (k > kMaxPalette)
            throw InputError("instance exceeds the solver palette cap");
        if (opt.node_budget >= 0 && nodes.load() >= opt.node_budget) {
            timed = true;
            break;
        }
        // The node counter is cumulative across deepening levels and is
        // compared against the absolute budget inside the search.
        DecideOutcome out = decide(g, cls, k, balls, opt.node_budget, opt.jobs, nodes);
        if (out.timed_out) {
            timed = true;
            break;
        }
        if (out.sat) {
            ub = k;
            res.witness = out.witness;
            break;
        }
    }
    res.nodes = nodes.load();
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    res.lower_bound = timed ? k : ub;
    res.upper_bound = ub;
    res.exact = !timed;
    if (res.exact) {
        res.optimum = ub;
        res.witness.k = ub;
        if (verify(g, res.witness, cls))
            throw std::logic_error("solver produced an invalid witness");
    }
    return res;
}

int brute_force_index(const Graph& g, ColoringClass cls) {
    int m = g.edge_count();
    if (m > 10) throw InputError("brute_force_index limited to 10 edges");
    if (m == 0) throw InputError("brute_force_index needs at least one edge");
    int best = m + 1;
    PartialColoring phi(m, m);
    // Restricted-growth enumeration: edge i may open at most one new block.
    auto rec = [&](auto&& self, int i, int blocks) -> void {
        if (blocks >= best) return;
        if (i == m) {
            PartialColoring cand(blocks, m);
            cand.assign = phi.assign;
            if (!verify(g, cand, cls)) best = blocks;
            return;
        }
        for (int c = 1; c <= std::min(blocks + 1, m); ++c) {
            phi.assign[i] = c;
            self(self, i + 1, std::max(blocks, c));
        }
        phi.assign[i] = 0;
    };
    rec(rec, 0, 0);
    return best;
}

}  // namespace ec
