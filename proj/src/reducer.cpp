#include "edgechroma/reducer.hpp"

#include <algorithm>
#include <set>

#include "edgechroma/density.hpp"
#include "edgechroma/exact.hpp"
#include "edgechroma/structure.hpp"

namespace ec {

namespace {

int palette_for(const Graph& g, DischargeCase which) {
    int d = g.vertex_count() ? max_degree(g) : 0;
    return 2 * d + (which == DischargeCase::EightThirds ? 2 : 4);
}

long long measure_8_3(const Graph& g) {
    return static_cast<long long>(g.vertex_count()) + g.edge_count();
}

std::pair<long long, long long> measure_14_5(const Graph& g) {
    long long plus2 = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (degree(g, v) >= 2) ++plus2;
    return {plus2, g.edge_count()};
}

std::vector<int> component_of(const Graph& g, int v) {
    for (auto& comp : connected_components(g))
        if (std::binary_search(comp.begin(), comp.end(), v)) return comp;
    return {};
}

// Shared detector context: core, classification, and label translation.
struct Ctx {
    const Graph& g;
    CoreView cv;
    StructureInfo info;
    int delta;

    explicit Ctx(const Graph& graph)
        : g(graph), cv(core_view(graph)), info(classify(cv.core)),
          delta(graph.vertex_count() ? max_degree(graph) : 0) {}

    int n_core() const { return cv.core.vertex_count(); }
    int cdeg(int x) const { return degree(cv.core, x); }
    int to_old(int x) const { return cv.core_to_old[x]; }
    int gdeg(int old_v) const { return degree(g, old_v); }
    const std::vector<int>& pend(int old_v) const { return cv.pendant_neighbors[old_v]; }
    bool has_pendants(int old_v) const { return !pend(old_v).empty(); }
};

AgendaItem item(Edge e, Strategy s, int phase, int claimed, bool soft,
                std::vector<Edge> avoid = {}) {
    return AgendaItem{e, s, phase, claimed, soft, std::move(avoid)};
}

ReductionStep pendant_deletion(const Ctx& c, const std::string& tag, int old_v,
                               Strategy strat, int claimed, bool soft) {
    ReductionStep st;
    st.tag = tag;
    int w = c.pend(old_v).front();
    st.delete_vs = {w};
    st.agenda.push_back(item(Edge(old_v, w), strat, 0, claimed, soft));
    return st;
}

ReductionStep terminal_step(const Ctx& c, const std::string& tag,
                            ReductionStep::Terminal kind, int anchor_old) {
    ReductionStep st;
    st.tag = tag;
    st.terminal = kind;
    st.payload = component_of(c.g, anchor_old);
    st.delete_vs = st.payload;
    return st;
}

// ---------------------------------------------------------------------------
// 8/3 catalog
// ---------------------------------------------------------------------------

std::optional<ReductionStep> detect_5_1(const Ctx& c) {
    for (int x = 0; x < c.n_core(); ++x) {
        if (c.cdeg(x) == 0)
            return terminal_step(c, "L5_1", ReductionStep::Terminal::Star, c.to_old(x));
        if (c.cdeg(x) == 1)
            return pendant_deletion(c, "L5_1", c.to_old(x), Strategy::GreedySA, 4, false);
    }
    return std::nullopt;
}

std::optional<ReductionStep> detect_cycle_core(const Ctx& c, const std::string& tag) {
    if (c.info.threads.cycle_components.empty()) return std::nullopt;
    int anchor = c.to_old(c.info.threads.cycle_components.front().front());
    return terminal_step(c, tag, ReductionStep::Terminal::CycleCore, anchor);
}

std::optional<ReductionStep> detect_5_2(const Ctx& c) {
    int D = c.delta;
    for (const Thread& t : c.info.threads.threads) {
        if (t.length() < 3) continue;
        std::vector<int> vs;
        for (int x : t.interior) vs.push_back(c.to_old(x));
        bool pendants = false;
        for (int v : vs)
            if (c.has_pendants(v)) pendants = true;
        ReductionStep st;
        st.tag = "L5_2";
        if (!pendants) {
            st.delete_vs = {vs[1]};
            st.agenda.push_back(item(Edge(vs[0], vs[1]), Strategy::GreedySA, 0, D + 1, false));
            st.agenda.push_back(item(Edge(vs[1], vs[2]), Strategy::GreedySA, 0, D + 1, false));
        } else {
            int l = t.length();
            for (int i = 0; i < l; ++i)
                for (int w : c.pend(vs[i])) {
                    st.delete_vs.push_back(w);
                    int bound = (i == 0 || i == l - 1) ? D : 2 * D - 2;
                    st.agenda.push_back(item(Edge(vs[i], w), Strategy::GreedySA, 0, bound, false));
                }
        }
        return st;
    }
    return std::nullopt;
}

std::optional<ReductionStep> detect_5_3(const Ctx& c) {
    int D = c.delta;
    for (const Thread& t : c.info.threads.threads) {
        if (t.length() != 2) continue;
        int V1 = c.to_old(t.interior[0]), V2 = c.to_old(t.interior[1]);
        int U1 = c.to_old(t.u1), U2 = c.to_old(t.u2);
        // (a) interior vertices must be 2-vertices of G
        for (int V : {V1, V2}) {
            if (!c.has_pendants(V)) continue;
            ReductionStep st;
            st.tag = "L5_3";
            st.delete_vs = c.pend(V);
            for (int w : c.pend(V))
                st.agenda.push_back(item(Edge(V, w), Strategy::GreedyA, 0, D, false));
            return st;
        }
        // (b) ends must differ
        if (U1 == U2) {
            ReductionStep st;
            st.tag = "L5_3";
            st.delete_es = {Edge(V1, V2)};
            st.agenda.push_back(item(Edge(V1, V2), Strategy::GreedySA, 0, D + 2, false));
            return st;
        }
        // (c) ends must have degree >= 4 in G
        for (auto [U, V] : {std::pair{U1, V1}, std::pair{U2, V2}}) {
            if (c.gdeg(U) > 3) continue;
            ReductionStep st;
            st.tag = "L5_3";
            st.delete_vs = {V};
            st.agenda.push_back(item(Edge(U, V), Strategy::GreedySA, 0, 1, false));
            st.agenda.push_back(item(Edge(V1, V2), Strategy::GreedySA, 0, D, false));
            return st;
        }
        // (d) ends must be pendant-free
        for (auto [U, V, OV, OU] :
             {std::tuple{U1, V1, V2, U2}, std::tuple{U2, V2, V1, U1}}) {
            if (!c.has_pendants(U)) continue;
            ReductionStep st;
            st.tag = "L5_3";
            st.delete_es = {Edge(V1, V2)};
            st.swap = SwapRule{Edge(U, V), Edge(OV, OU), Edge(U, V), Edge(U, c.pend(U).front())};
            st.agenda.push_back(item(Edge(V1, V2), Strategy::SwapThenGreedy, 0, 2, false));
            return st;
        }
    }
    return std::nullopt;
}

std::optional<ReductionStep> detect_5_4(const Ctx& c) {
    for (const Thread& t : c.info.threads.threads) {
        if (t.length() != 1) continue;
        if (c.cdeg(t.u1) > 4 && c.cdeg(t.u2) > 4) continue;
        int V = c.to_old(t.interior[0]);
        if (!c.has_pendants(V)) continue;
        return pendant_deletion(c, "L5_4", V, Strategy::GreedyA, 1, false);
    }
    return std::nullopt;
}

std::optional<ReductionStep> detect_5_5(const Ctx& c) {
    int D = c.delta;
    for (int x = 0; x < c.n_core(); ++x) {
        if (c.cdeg(x) != 3 || c.info.l(x, 1) != 3) continue;
        int V = c.to_old(x);
        ReductionStep st;
        st.tag = "L5_5";
        st.delete_vs = {V};
        for (int y : c.cv.core.neighbors(x))
            st.agenda.push_back(item(Edge(V, c.to_old(y)), Strategy::GreedySA, 0, D, false));
        for (int w : c.pend(V))
            st.agenda.push_back(item(Edge(V, w), Strategy::GreedySA, 0, 2 * D - 1, false));
        return st;
    }
    return std::nullopt;
}

std::optional<ReductionStep> detect_5_6(const Ctx& c) {
    int D = c.delta;
    for (int x = 0; x < c.n_core(); ++x)
        if (c.info.bad83[x] && c.has_pendants(c.to_old(x)))
            return pendant_deletion(c, "L5_6", c.to_old(x), Strategy::GreedySA, 2, false);
    for (int x = 0; x < c.n_core(); ++x) {
        if (!c.info.bad83[x] || c.info.bn83[x] == 0) continue;
        int v3 = -1;
        for (int y : c.cv.core.neighbors(x))
            if (c.info.bad83[y]) {
                v3 = y;
                break;
            }
        int V = c.to_old(x), V3 = c.to_old(v3);
        std::vector<int> twos;
        for (int y : c.cv.core.neighbors(v3))
            if (c.cdeg(y) == 2) twos.push_back(c.to_old(y));
        ReductionStep st;
        st.tag = "L5_6";
        st.delete_vs = {V3};
        st.agenda.push_back(item(Edge(V, V3), Strategy::GreedySA, 0, 2 * D - 4, true));
        for (int w : twos)
            st.agenda.push_back(item(Edge(V3, w), Strategy::GreedySA, 0, D - 1, true));
        return st;
    }
    return std::nullopt;
}

std::optional<ReductionStep> detect_5_7(const Ctx& c) {
    int D = c.delta;
    for (int x = 0; x < c.n_core(); ++x) {
        if (c.cdeg(x) != 3 || c.info.bad83[x]) continue;
        if (c.info.l(x, 1) + c.info.bn83[x] < 2) continue;
        int v1 = -1;
        for (int y : c.cv.core.neighbors(x))
            if (c.info.bad83[y]) {
                v1 = y;
                break;
            }
        if (v1 < 0) continue;  // needs a bad neighbor to reduce on
        int V = c.to_old(x), V1 = c.to_old(v1);
        std::vector<int> twos;
        for (int y : c.cv.core.neighbors(v1))
            if (c.cdeg(y) == 2) twos.push_back(c.to_old(y));
        ReductionStep st;
        st.tag = "L5_7";
        st.delete_vs = {V1};
        st.agenda.push_back(item(Edge(V, V1), Strategy::GreedySA, 0, D - 3, true));
        for (int w : twos)
            st.agenda.push_back(item(Edge(V1, w), Strategy::GreedySA, 0, D - 1, true));
        return st;
    }
    return std::nullopt;
}

std::optional<ReductionStep> detect_5_8(const Ctx& c) {
    int D = c.delta;
    for (int x = 0; x < c.n_core(); ++x) {
        int d = c.cdeg(x);
        if (d < 4) continue;
        int V = c.to_old(x);
        int dG = c.gdeg(V);
        int l1 = c.info.l(x, 1), l2 = c.info.l(x, 2);
        int bn = c.info.bn83[x];
        int lhs = c.info.l_total_weighted(x) + bn;
        bool claim1 = l2 >= 1 && l2 + l1 >= dG;
        bool claim2 = !claim1 && l2 >= 1 && l2 >= dG - 1;
        bool main = lhs > 2 * d - 4;
        if (!claim1 && !claim2 && !main) continue;
        // The incident 2-threads at x, in discovery order; interiors in
        // original labels ordered away from x.
        std::vector<std::array<int, 3>> th2;  // {first interior, second, far end}
        for (const Thread& t : c.info.threads.threads) {
            if (t.length() != 2) continue;
            if (t.u1 == x)
                th2.push_back({c.to_old(t.interior[0]), c.to_old(t.interior[1]), c.to_old(t.u2)});
            else if (t.u2 == x)
                th2.push_back({c.to_old(t.interior[1]), c.to_old(t.interior[0]), c.to_old(t.u1)});
        }
        ReductionStep st;
        st.tag = "L5_8";
        if (claim1) {
            st.delete_vs = {th2[0][0]};
            st.agenda.push_back(item(Edge(V, th2[0][0]), Strategy::GreedyA, 0, 3, false));
            st.agenda.push_back(item(Edge(th2[0][0], th2[0][1]), Strategy::GreedyA, 0, 3, false));
            return st;
        }
        if (claim2) {
            for (auto& t : th2) st.delete_vs.push_back(t[0]);
            for (auto& t : th2)
                st.agenda.push_back(item(Edge(V, t[0]), Strategy::GreedySA, 0, D + 1, false));
            for (auto& t : th2)
                st.agenda.push_back(item(Edge(t[0], t[1]), Strategy::GreedySA, 0, D + 1, false));
            return st;
        }
        // Main inequality violated; by the claims l2 is d-2 or d-3.
        if (l2 >= dG - 2) {
            for (auto& t : th2) st.delete_vs.push_back(t[0]);
            for (auto& t : th2)
                st.agenda.push_back(item(Edge(V, t[0]), Strategy::GreedyA, 0, D - 2, false));
            for (auto& t : th2)
                st.agenda.push_back(item(Edge(t[0], t[1]), Strategy::GreedySA, 0, D, false));
            return st;
        }
        if (bn == 0) {
            for (auto& t : th2) st.delete_vs.push_back(t[0]);
            for (auto& t : th2)
                st.agenda.push_back(item(Edge(V, t[0]), Strategy::GreedyA, 0, 2 * D - 5, true));
            for (auto& t : th2)
                st.agenda.push_back(item(Edge(t[0], t[1]), Strategy::GreedySA, 0, D - 1, true));
            return st;
        }
        int w1 = -1;
        for (int y : c.cv.core.neighbors(x))
            if (c.info.bad83[y]) {
                w1 = y;
                break;
            }
        int W1 = c.to_old(w1);
        std::vector<int> xs;
        for (int y : c.cv.core.neighbors(w1))
            if (c.cdeg(y) == 2) xs.push_back(c.to_old(y));
        st.delete_vs = {W1};
        for (auto& t : th2) st.delete_vs.push_back(t[0]);
        st.agenda.push_back(item(Edge(V, W1), Strategy::GreedyA, 0, 2 * D - 6, true));
        for (auto& t : th2)
            st.agenda.push_back(item(Edge(V, t[0]), Strategy::GreedyA, 0, 2 * D - 5, true,
                                     {Edge(t[1], t[2])}));
        for (int y : xs)
            st.agenda.push_back(item(Edge(W1, y), Strategy::GreedyA, 1, D - 2, true));
        for (auto& t : th2)
            st.agenda.push_back(item(Edge(t[0], t[1]), Strategy::GreedySA, 1, 2, true));
        return st;
    }
    return std::nullopt;
}

std::optional<ReductionStep> find_reducible_8_3(const Graph& g) {
    Ctx c(g);
    if (auto st = detect_5_1(c)) return st;
    if (auto st = detect_cycle_core(c, "CYCLE_CORE")) return st;
    if (auto st = detect_5_2(c)) return st;
    if (auto st = detect_5_3(c)) return st;
    if (auto st = detect_5_4(c)) return st;
    if (auto st = detect_5_5(c)) return st;
    if (auto st = detect_5_6(c)) return st;
    if (auto st = detect_5_7(c)) return st;
    if (auto st = detect_5_8(c)) return st;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// 14/5 catalog
// ---------------------------------------------------------------------------

std::optional<ReductionStep> detect_6_1(const Ctx& c) {
    for (int x = 0; x < c.n_core(); ++x) {
        if (c.cdeg(x) == 0)
            return terminal_step(c, "L6_1", ReductionStep::Terminal::Star, c.to_old(x));
        if (c.cdeg(x) == 1)
            return pendant_deletion(c, "L6_1", c.to_old(x), Strategy::GreedySA, 6, false);
    }
    return std::nullopt;
}

std::optional<ReductionStep> detect_6_2(const Ctx& c) {
    if (c.delta < 4) return std::nullopt;
    for (const auto& comp : connected_components(c.g)) {
        int core_max = 0;
        bool has_core = false;
        for (int v : comp)
            if (c.cv.old_to_core[v] >= 0) {
                has_core = true;
                core_max = std::max(core_max, c.cdeg(c.cv.old_to_core[v]));
            }
        if (has_core && core_max <= 3)
            return terminal_step(c, "L6_2", ReductionStep::Terminal::SmallCore, comp.front());
    }
    return std::nullopt;
}

std::optional<ReductionStep> detect_6_3(const Ctx& c) {
    for (const Edge& e : c.cv.core.edges())
        for (auto [x, u] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}})
            if (c.cdeg(x) == 2 && c.cdeg(u) <= 6 && c.has_pendants(c.to_old(x)))
                return pendant_deletion(c, "L6_3", c.to_old(x), Strategy::GreedyA, 1, false);
    return std::nullopt;
}

std::optional<ReductionStep> detect_6_4(const Ctx& c) {
    int D = c.delta;
    for (int x = 0; x < c.n_core(); ++x) {
        if (c.cdeg(x) != 3) continue;
        std::vector<int> twos;
        for (int y : c.cv.core.neighbors(x))
            if (c.cdeg(y) == 2) twos.push_back(c.to_old(y));
        if (twos.size() < 3) continue;
        int V = c.to_old(x);
        ReductionStep st;
        st.tag = "L6_4";
        st.delete_vs = {V};
        for (int w : twos)
            st.agenda.push_back(item(Edge(V, w), Strategy::GreedySA, 0, D + 2, false));
        for (int w : c.pend(V))
            st.agenda.push_back(item(Edge(V, w), Strategy::GreedySA, 0, 2 * D + 1, false));
        return st;
    }
    return std::nullopt;
}

std::optional<ReductionStep> detect_6_5(const Ctx& c) {
    int D = c.delta;
    auto bad = [&](int y) { return c.info.cls[y] == VertexClass::ThreeBad; };
    for (int x = 0; x < c.n_core(); ++x) {
        if (c.cdeg(x) != 3) continue;
        std::vector<int> bads;
        for (int y : c.cv.core.neighbors(x))
            if (bad(y)) bads.push_back(y);
        if (bads.size() < 3) continue;
        for (int y : bads)
            if (c.has_pendants(c.to_old(y)))
                return pendant_deletion(c, "L6_5", c.to_old(y), Strategy::GreedyA, 3, false);
        int V = c.to_old(x);
        int v1 = bads[0];
        int w1 = -1;
        for (int y : c.cv.core.neighbors(v1))
            if (c.cdeg(y) == 2) w1 = y;
        ReductionStep st;
        st.tag = "L6_5";
        st.delete_vs = {V};
        st.erase_after = {Edge(c.to_old(v1), c.to_old(w1))};
        for (int y : bads)
            st.agenda.push_back(item(Edge(V, c.to_old(y)), Strategy::GreedySA, 0, D - 1, true));
        st.agenda.push_back(
            item(Edge(c.to_old(v1), c.to_old(w1)), Strategy::GreedySA, 0, 4, false));
        for (int w : c.pend(V))
            st.agenda.push_back(item(Edge(V, w), Strategy::GreedySA, 0, 2 * D - 1, false));
        return st;
    }
    return std::nullopt;
}

std::optional<ReductionStep> detect_6_6(const Ctx& c) {
    for (int x = 0; x < c.n_core(); ++x)
        if (c.info.cls[x] == VertexClass::ThreeTerrible && c.has_pendants(c.to_old(x)))
            return pendant_deletion(c, "L6_6", c.to_old(x), Strategy::GreedySA, 4, false);
    return std::nullopt;
}

std::optional<ReductionStep> detect_6_7(const Ctx& c) {
    for (int x = 0; x < c.n_core(); ++x) {
        if (c.info.cls[x] != VertexClass::ThreeTerrible) continue;
        for (int w : c.cv.core.neighbors(x)) {
            if (c.cdeg(w) != 3 || c.info.cls[w] == VertexClass::ThreeGood) continue;
            int V = c.to_old(x), W = c.to_old(w);
            std::vector<int> twos;
            for (int y : c.cv.core.neighbors(x))
                if (c.cdeg(y) == 2) twos.push_back(c.to_old(y));
            ReductionStep st;
            st.tag = "L6_7";
            st.delete_vs = {V};
            st.agenda.push_back(item(Edge(V, W), Strategy::GreedySA, 0, 3, false));
            for (int t : twos)
                st.agenda.push_back(item(Edge(V, t), Strategy::GreedySA, 0, 4, false));
            return st;
        }
    }
    return std::nullopt;
}

std::optional<ReductionStep> detect_6_8(const Ctx& c) {
    int D = c.delta;
    auto bad = [&](int y) { return c.info.cls[y] == VertexClass::ThreeBad; };
    for (int ctr = 0; ctr < c.n_core(); ++ctr) {
        if (c.cdeg(ctr) != 3) continue;
        for (int u : c.cv.core.neighbors(ctr)) {
            if (!bad(u)) continue;
            int w = -1;
            for (int y : c.cv.core.neighbors(u))
                if (y != ctr && bad(y)) {
                    w = y;
                    break;
                }
            if (w < 0) continue;
            bool small_side = false;
            for (int y : c.cv.core.neighbors(ctr))
                if (y != u && c.cdeg(y) <= 3) small_side = true;
            if (!small_side) continue;
            if (c.has_pendants(c.to_old(u)))
                return pendant_deletion(c, "L6_8", c.to_old(u), Strategy::GreedyA, 3, false);
            if (c.has_pendants(c.to_old(w)))
                return pendant_deletion(c, "L6_8", c.to_old(w), Strategy::GreedyA, 3, false);
            int U = c.to_old(u);
            int u1 = -1;
            for (int y : c.cv.core.neighbors(u))
                if (c.cdeg(y) == 2) u1 = y;
            ReductionStep st;
            st.tag = "L6_8";
            st.delete_vs = {U};
            st.agenda.push_back(item(Edge(U, c.to_old(ctr)), Strategy::GreedyA, 0, 1, false));
            st.agenda.push_back(item(Edge(U, c.to_old(w)), Strategy::GreedyA, 0, D - 1, true));
            st.agenda.push_back(item(Edge(U, c.to_old(u1)), Strategy::GreedyA, 0, D, false));
            return st;
        }
    }
    return std::nullopt;
}

std::optional<ReductionStep> detect_6_9(const Ctx& c) {
    for (int x = 0; x < c.n_core(); ++x) {
        if (c.info.cls[x] != VertexClass::TwoPoor) continue;
        bool has_delta_nbr = false;
        for (int y : c.cv.core.neighbors(x))
            if (c.cdeg(y) == c.delta) has_delta_nbr = true;
        if (has_delta_nbr) continue;
        // v: the witness (2-vertex or terrible 3-neighbor), w: the other.
        auto witness = [&](int y) {
            return c.cdeg(y) == 2 || c.info.cls[y] == VertexClass::ThreeTerrible;
        };
        const auto& nbrs = c.cv.core.neighbors(x);
        int v = -1, w = -1;
        for (int y : nbrs)
            if (witness(y)) {
                v = y;
                break;
            }
        for (int y : nbrs)
            if (y != v) w = y;
        int U = c.to_old(x), V = c.to_old(v), W = c.to_old(w);
        ReductionStep st;
        st.tag = "L6_9";
        st.delete_es = {Edge(U, V)};
        int v1, v2 = -1;
        if (c.cdeg(v) == 2) {
            v1 = -1;
            for (int y : c.cv.core.neighbors(v))
                if (y != x) v1 = c.to_old(y);
        } else {  // terrible: v2 = its other 2-neighbor, v1 = the third
            v1 = -1;
            for (int y : c.cv.core.neighbors(v)) {
                if (y == x) continue;
                if (c.cdeg(y) == 2)
                    v2 = c.to_old(y);
                else
                    v1 = c.to_old(y);
            }
            if (v1 < 0) {  // both remaining neighbors are 2-vertices
                for (int y : c.cv.core.neighbors(v))
                    if (y != x && c.to_old(y) != v2) v1 = c.to_old(y);
            }
        }
        std::optional<Edge> swap_partner;
        if (c.has_pendants(W)) {
            swap_partner = Edge(W, c.pend(W).front());
        } else {
            st.add_pendant_at = W;  // surgery pendant, erased on return
        }
        if (v1 >= 0) st.swap = SwapRule{Edge(U, W), Edge(V, v1), Edge(U, W), swap_partner};
        if (v2 >= 0) st.erase_after.push_back(Edge(V, v2));
        st.agenda.push_back(item(Edge(U, V), Strategy::SwapThenGreedy, 0, 3, false));
        if (v2 >= 0)
            st.agenda.push_back(item(Edge(V, v2), Strategy::GreedySA, 0, 3, false));
        return st;
    }
    return std::nullopt;
}

std::optional<ReductionStep> detect_obs2(const Ctx& c) {
    int D = c.delta;
    for (int z = 0; z < c.n_core(); ++z) {
        std::vector<int> poors;
        for (int y : c.cv.core.neighbors(z))
            if (c.info.cls[y] == VertexClass::TwoPoor) poors.push_back(y);
        for (size_t i = 0; i < poors.size(); ++i)
            for (size_t j = i + 1; j < poors.size(); ++j)
                if (c.cv.core.has_edge(poors[i], poors[j])) {
                    Edge e(c.to_old(poors[i]), c.to_old(poors[j]));
                    ReductionStep st;
                    st.tag = "OBS_2";
                    st.delete_es = {e};
                    st.agenda.push_back(item(e, Strategy::GreedySA, 0, D + 4, false));
                    return st;
                }
    }
    return std::nullopt;
}

// The remaining bad-3-vertex conclusions need no detector of their own: a
// bad vertex beside a terrible one is already an L6_7 configuration (the
// terrible vertex has a non-good 3-neighbor) with the identical reduction, a
// bad pair is an (extended) L6_8 configuration, and a bad vertex with a poor
// 2-neighbor forces an L6_9 configuration at that 2-vertex.

std::optional<ReductionStep> detect_6_11(const Ctx& c) {
    int D = c.delta;
    auto bad = [&](int y) { return c.info.cls[y] == VertexClass::ThreeBad; };
    for (int x = 0; x < c.n_core(); ++x) {
        if (c.cdeg(x) != 4) continue;
        bool all_weak = true;
        for (int y : c.cv.core.neighbors(x))
            if (c.cdeg(y) != 2 && !bad(y)) all_weak = false;
        if (!all_weak) continue;
        for (int y : c.cv.core.neighbors(x))
            if (bad(y) && c.has_pendants(c.to_old(y)))
                return pendant_deletion(c, "L6_11", c.to_old(y), Strategy::GreedyA, 2, false);
        int V = c.to_old(x);
        if (c.has_pendants(V))
            return pendant_deletion(c, "L6_11", V, Strategy::GreedySA, D - 3, true);
        std::vector<int> nb;  // core neighbors, bads first
        for (int y : c.cv.core.neighbors(x))
            if (bad(y)) nb.push_back(y);
        for (int y : c.cv.core.neighbors(x))
            if (!bad(y)) nb.push_back(y);
        ReductionStep st;
        st.tag = "L6_11";
        st.delete_vs = {V};
        // Case 1: two of the neighbors are adjacent.
        for (size_t i = 0; i < nb.size() && st.agenda.empty(); ++i)
            for (size_t j = i + 1; j < nb.size() && st.agenda.empty(); ++j) {
                if (!c.cv.core.has_edge(nb[i], nb[j])) continue;
                int a = nb[i], b = nb[j];
                std::vector<int> rest;
                for (int y : nb)
                    if (y != a && y != b) rest.push_back(y);
                if (c.cdeg(a) == 2 || c.cdeg(b) == 2) {
                    if (c.cdeg(b) == 2) std::swap(a, b);  // a is the 2-vertex
                    st.agenda.push_back(
                        item(Edge(V, c.to_old(rest[1])), Strategy::GreedySA, 0, D - 2, true));
                    st.agenda.push_back(
                        item(Edge(V, c.to_old(rest[0])), Strategy::GreedySA, 0, D - 2, true));
                    st.agenda.push_back(
                        item(Edge(V, c.to_old(b)), Strategy::GreedySA, 0, D - 1, true));
                    st.agenda.push_back(
                        item(Edge(V, c.to_old(a)), Strategy::GreedySA, 0, 2 * D - 2, true));
                } else {  // both bad 3-vertices
                    st.erase_after = {Edge(c.to_old(a), c.to_old(b))};
                    st.agenda.push_back(
                        item(Edge(V, c.to_old(rest[0])), Strategy::GreedySA, 0, D - 2, true));
                    st.agenda.push_back(
                        item(Edge(V, c.to_old(rest[1])), Strategy::GreedySA, 0, D - 2, true));
                    st.agenda.push_back(
                        item(Edge(V, c.to_old(a)), Strategy::GreedySA, 0, 2 * D - 3, true));
                    st.agenda.push_back(
                        item(Edge(V, c.to_old(b)), Strategy::GreedySA, 0, 2 * D - 3, true));
                    st.agenda.push_back(item(Edge(c.to_old(a), c.to_old(b)),
                                             Strategy::GreedySA, 0, 2 * D, true));
                }
            }
        if (!st.agenda.empty()) return st;
        // Case 2: independent neighborhood.
        std::vector<int> bads;
        for (int y : nb)
            if (bad(y)) bads.push_back(y);
        if (bads.empty()) {
            for (int y : nb)
                st.agenda.push_back(item(Edge(V, c.to_old(y)), Strategy::GreedySA, 0, D + 1, true));
            return st;
        }
        for (int y : bads) {
            int w = -1;
            for (int z : c.cv.core.neighbors(y))
                if (c.cdeg(z) == 2) w = z;
            st.erase_after.push_back(Edge(c.to_old(y), c.to_old(w)));
        }
        for (int y : nb)
            st.agenda.push_back(item(Edge(V, c.to_old(y)), Strategy::GreedySA, 0, D, true));
        for (const Edge& f : st.erase_after)
            st.agenda.push_back(item(f, Strategy::GreedyA, 1, 2, false));
        return st;
    }
    return std::nullopt;
}

// Poor 2-neighbors of a core vertex, with each one's far neighbor.
struct PoorFan {
    std::vector<int> p;      // poor 2-neighbors (core labels)
    std::vector<int> w;      // their other neighbors (core labels)
};

PoorFan poor_fan(const Ctx& c, int x) {
    PoorFan f;
    for (int y : c.cv.core.neighbors(x)) {
        if (c.info.cls[y] != VertexClass::TwoPoor) continue;
        f.p.push_back(y);
        int other = -1;
        for (int z : c.cv.core.neighbors(y))
            if (z != x) other = z;
        f.w.push_back(other);
    }
    return f;
}

std::optional<ReductionStep> detect_6_12(const Ctx& c) {
    int D = c.delta;
    for (int x = 0; x < c.n_core(); ++x) {
        if (c.cdeg(x) != 4) continue;
        PoorFan f = poor_fan(c, x);
        int big = 0;
        for (int y : c.cv.core.neighbors(x))
            if (c.cdeg(y) >= 4) ++big;
        int V = c.to_old(x);
        if (f.p.size() >= 2) {
            ReductionStep st;
            st.tag = "L6_12";
            int P1 = c.to_old(f.p[0]), P2 = c.to_old(f.p[1]);
            int W1 = c.to_old(f.w[0]), W2 = c.to_old(f.w[1]);
            st.delete_vs = {P1, P2};
            st.agenda.push_back(item(Edge(V, P1), Strategy::GreedySA, 0, 2, false));
            st.agenda.push_back(item(Edge(V, P2), Strategy::GreedySA, 0, 2, false));
            st.agenda.push_back(item(Edge(P1, W1), Strategy::GreedySA, 0, D, false));
            st.agenda.push_back(item(Edge(P2, W2), Strategy::GreedySA, 0, D, false));
            return st;
        }
        if (f.p.size() == 1 && big < 2) {
            int p1 = f.p[0], w1 = f.w[0];
            int P1 = c.to_old(p1), W1 = c.to_old(w1);
            ReductionStep st;
            st.tag = "L6_12";
            st.delete_vs = {P1};
            if (c.cdeg(w1) == 2) {
                st.agenda.push_back(item(Edge(V, P1), Strategy::GreedyA, 0, D - 3, true));
                st.agenda.push_back(item(Edge(P1, W1), Strategy::GreedySA, 0, D + 1, false));
            } else {  // terrible
                int x1 = -1;
                for (int z : c.cv.core.neighbors(w1))
                    if (z != p1 && c.cdeg(z) == 2) x1 = z;
                st.erase_after = {Edge(W1, c.to_old(x1))};
                st.agenda.push_back(item(Edge(V, P1), Strategy::GreedyA, 0, D - 3, true));
                st.agenda.push_back(item(Edge(P1, W1), Strategy::GreedySA, 0, D, false));
                st.agenda.push_back(
                    item(Edge(W1, c.to_old(x1)), Strategy::GreedySA, 0, 4, false));
            }
            return st;
        }
    }
    return std::nullopt;
}

std::optional<ReductionStep> detect_6_13(const Ctx& c) {
    int D = c.delta;
    for (int x = 0; x < c.n_core(); ++x) {
        if (c.cdeg(x) != D) continue;
        PoorFan f = poor_fan(c, x);
        if (static_cast<int>(f.p.size()) < D - 1) continue;
        ReductionStep st;
        st.tag = "L6_13";
        int V = c.to_old(x);
        int take = D - 1;
        for (int i = 0; i < take; ++i) st.delete_vs.push_back(c.to_old(f.p[i]));
        for (int i = 0; i < take; ++i)
            st.agenda.push_back(
                item(Edge(V, c.to_old(f.p[i])), Strategy::GreedySA, 0, D + 2, false));
        for (int i = 0; i < take; ++i)
            st.agenda.push_back(item(Edge(c.to_old(f.p[i]), c.to_old(f.w[i])),
                                     Strategy::GreedySA, 1, 2, false));
        return st;
    }
    return std::nullopt;
}

std::optional<ReductionStep> detect_6_14(const Ctx& c) {
    int D = c.delta;
    auto terrible = [&](int y) { return c.info.cls[y] == VertexClass::ThreeTerrible; };
    for (int x = 0; x < c.n_core(); ++x) {
        if (c.cdeg(x) != 5) continue;
        PoorFan f = poor_fan(c, x);
        if (f.p.size() < 3) continue;
        int V = c.to_old(x);
        // Reorder so terrible far-ends come first.
        std::vector<int> idx{0, 1, 2};
        std::stable_sort(idx.begin(), idx.end(),
                         [&](int a, int b) { return terrible(f.w[a]) > terrible(f.w[b]); });
        std::vector<int> P(3), W(3);
        for (int i = 0; i < 3; ++i) {
            P[i] = c.to_old(f.p[idx[i]]);
            W[i] = c.to_old(f.w[idx[i]]);
        }
        int terr = 0;
        for (int i = 0; i < 3; ++i)
            if (terrible(f.w[idx[i]])) ++terr;
        ReductionStep st;
        st.tag = "L6_14";
        st.delete_vs = {P[0], P[1], P[2]};
        auto e = [&](int i) { return Edge(V, P[i]); };
        auto ff = [&](int i) { return Edge(P[i], W[i]); };
        if (terr == 0) {
            for (int i = 0; i < 3; ++i)
                st.agenda.push_back(item(e(i), Strategy::GreedySA, 0, 3, false));
            for (int i = 0; i < 3; ++i)
                st.agenda.push_back(item(ff(i), Strategy::GreedySA, 0, D + 2, false));
            return st;
        }
        if (terr == 1) {
            st.agenda.push_back(item(e(0), Strategy::GreedySA, 0, 2, false));
            st.agenda.push_back(item(e(1), Strategy::GreedySA, 0, 3, false));
            st.agenda.push_back(item(e(2), Strategy::GreedySA, 0, 3, false));
            st.agenda.push_back(item(ff(0), Strategy::GreedySA, 0, D, false));
            st.agenda.push_back(item(ff(1), Strategy::GreedySA, 0, D + 2, false));
            st.agenda.push_back(item(ff(2), Strategy::GreedySA, 0, D + 2, false));
            return st;
        }
        // Two or three terrible far-ends.
        bool coincide = false;
        int ci = -1, cj = -1;
        for (int i = 0; i < 3 && !coincide; ++i)
            for (int j = i + 1; j < 3 && !coincide; ++j)
                if (W[i] == W[j] && terrible(f.w[idx[i]]) && terrible(f.w[idx[j]])) {
                    coincide = true;
                    ci = i;
                    cj = j;
                }
        if (coincide) {
            int other = 3 - ci - cj;
            st.agenda.push_back(item(e(other), Strategy::GreedySA, 0, 2, false));
            st.agenda.push_back(item(e(ci), Strategy::GreedySA, 0, 3, false));
            st.agenda.push_back(item(e(cj), Strategy::GreedySA, 0, 3, false));
            st.agenda.push_back(item(ff(other), Strategy::GreedySA, 0, D, false));
            st.agenda.push_back(item(ff(ci), Strategy::GreedySA, 0, D + 2, false));
            st.agenda.push_back(item(ff(cj), Strategy::GreedySA, 0, D + 2, false));
            return st;
        }
        // Distinct terribles: erase their third legs, color e's, then legs,
        // then the f's.
        for (int i = 0; i < terr; ++i) {
            int xothr = -1;
            for (int z : c.cv.core.neighbors(f.w[idx[i]]))
                if (z != f.p[idx[i]] && c.cdeg(z) == 2) xothr = z;
            st.erase_after.push_back(Edge(W[i], c.to_old(xothr)));
        }
        for (int i = 0; i < 3; ++i)
            st.agenda.push_back(item(e(i), Strategy::GreedySA, 0, 3, false));
        for (const Edge& gedge : st.erase_after)
            st.agenda.push_back(item(gedge, Strategy::GreedySA, 1, 3, true));
        for (int i = 0; i < 3; ++i)
            st.agenda.push_back(item(ff(i), Strategy::GreedySA, 2, 2, true));
        return st;
    }
    return std::nullopt;
}

std::optional<ReductionStep> detect_6_15(const Ctx& c) {
    int D = c.delta;
    auto terrible = [&](int y) { return c.info.cls[y] == VertexClass::ThreeTerrible; };
    for (int x = 0; x < c.n_core(); ++x) {
        if (c.cdeg(x) != 5) continue;
        PoorFan f = poor_fan(c, x);
        if (f.p.size() != 2) continue;
        int big = 0;
        for (int y : c.cv.core.neighbors(x))
            if (c.cdeg(y) >= 4) ++big;
        if (big >= 2) continue;
        std::vector<int> idx{0, 1};
        std::stable_sort(idx.begin(), idx.end(),
                         [&](int a, int b) { return terrible(f.w[a]) > terrible(f.w[b]); });
        int V = c.to_old(x);
        std::vector<int> P(2), W(2);
        for (int i = 0; i < 2; ++i) {
            P[i] = c.to_old(f.p[idx[i]]);
            W[i] = c.to_old(f.w[idx[i]]);
        }
        int terr = (terrible(f.w[idx[0]]) ? 1 : 0) + (terrible(f.w[idx[1]]) ? 1 : 0);
        ReductionStep st;
        st.tag = "L6_15";
        st.delete_vs = {P[0], P[1]};
        auto e = [&](int i) { return Edge(V, P[i]); };
        auto ff = [&](int i) { return Edge(P[i], W[i]); };
        if (W[0] == W[1] || terr == 0) {
            st.agenda.push_back(item(e(0), Strategy::GreedyA, 0, D - 3, true));
            st.agenda.push_back(item(e(1), Strategy::GreedyA, 0, D - 3, true));
            st.agenda.push_back(item(ff(0), Strategy::GreedySA, 0, D + 1, false));
            st.agenda.push_back(item(ff(1), Strategy::GreedySA, 0, D + 1, false));
            return st;
        }
        if (terr == 1) {
            st.agenda.push_back(item(e(0), Strategy::GreedyA, 0, D - 4, true));
            st.agenda.push_back(item(e(1), Strategy::GreedyA, 0, D - 3, true));
            st.agenda.push_back(item(ff(0), Strategy::GreedySA, 0, D - 1, true));
            st.agenda.push_back(item(ff(1), Strategy::GreedySA, 0, D + 1, false));
            return st;
        }
        for (int i = 0; i < 2; ++i) {
            int xothr = -1;
            for (int z : c.cv.core.neighbors(f.w[idx[i]]))
                if (z != f.p[idx[i]] && c.cdeg(z) == 2) xothr = z;
            st.erase_after.push_back(Edge(W[i], c.to_old(xothr)));
        }
        st.agenda.push_back(item(e(0), Strategy::GreedyA, 0, D - 3, true));
        st.agenda.push_back(item(e(1), Strategy::GreedyA, 0, D - 3, true));
        st.agenda.push_back(item(st.erase_after[0], Strategy::GreedySA, 0, 4, false));
        st.agenda.push_back(item(st.erase_after[1], Strategy::GreedySA, 0, 4, false));
        st.agenda.push_back(item(ff(0), Strategy::GreedySA, 1, 1, true));
        st.agenda.push_back(item(ff(1), Strategy::GreedySA, 1, 1, true));
        return st;
    }
    return std::nullopt;
}

std::optional<ReductionStep> detect_6_16(const Ctx& c) {
    int D = c.delta;
    auto terrible = [&](int y) { return c.info.cls[y] == VertexClass::ThreeTerrible; };
    for (int x = 0; x < c.n_core(); ++x) {
        if (c.cdeg(x) != 5) continue;
        PoorFan f = poor_fan(c, x);
        if (f.p.size() != 1) continue;
        int big = 0;
        for (int y : c.cv.core.neighbors(x))
            if (c.cdeg(y) >= 4) ++big;
        if (big >= 1) continue;
        int V = c.to_old(x), P1 = c.to_old(f.p[0]), W1 = c.to_old(f.w[0]);
        ReductionStep st;
        st.tag = "L6_16";
        st.delete_vs = {P1};
        if (!terrible(f.w[0])) {
            st.agenda.push_back(item(Edge(V, P1), Strategy::GreedyA, 0, 2 * D - 9, true));
            st.agenda.push_back(item(Edge(P1, W1), Strategy::GreedySA, 0, D, false));
            return st;
        }
        int x1 = -1;
        for (int z : c.cv.core.neighbors(f.w[0]))
            if (z != f.p[0] && c.cdeg(z) == 2) x1 = z;
        st.erase_after = {Edge(W1, c.to_old(x1))};
        st.agenda.push_back(item(Edge(V, P1), Strategy::GreedyA, 0, 2 * D - 9, true));
        st.agenda.push_back(item(Edge(P1, W1), Strategy::GreedySA, 0, D - 1, true));
        st.agenda.push_back(item(Edge(W1, c.to_old(x1)), Strategy::GreedySA, 0, 4, false));
        return st;
    }
    return std::nullopt;
}

std::optional<ReductionStep> detect_6_17_18(const Ctx& c) {
    int D = c.delta;
    if (D < 6) return std::nullopt;
    for (int x = 0; x < c.n_core(); ++x) {
        if (c.cdeg(x) != D) continue;
        PoorFan f = poor_fan(c, x);
        int poor = static_cast<int>(f.p.size());
        int big = 0;
        for (int y : c.cv.core.neighbors(x))
            if (c.cdeg(y) >= 4) ++big;
        bool is17 = poor == D - 2 && big < 2;
        bool is18 = poor == D - 3 && big == 0;
        if (!is17 && !is18) continue;
        int V = c.to_old(x);
        ReductionStep st;
        st.tag = is17 ? "L6_17" : "L6_18";
        for (int y : f.p) st.delete_vs.push_back(c.to_old(y));
        for (size_t i = 0; i < f.p.size(); ++i)
            st.agenda.push_back(item(Edge(V, c.to_old(f.p[i])),
                                     is17 ? Strategy::GreedySA : Strategy::GreedyA, 0,
                                     is17 ? D - 1 : 2 * D - 7, true));
        for (size_t i = 0; i < f.p.size(); ++i)
            st.agenda.push_back(item(Edge(c.to_old(f.p[i]), c.to_old(f.w[i])),
                                     Strategy::GreedySA, 1, 2, false));
        return st;
    }
    return std::nullopt;
}

std::optional<ReductionStep> find_reducible_14_5(const Graph& g) {
    Ctx c(g);
    if (auto st = detect_6_1(c)) return st;
    if (auto st = detect_cycle_core(c, "CYCLE_CORE")) return st;
    if (auto st = detect_6_2(c)) return st;
    if (auto st = detect_6_3(c)) return st;
    if (auto st = detect_6_4(c)) return st;
    if (auto st = detect_6_5(c)) return st;
    if (auto st = detect_6_6(c)) return st;
    if (auto st = detect_6_7(c)) return st;
    if (auto st = detect_6_8(c)) return st;
    if (auto st = detect_6_9(c)) return st;
    if (auto st = detect_obs2(c)) return st;
    if (auto st = detect_6_11(c)) return st;
    if (auto st = detect_6_12(c)) return st;
    if (auto st = detect_6_13(c)) return st;
    if (auto st = detect_6_14(c)) return st;
    if (auto st = detect_6_15(c)) return st;
    if (auto st = detect_6_16(c)) return st;
    if (auto st = detect_6_17_18(c)) return st;
    return std::nullopt;
}

}  // namespace

std::optional<ReductionStep> find_reducible(const Graph& g, DischargeCase which) {
    if (g.vertex_count() == 0) return std::nullopt;
    return which == DischargeCase::EightThirds ? find_reducible_8_3(g)
                                               : find_reducible_14_5(g);
}

// ---------------------------------------------------------------------------
// Step execution
// ---------------------------------------------------------------------------

namespace {

// Direct constructions for terminal steps: all pendant-edge classes are
// automatically semistrong (the leaf endpoint stays pendant in G_M), so
// per-vertex-distinct fresh colors on pendant edges always compose with a
// semistrong coloring of the core part.
void color_pendants_fresh(const Graph& g, const std::vector<int>& comp, int base,
                          PartialColoring& phi, int k) {
    for (int v : comp) {
        if (degree(g, v) <= 1) continue;
        int next = base;
        for (int w : g.neighbors(v))
            if (degree(g, w) == 1) {
                ++next;
                if (next > k) throw std::logic_error("terminal pendant palette overflow");
                phi.assign[g.edge_index(v, w)] = next;
            }
    }
}

void run_terminal(const Graph& g, const ReductionStep& step, int k, PartialColoring& phi) {
    const std::vector<int>& comp = step.payload;
    if (step.terminal == ReductionStep::Terminal::Star) {
        int center = -1;
        for (int v : comp)
            if (degree(g, v) >= 1 &&
                (center < 0 || degree(g, v) > degree(g, center)))
                center = v;
        if (center < 0) return;  // isolated vertex, nothing to color
        int next = 0;
        for (int w : g.neighbors(center)) {
            ++next;
            if (next > k) throw std::logic_error("star palette overflow");
            phi.assign[g.edge_index(center, w)] = next;
        }
        return;
    }
    // Cycle-plus-pendants or small-core component: color the 2+-core exactly,
    // then pendant edges from a fresh per-vertex pool.
    std::vector<int> core_vs;
    for (int v : comp)
        if (degree(g, v) >= 2) core_vs.push_back(v);
    DeleteResult sub = induced_subgraph(g, core_vs);
    int cap = step.terminal == ReductionStep::Terminal::CycleCore ? std::min(4, k)
                                                                  : std::min(9, k);
    auto colored = feasible_coloring(sub.graph, ColoringClass::Semistrong, cap);
    if (!colored) throw std::logic_error("terminal core coloring infeasible");
    int base = 0;
    for (int i = 0; i < sub.graph.edge_count(); ++i) {
        const Edge& e = sub.graph.edge(i);
        int gi = g.edge_index(sub.new_to_old[e.u], sub.new_to_old[e.v]);
        phi.assign[gi] = colored->assign[i];
        base = std::max(base, colored->assign[i]);
    }
    color_pendants_fresh(g, comp, base, phi, k);
}

std::vector<int> availability(const Graph& g, const PartialColoring& phi,
                              const AgendaItem& it) {
    int ei = g.edge_index(it.e);
    std::vector<int> avail = it.strategy == Strategy::GreedyA
                                 ? available_set(g, phi, ei, ColoringClass::Semistrong)
                                 : strongly_available_set(g, phi, ei);
    if (!it.avoid.empty()) {
        std::set<int> barred;
        for (const Edge& a : it.avoid) {
            int ai = g.edge_index(a);
            if (ai >= 0 && phi.assign[ai] != 0) barred.insert(phi.assign[ai]);
        }
        std::erase_if(avail, [&](int c) { return barred.count(c) > 0; });
    }
    return avail;
}

}  // namespace

ColorResult apply_and_extend(const Graph& g, const ReductionStep& step,
                             DischargeCase which,
                             const std::function<ColorResult(const Graph&)>& recurse,
                             ReducerOptions opt) {
    int k = palette_for(g, which);
    ColorResult out;
    out.palette = k;

    // Build the reduced graph H plus the H-edge -> g-edge translation.
    Graph h;
    std::vector<int> new_to_old;  // vertex map (identity for edge deletions)
    bool vertex_deleted = !step.delete_vs.empty();
    int surgery_vertex = -1;
    if (vertex_deleted) {
        DeleteResult del = delete_vertices(g, step.delete_vs);
        h = std::move(del.graph);
        new_to_old = std::move(del.new_to_old);
    } else {
        Graph base = delete_edges(g, step.delete_es);
        new_to_old.resize(base.vertex_count());
        for (size_t i = 0; i < new_to_old.size(); ++i) new_to_old[i] = static_cast<int>(i);
        if (step.add_pendant_at) {
            std::vector<Edge> es = base.edges();
            surgery_vertex = base.vertex_count();
            es.emplace_back(*step.add_pendant_at, surgery_vertex);
            h = Graph::from_edges(base.vertex_count() + 1, es);
            new_to_old.push_back(-1);
        } else {
            h = std::move(base);
        }
    }

    // The lexicographic measure must strictly decrease.
    if (which == DischargeCase::EightThirds) {
        if (measure_8_3(h) >= measure_8_3(g))
            throw std::logic_error("reduction step does not shrink |V|+|E| (" + step.tag + ")");
    } else {
        if (measure_14_5(h) >= measure_14_5(g))
            throw std::logic_error("reduction step does not shrink the 14/5 measure (" +
                                   step.tag + ")");
    }

    ColorResult sub = recurse(h);
    out.trace = std::move(sub.trace);
    out.trace.push_back(step.tag);
    out.audit = std::move(sub.audit);

    // Map the recursed coloring back onto g.
    PartialColoring phi(k, g.edge_count());
    int surgery_color = 0;
    for (int i = 0; i < h.edge_count(); ++i) {
        int c = sub.coloring.assign[i];
        if (c == 0) continue;
        const Edge& e = h.edge(i);
        if (e.u == surgery_vertex || e.v == surgery_vertex) {
            surgery_color = c;
            continue;
        }
        int gi = g.edge_index(new_to_old[e.u], new_to_old[e.v]);
        if (gi < 0) throw std::logic_error("reduced edge missing in parent graph");
        phi.assign[gi] = c;
    }

    if (step.terminal != ReductionStep::Terminal::None) {
        run_terminal(g, step, k, phi);
        if (!phi.total()) throw std::logic_error("terminal step left edges uncolored");
        if (opt.paranoid && verify(g, phi, ColoringClass::Semistrong))
            throw std::logic_error("terminal step produced an invalid coloring");
        out.coloring = std::move(phi);
        return out;
    }

    // Exchange preconditioning, then erasures, then the greedy agenda.
    if (step.swap) {
        const SwapRule& sw = *step.swap;
        int ca = g.edge_index(sw.cond_a), cb = g.edge_index(sw.cond_b);
        if (ca >= 0 && cb >= 0 && phi.assign[ca] != 0 && phi.assign[ca] == phi.assign[cb]) {
            int xi = g.edge_index(sw.swap_x);
            if (sw.swap_y) {
                int yi = g.edge_index(*sw.swap_y);
                std::swap(phi.assign[xi], phi.assign[yi]);
            } else {
                std::swap(phi.assign[xi], surgery_color);
            }
        }
    }
    for (const Edge& e : step.erase_after) {
        int ei = g.edge_index(e);
        if (ei < 0) throw std::logic_error("erase_after edge missing");
        phi.assign[ei] = 0;
    }
    if (opt.paranoid && verify(g, phi, ColoringClass::Semistrong))
        throw std::logic_error("mapped-back partial coloring invalid (" + step.tag + ")");

    int max_phase = 0;
    for (const AgendaItem& it : step.agenda) max_phase = std::max(max_phase, it.phase);
    for (int phase = 0; phase <= max_phase; ++phase) {
        // Audit availability against the claimed phase-start bounds.
        for (const AgendaItem& it : step.agenda) {
            if (it.phase != phase) continue;
            AuditRecord rec;
            rec.tag = step.tag;
            rec.e = it.e;
            rec.strategy = it.strategy;
            rec.claimed = it.claimed;
            rec.observed = static_cast<int>(availability(g, phi, it).size());
            rec.soft = it.soft;
            out.audit.push_back(rec);
        }
        for (const AgendaItem& it : step.agenda) {
            if (it.phase != phase) continue;
            std::vector<int> avail = availability(g, phi, it);
            if (avail.empty())
                throw ColorError(ColorError::Kind::ExtensionExhausted,
                                 "no available color for (" + std::to_string(it.e.u) + "," +
                                     std::to_string(it.e.v) + ") in step " + step.tag,
                                 {}, step.tag);
            phi.assign[g.edge_index(it.e)] = avail.front();
        }
    }
    if (!phi.total())
        throw std::logic_error("agenda did not cover all uncolored edges (" + step.tag + ")");
    if (opt.paranoid && verify(g, phi, ColoringClass::Semistrong))
        throw std::logic_error("extended coloring invalid (" + step.tag + ")");
    out.coloring = std::move(phi);
    return out;
}

// ---------------------------------------------------------------------------
// Driver
// ---------------------------------------------------------------------------

namespace {

ColorResult color_connected(const Graph& g, DischargeCase which, const ReducerOptions& opt);

ColorResult color_internal(const Graph& g, DischargeCase which, const ReducerOptions& opt) {
    int k = std::max(1, palette_for(g, which));
    ColorResult out;
    out.palette = k;
    out.coloring = PartialColoring(k, g.edge_count());
    if (g.edge_count() == 0) return out;
    auto comps = connected_components(g);
    if (comps.size() == 1) return color_connected(g, which, opt);
    for (const auto& comp : comps) {
        if (comp.size() == 1) continue;
        DeleteResult sub = induced_subgraph(g, comp);
        ColorResult part = color_connected(sub.graph, which, opt);
        for (int i = 0; i < sub.graph.edge_count(); ++i) {
            const Edge& e = sub.graph.edge(i);
            out.coloring.assign[g.edge_index(sub.new_to_old[e.u], sub.new_to_old[e.v])] =
                part.coloring.assign[i];
        }
        out.trace.insert(out.trace.end(), part.trace.begin(), part.trace.end());
        out.audit.insert(out.audit.end(), part.audit.begin(), part.audit.end());
    }
    return out;
}

ColorResult color_connected(const Graph& g, DischargeCase which, const ReducerOptions& opt) {
    int delta = max_degree(g);
    int k = palette_for(g, which);
    if (delta <= 3 || g.edge_count() <= 14) {
        SolveResult sr = chromatic_index(g, ColoringClass::Semistrong);
        if (sr.optimum > k)
            throw std::logic_error("fallback exact optimum exceeds the case bound");
        ColorResult out;
        out.palette = k;
        out.coloring = sr.witness;
        out.trace.push_back("EXACT");
        return out;
    }
    auto step = find_reducible(g, which);
    if (!step)
        throw ColorError(ColorError::Kind::Irreducible,
                         "no reducible configuration on a graph meeting the precondition");
    auto recurse = [&](const Graph& h) { return color_internal(h, which, opt); };
    return apply_and_extend(g, *step, which, recurse, opt);
}

}  // namespace

ColorResult color(const Graph& g, DischargeCase which, ReducerOptions opt) {
    if (g.vertex_count() == 0) throw InputError("color: empty graph");
    MadBelowResult gate = mad_below(g, discharge_bound(which));
    if (!gate.holds)
        throw ColorError(ColorError::Kind::Precondition,
                         "mad(G) = " + to_fraction_string(gate.value) +
                             " is not below " + to_fraction_string(discharge_bound(which)),
                         gate.witness);
    ColorResult out = color_internal(g, which, opt);
    if (!out.coloring.total()) throw std::logic_error("color: result not total");
    if (auto bad = verify(g, out.coloring, ColoringClass::Semistrong))
        throw std::logic_error("color: result fails semistrong verification: " + bad->detail);
    if (out.coloring.colors_used() > out.palette)
        throw std::logic_error("color: palette bound exceeded");
    out.coloring.k = out.palette;
    return out;
}

}  // namespace ec
