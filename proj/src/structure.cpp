#include "edgechroma/structure.hpp"

#include <algorithm>

namespace ec {

CoreView core_view(const Graph& g) {
    std::vector<int> ones;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (degree(g, v) == 1) ones.push_back(v);
    DeleteResult del = delete_vertices(g, ones);
    CoreView cv;
    cv.core = std::move(del.graph);
    cv.old_to_core = std::move(del.old_to_new);
    cv.core_to_old = std::move(del.new_to_old);
    cv.pendant_neighbors.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int w : g.neighbors(v))
            if (degree(g, w) == 1) cv.pendant_neighbors[v].push_back(w);
    return cv;
}

ThreadsResult find_threads(const Graph& core) {
    ThreadsResult out;
    int n = core.vertex_count();
    std::vector<char> consumed(n, 0);
    for (int u = 0; u < n; ++u) {
        if (degree(core, u) < 3) continue;
        for (int w : core.neighbors(u)) {
            if (degree(core, w) != 2 || consumed[w]) continue;
            Thread t;
            t.u1 = u;
            int prev = u, cur = w;
            bool ok = true;
            while (true) {
                t.interior.push_back(cur);
                consumed[cur] = 1;
                int next = -1;
                for (int y : core.neighbors(cur))
                    if (y != prev) next = y;
                if (next < 0) {  // dead end at a 1-vertex run; not a thread
                    ok = false;
                    break;
                }
                if (degree(core, next) >= 3) {
                    t.u2 = next;
                    break;
                }
                if (degree(core, next) <= 1) {
                    ok = false;
                    break;
                }
                prev = cur;
                cur = next;
            }
            if (ok) out.threads.push_back(std::move(t));
        }
    }
    // Pure 2-regular components are cycles of 2-vertices, reported separately.
    for (const auto& comp : connected_components(core)) {
        bool all2 = !comp.empty();
        for (int v : comp)
            if (degree(core, v) != 2) all2 = false;
        if (all2) out.cycle_components.push_back(comp);
    }
    return out;
}

std::string vertex_class_name(VertexClass c) {
    switch (c) {
        case VertexClass::TwoPoor: return "2-poor";
        case VertexClass::TwoNonpoor: return "2-nonpoor";
        case VertexClass::ThreeGood: return "3-good";
        case VertexClass::ThreeBad: return "3-bad";
        case VertexClass::ThreeTerrible: return "3-terrible";
        case VertexClass::FourPlus: return "4+";
        case VertexClass::Other: return "other";
    }
    return "?";
}

StructureInfo classify(const Graph& core) {
    int n = core.vertex_count();
    StructureInfo info;
    info.threads = find_threads(core);
    info.li.resize(n);
    info.cls.assign(n, VertexClass::Other);
    info.bad83.assign(n, 0);
    info.bn83.assign(n, 0);
    info.bn145.assign(n, 0);
    for (const Thread& t : info.threads.threads) {
        // Both end slots count, so a coincident-end thread counts twice there.
        info.li[t.u1][t.length()] += 1;
        info.li[t.u2][t.length()] += 1;
    }
    // 8/3-case notion: a bad vertex is a 3-vertex with two incident 1-threads.
    for (int v = 0; v < n; ++v)
        if (degree(core, v) == 3 && info.l(v, 1) == 2) info.bad83[v] = 1;
    for (int v = 0; v < n; ++v)
        for (int y : core.neighbors(v))
            if (info.bad83[y]) ++info.bn83[v];
    // 14/5 vertex classes, driven by 2-neighbor counts.
    std::vector<int> two_nbrs(n, 0);
    for (int v = 0; v < n; ++v)
        for (int y : core.neighbors(v))
            if (degree(core, y) == 2) ++two_nbrs[v];
    for (int v = 0; v < n; ++v) {
        int d = degree(core, v);
        if (d >= 4)
            info.cls[v] = VertexClass::FourPlus;
        else if (d == 3)
            info.cls[v] = two_nbrs[v] == 0   ? VertexClass::ThreeGood
                          : two_nbrs[v] == 1 ? VertexClass::ThreeBad
                          : two_nbrs[v] == 2 ? VertexClass::ThreeTerrible
                                             : VertexClass::Other;
    }
    for (int v = 0; v < n; ++v) {
        if (degree(core, v) != 2) continue;
        bool poor = false;
        for (int y : core.neighbors(v))
            if (degree(core, y) == 2 || info.cls[y] == VertexClass::ThreeTerrible)
                poor = true;
        info.cls[v] = poor ? VertexClass::TwoPoor : VertexClass::TwoNonpoor;
    }
    for (int v = 0; v < n; ++v)
        for (int y : core.neighbors(v))
            if (info.cls[y] == VertexClass::ThreeBad) ++info.bn145[v];
    return info;
}

namespace {

std::string vtx(int v) { return "vertex " + std::to_string(v); }

}  // namespace

std::string check_conclusions_8_3(const Graph& core) {
    if (core.vertex_count() == 0) return "";
    if (min_degree(core) < 2) return "core has a vertex of degree < 2";
    StructureInfo info = classify(core);
    // The 8/3 charge arithmetic needs every 2-vertex to sit on a thread between
    // 3+-ends; a pure cycle of 2-vertices has no donors.
    if (!info.threads.cycle_components.empty()) return "core has a pure-cycle component";
    for (const Thread& t : info.threads.threads)
        if (t.length() >= 3) return "l-thread with l >= 3";
    for (const Thread& t : info.threads.threads) {
        if (t.length() == 2) {
            if (t.u1 == t.u2) return "2-thread with coincident ends";
            if (degree(core, t.u1) < 4 || degree(core, t.u2) < 4)
                return "2-thread end of degree < 4";
        }
    }
    int n = core.vertex_count();
    for (int v = 0; v < n; ++v) {
        int d = degree(core, v);
        if (d == 3) {
            if (info.l(v, 1) > 2) return vtx(v) + ": 3-vertex with l_1 > 2";
            if (info.bad83[v] && info.bn83[v] > 0)
                return vtx(v) + ": bad vertex with a bad neighbor";
            if (!info.bad83[v] && info.l(v, 1) + info.bn83[v] > 1)
                return vtx(v) + ": non-bad 3-vertex with l_1 + bn > 1";
        } else if (d >= 4) {
            // sum_{i>=3} i*l_i + 2*l_2 + l_1 + bn; the weighted sum already
            // carries the 2*l_2 and 1*l_1 terms.
            int lhs = info.l_total_weighted(v) + info.bn83[v];
            if (lhs > 2 * d - 4) return vtx(v) + ": 4+-vertex violates the thread bound";
        }
    }
    return "";
}

std::string check_conclusions_14_5(const Graph& core) {
    if (core.vertex_count() == 0) return "";
    if (min_degree(core) < 2) return "core has a vertex of degree < 2";
    for (const auto& comp : connected_components(core)) {
        int dmax = 0;
        for (int v : comp) dmax = std::max(dmax, degree(core, v));
        if (dmax <= 3) return "component with maximum degree <= 3";
    }
    StructureInfo info = classify(core);
    int n = core.vertex_count();
    int dstar = max_degree(core);
    auto is_bad = [&](int v) { return info.cls[v] == VertexClass::ThreeBad; };
    auto is_poor = [&](int v) { return info.cls[v] == VertexClass::TwoPoor; };
    for (int v = 0; v < n; ++v) {
        int d = degree(core, v);
        if (d == 3) {
            int twos = 0, bads = 0;
            for (int y : core.neighbors(v)) {
                if (degree(core, y) == 2) ++twos;
                if (is_bad(y)) ++bads;
            }
            if (twos > 2) return vtx(v) + ": 3-vertex with three 2-neighbors";
            if (bads > 2) return vtx(v) + ": 3-vertex with three bad 3-neighbors";
            if (info.cls[v] == VertexClass::ThreeTerrible)
                for (int y : core.neighbors(v))
                    if (degree(core, y) == 3 && info.cls[y] != VertexClass::ThreeGood)
                        return vtx(v) + ": terrible 3-vertex with a non-good 3-neighbor";
            if (is_bad(v)) {
                if (bads > 1) return vtx(v) + ": bad 3-vertex with two bad 3-neighbors";
                for (int y : core.neighbors(v)) {
                    if (degree(core, y) == 2 && is_poor(y))
                        return vtx(v) + ": bad 3-vertex with a poor 2-neighbor";
                    if (info.cls[y] == VertexClass::ThreeTerrible)
                        return vtx(v) + ": bad 3-vertex with a terrible 3-neighbor";
                }
            }
            // Extended L6_8 condition: a bad neighbor u of v with its own bad
            // 3-neighbor w forces v's other neighbors up to degree 4.
            for (int u : core.neighbors(v)) {
                if (!is_bad(u)) continue;
                bool u_has_bad = false;
                for (int w : core.neighbors(u))
                    if (w != v && is_bad(w)) u_has_bad = true;
                if (!u_has_bad) continue;
                for (int y : core.neighbors(v))
                    if (y != u && degree(core, y) <= 3)
                        return vtx(v) + ": small neighbor beside a doubly-bad branch";
            }
        } else if (d == 2 && is_poor(v)) {
            bool has_dstar = false;
            for (int y : core.neighbors(v))
                if (degree(core, y) == dstar) has_dstar = true;
            if (!has_dstar) return vtx(v) + ": poor 2-vertex without a Delta*-neighbor";
        }
    }
    for (int v = 0; v < n; ++v) {
        int d = degree(core, v);
        if (d < 4) continue;
        int poor = 0, weak = 0, big = 0;  // weak = nonpoor-2 or bad-3 targets
        std::vector<int> poor_nbrs;
        for (int y : core.neighbors(v)) {
            if (degree(core, y) == 2 && is_poor(y)) {
                ++poor;
                poor_nbrs.push_back(y);
            } else if ((degree(core, y) == 2) || is_bad(y))
                ++weak;
            if (degree(core, y) >= 4) ++big;
        }
        if (poor > 0 && d != dstar) return vtx(v) + ": poor 2-neighbor at a non-Delta* vertex";
        for (size_t i = 0; i < poor_nbrs.size(); ++i)
            for (size_t j = i + 1; j < poor_nbrs.size(); ++j)
                if (core.has_edge(poor_nbrs[i], poor_nbrs[j]))
                    return vtx(v) + ": two adjacent poor 2-neighbors";
        if (d == 4) {
            if (poor + weak > 3)
                return vtx(v) + ": 4-vertex with four 2-or-bad-3 neighbors";
            if (poor > 1) return vtx(v) + ": 4-vertex with two poor 2-neighbors";
            if (poor == 1 && big < 2)
                return vtx(v) + ": 4-vertex with a poor 2-neighbor but < 2 big neighbors";
        }
        if (d == 5 && dstar >= 5) {
            if (poor > 2) return vtx(v) + ": 5-vertex with three poor 2-neighbors";
            if (poor == 2 && big < 2)
                return vtx(v) + ": 5-vertex with two poor 2-neighbors but < 2 big neighbors";
            if (poor == 1 && big < 1)
                return vtx(v) + ": 5-vertex with a poor 2-neighbor but no big neighbor";
        }
        if (d == dstar) {
            if (poor > dstar - 2) return vtx(v) + ": Delta*-vertex with > Delta*-2 poor";
            if (dstar >= 6) {
                if (poor == dstar - 2 && big < 2)
                    return vtx(v) + ": Delta*-vertex with Delta*-2 poor but < 2 big";
                if (poor == dstar - 3 && big < 1)
                    return vtx(v) + ": Delta*-vertex with Delta*-3 poor but no big";
            }
        }
    }
    return "";
}

}  // namespace ec
