#include "edgechroma/coloring.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "edgechroma/matching.hpp"

namespace ec {

std::string class_name(ColoringClass cls) {
    switch (cls) {
        case ColoringClass::Proper: return "proper";
        case ColoringClass::Acyclic: return "acyclic";
        case ColoringClass::UniquelyRestricted: return "ur";
        case ColoringClass::Semistrong: return "ss";
        case ColoringClass::Strong: return "strong";
    }
    return "?";
}

ColoringClass parse_class(const std::string& s) {
    if (s == "proper") return ColoringClass::Proper;
    if (s == "acyclic") return ColoringClass::Acyclic;
    if (s == "ur") return ColoringClass::UniquelyRestricted;
    if (s == "ss") return ColoringClass::Semistrong;
    if (s == "strong") return ColoringClass::Strong;
    throw InputError("unknown coloring class '" + s + "'");
}

int PartialColoring::colors_used() const {
    std::set<int> s;
    for (int c : assign)
        if (c != 0) s.insert(c);
    return static_cast<int>(s.size());
}

std::vector<int> PartialColoring::uncolored() const {
    std::vector<int> u;
    for (size_t i = 0; i < assign.size(); ++i)
        if (assign[i] == 0) u.push_back(static_cast<int>(i));
    return u;
}

std::vector<Edge> color_class(const Graph& g, const PartialColoring& phi, int c) {
    std::vector<Edge> es;
    for (int i = 0; i < g.edge_count(); ++i)
        if (phi.assign[i] == c) es.push_back(g.edge(i));
    return es;
}

namespace {

void check_palette(const Graph& g, const PartialColoring& phi) {
    if (static_cast<int>(phi.assign.size()) != g.edge_count())
        throw InputError("coloring does not match graph edge count");
    for (int c : phi.assign)
        if (c < 0 || c > phi.k) throw InputError("assignment outside palette");
}

std::vector<int> mate_of_class(const Graph& g, const std::vector<Edge>& cls) {
    std::vector<int> mate(g.vertex_count(), -1);
    for (const Edge& e : cls) {
        mate[e.u] = e.v;
        mate[e.v] = e.u;
    }
    return mate;
}

std::optional<Violation> check_class(const Graph& g, const std::vector<Edge>& cls,
                                     int color, ColoringClass which) {
    Violation v;
    v.cls = which;
    v.color = color;
    v.evidence = cls;
    // Matching first, shared by every class.
    std::vector<int> seen(g.vertex_count(), 0);
    for (const Edge& e : cls) {
        if (seen[e.u] || seen[e.v]) {
            v.detail = "two class edges share a vertex";
            return v;
        }
        seen[e.u] = seen[e.v] = 1;
    }
    if (which == ColoringClass::Proper || which == ColoringClass::Acyclic)
        return std::nullopt;
    if (which == ColoringClass::Semistrong || which == ColoringClass::Strong) {
        DeleteResult gm = induced_submatching_graph(g, cls);
        if (which == ColoringClass::Strong) {
            for (int x = 0; x < gm.graph.vertex_count(); ++x)
                if (degree(gm.graph, x) != 1) {
                    v.detail = "vertex " + std::to_string(gm.new_to_old[x]) +
                               " is not pendant in G_M";
                    return v;
                }
        } else {
            for (const Edge& e : cls) {
                int a = gm.old_to_new[e.u], b = gm.old_to_new[e.v];
                if (degree(gm.graph, a) != 1 && degree(gm.graph, b) != 1) {
                    v.detail = "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                               ") is not pendant in G_M";
                    return v;
                }
            }
        }
        return std::nullopt;
    }
    // Uniquely restricted: no alternating cycle.
    if (auto cyc = find_alternating_cycle(g, cls)) {
        v.cycle = *cyc;
        v.detail = "M-alternating cycle";
        return v;
    }
    return std::nullopt;
}

// Bichromatic cycle detection over two matchings: their union has max degree
// 2, so components are paths and cycles.
std::optional<std::vector<int>> bichromatic_cycle(const Graph& g,
                                                  const PartialColoring& phi, int a,
                                                  int b) {
    std::vector<int> mate_a(g.vertex_count(), -1), mate_b(g.vertex_count(), -1);
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edge(i);
        if (phi.assign[i] == a) {
            mate_a[e.u] = e.v;
            mate_a[e.v] = e.u;
        } else if (phi.assign[i] == b) {
            mate_b[e.u] = e.v;
            mate_b[e.v] = e.u;
        }
    }
    std::vector<char> done(g.vertex_count(), 0);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (done[s] || mate_a[s] < 0 || mate_b[s] < 0) continue;
        // Walk the a/b component from s, starting along color a.
        std::vector<int> walk{s};
        done[s] = 1;
        int x = s;
        bool use_a = true;
        while (true) {
            int y = use_a ? mate_a[x] : mate_b[x];
            if (y < 0) break;
            if (y == s && !use_a) return walk;  // closed even cycle
            if (y == s) break;
            if (done[y]) break;
            done[y] = 1;
            walk.push_back(y);
            x = y;
            use_a = !use_a;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Violation> verify(const Graph& g, const PartialColoring& phi,
                                ColoringClass cls) {
    check_palette(g, phi);
    std::set<int> used;
    for (int c : phi.assign)
        if (c != 0) used.insert(c);
    for (int c : used) {
        auto bad = check_class(g, color_class(g, phi, c), c, cls);
        if (bad) return bad;
    }
    if (cls == ColoringClass::Acyclic) {
        for (auto ia = used.begin(); ia != used.end(); ++ia)
            for (auto ib = std::next(ia); ib != used.end(); ++ib)
                if (auto cyc = bichromatic_cycle(g, phi, *ia, *ib)) {
                    Violation v;
                    v.cls = cls;
                    v.color = *ia;
                    v.cycle = *cyc;
                    v.detail = "bichromatic cycle with colors " + std::to_string(*ia) +
                               " and " + std::to_string(*ib);
                    return v;
                }
    }
    return std::nullopt;
}

bool legal_color(const Graph& g, const PartialColoring& phi, int ei, int c,
                 ColoringClass cls) {
    if (c < 1 || c > phi.k) return false;
    if (phi.colored(ei)) throw InputError("legal_color: edge already colored");
    const Edge e = g.edge(ei);
    // Matching compatibility at both endpoints.
    for (int x : {e.u, e.v})
        for (int y : g.neighbors(x)) {
            int j = g.edge_index(x, y);
            if (j != ei && phi.assign[j] == c) return false;
        }
    switch (cls) {
        case ColoringClass::Proper: return true;
        case ColoringClass::Strong: {
            // Induced-matching legality is exactly "c absent at distance <= 2".
            for (int x : {e.u, e.v})
                for (int y : g.neighbors(x))
                    for (int z : g.neighbors(y)) {
                        int j = g.edge_index(y, z);
                        if (j != ei && phi.assign[j] == c) return false;
                    }
            return true;
        }
        case ColoringClass::Semistrong: {
            bool near = false;
            for (int x : {e.u, e.v})
                for (int y : g.neighbors(x))
                    for (int z : g.neighbors(y)) {
                        int j = g.edge_index(y, z);
                        if (j != ei && phi.assign[j] == c) near = true;
                    }
            if (!near) return true;  // strongly available implies available
            std::vector<Edge> cls_edges = color_class(g, phi, c);
            cls_edges.push_back(e);
            return is_semistrong_matching(g, cls_edges);
        }
        case ColoringClass::UniquelyRestricted: {
            std::vector<Edge> cls_edges = color_class(g, phi, c);
            std::vector<int> mate = mate_of_class(g, cls_edges);
            mate[e.u] = e.v;
            mate[e.v] = e.u;
            return !detail::alternating_cycle_through(g, mate, e).has_value();
        }
        case ColoringClass::Acyclic: {
            // A new bichromatic cycle must pass through e: walk the (c,d)
            // subgraph from e.u and see whether it reaches e.v.
            std::vector<int> cand;
            for (int y : g.neighbors(e.u)) {
                int j = g.edge_index(e.u, y);
                if (j != ei && phi.assign[j] != 0) cand.push_back(phi.assign[j]);
            }
            for (int d : cand) {
                if (d == c) continue;
                int x = e.u, prev = -1;
                int want = d;
                bool closed = false;
                while (true) {
                    int next = -1;
                    for (int y : g.neighbors(x)) {
                        int j = g.edge_index(x, y);
                        if (j != ei && y != prev && phi.assign[j] == want) {
                            next = y;
                            break;
                        }
                    }
                    if (next < 0) break;
                    if (next == e.v) {
                        if (want == d) closed = true;  // path starts and ends with d
                        break;
                    }
                    prev = x;
                    x = next;
                    want = (want == c) ? d : c;
                }
                if (closed) return false;
            }
            return true;
        }
    }
    return false;
}

std::vector<int> forbidden_set(const Graph& g, const PartialColoring& phi, int ei,
                               ColoringClass cls) {
    if (phi.colored(ei)) throw InputError("forbidden_set: edge already colored");
    std::vector<int> out;
    for (int c = 1; c <= phi.k; ++c)
        if (!legal_color(g, phi, ei, c, cls)) out.push_back(c);
    return out;
}

std::vector<int> available_set(const Graph& g, const PartialColoring& phi, int ei,
                               ColoringClass cls) {
    if (phi.colored(ei)) throw InputError("available_set: edge already colored");
    std::vector<int> out;
    for (int c = 1; c <= phi.k; ++c)
        if (legal_color(g, phi, ei, c, cls)) out.push_back(c);
    return out;
}

std::vector<int> strongly_forbidden_set(const Graph& g, const PartialColoring& phi,
                                        int ei) {
    if (phi.colored(ei)) throw InputError("strongly_forbidden_set: edge already colored");
    const Edge e = g.edge(ei);
    std::set<int> cols;
    for (int x : {e.u, e.v})
        for (int y : g.neighbors(x))
            for (int z : g.neighbors(y)) {
                int j = g.edge_index(y, z);
                if (j != ei && phi.assign[j] != 0) cols.insert(phi.assign[j]);
            }
    return std::vector<int>(cols.begin(), cols.end());
}

std::vector<int> strongly_available_set(const Graph& g, const PartialColoring& phi,
                                        int ei) {
    std::vector<int> sf = strongly_forbidden_set(g, phi, ei);
    std::vector<char> bad(phi.k + 1, 0);
    for (int c : sf) bad[c] = 1;
    std::vector<int> out;
    for (int c = 1; c <= phi.k; ++c)
        if (!bad[c]) out.push_back(c);
    return out;
}

PartialColoring read_coloring(std::istream& in, const Graph& g) {
    std::string line;
    int k = -1;
    std::vector<std::tuple<int, int, int>> entries;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto pos = line.find('#');
        if (pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "k") {
            if (!(ls >> k) || k <= 0)
                throw InputError("bad 'k' header at line " + std::to_string(lineno));
        } else if (tag == "c") {
            int u, v, col;
            if (!(ls >> u >> v >> col))
                throw InputError("bad 'c' line at line " + std::to_string(lineno));
            entries.emplace_back(u, v, col);
        } else {
            throw InputError("unknown line tag '" + tag + "' in coloring");
        }
    }
    if (k <= 0) throw InputError("missing 'k' header");
    PartialColoring phi(k, g.edge_count());
    for (auto [u, v, col] : entries) {
        int i = g.edge_index(u, v);
        if (i < 0)
            throw InputError("colored edge (" + std::to_string(u) + "," +
                             std::to_string(v) + ") not in graph");
        if (col < 1 || col > k) throw InputError("color outside palette");
        phi.assign[i] = col;
    }
    return phi;
}

PartialColoring read_coloring_file(const std::string& path, const Graph& g) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return read_coloring(in, g);
}

std::string write_coloring(const Graph& g, const PartialColoring& phi) {
    std::ostringstream out;
    out << "k " << phi.k << "\n";
    for (int i = 0; i < g.edge_count(); ++i)
        if (phi.assign[i] != 0)
            out << "c " << g.edge(i).u << " " << g.edge(i).v << " " << phi.assign[i]
                << "\n";
    return out.str();
}

}  // namespace ec
