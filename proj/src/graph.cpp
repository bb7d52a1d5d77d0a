#include "edgechroma/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <sstream>

namespace ec {

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    g.edges_ = edges;
    std::sort(g.edges_.begin(), g.edges_.end());
    for (size_t i = 0; i < g.edges_.size(); ++i) {
        const Edge& e = g.edges_[i];
        g.check_vertex(e.u);
        g.check_vertex(e.v);
        if (i > 0 && g.edges_[i] == g.edges_[i - 1])
            throw InputError("parallel edge (" + std::to_string(e.u) + "," +
                             std::to_string(e.v) + ")");
        g.adj_[e.u].push_back(e.v);
        g.adj_[e.v].push_back(e.u);
    }
    for (auto& a : g.adj_) std::sort(a.begin(), a.end());
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

int Graph::edge_index(int u, int v) const {
    if (!has_edge(u, v)) return -1;
    Edge e(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    return static_cast<int>(it - edges_.begin());
}

int degree(const Graph& g, int v) {
    g.check_vertex(v);
    return static_cast<int>(g.neighbors(v).size());
}

int max_degree(const Graph& g) {
    if (g.vertex_count() == 0) throw InputError("max_degree of empty graph");
    int d = 0;
    for (int v = 0; v < g.vertex_count(); ++v) d = std::max(d, degree(g, v));
    return d;
}

int min_degree(const Graph& g) {
    if (g.vertex_count() == 0) throw InputError("min_degree of empty graph");
    int d = g.vertex_count();
    for (int v = 0; v < g.vertex_count(); ++v) d = std::min(d, degree(g, v));
    return d;
}

std::optional<int> edge_distance(const Graph& g, const Edge& e, const Edge& f) {
    int ei = g.edge_index(e), fi = g.edge_index(f);
    if (ei < 0 || fi < 0) throw InputError("edge_distance: edge not in graph");
    if (ei == fi) return 0;
    // BFS in the implicit line graph: two edges are adjacent iff they share a
    // vertex. Frontier expansion goes through endpoint incidence lists.
    std::vector<int> dist(g.edge_count(), -1);
    std::deque<int> q;
    dist[ei] = 0;
    q.push_back(ei);
    while (!q.empty()) {
        int i = q.front();
        q.pop_front();
        const Edge& cur = g.edge(i);
        for (int x : {cur.u, cur.v}) {
            for (int y : g.neighbors(x)) {
                int j = g.edge_index(x, y);
                if (dist[j] < 0) {
                    dist[j] = dist[i] + 1;
                    if (j == fi) return dist[j];
                    q.push_back(j);
                }
            }
        }
    }
    return std::nullopt;
}

DeleteResult delete_vertices(const Graph& g, const std::vector<int>& xs) {
    std::vector<char> del(g.vertex_count(), 0);
    for (int x : xs) {
        g.check_vertex(x);
        del[x] = 1;
    }
    DeleteResult r;
    r.old_to_new.assign(g.vertex_count(), -1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!del[v]) {
            r.old_to_new[v] = static_cast<int>(r.new_to_old.size());
            r.new_to_old.push_back(v);
        }
    }
    std::vector<Edge> es;
    for (const Edge& e : g.edges())
        if (!del[e.u] && !del[e.v]) es.emplace_back(r.old_to_new[e.u], r.old_to_new[e.v]);
    r.graph = Graph::from_edges(static_cast<int>(r.new_to_old.size()), es);
    return r;
}

Graph delete_edges(const Graph& g, const std::vector<Edge>& es) {
    std::vector<char> del(g.edge_count(), 0);
    for (const Edge& e : es) {
        int i = g.edge_index(e);
        if (i < 0) throw InputError("delete_edges: edge not present");
        del[i] = 1;
    }
    std::vector<Edge> keep;
    for (int i = 0; i < g.edge_count(); ++i)
        if (!del[i]) keep.push_back(g.edge(i));
    return Graph::from_edges(g.vertex_count(), keep);
}

DeleteResult induced_subgraph(const Graph& g, const std::vector<int>& vs) {
    std::vector<char> keep(g.vertex_count(), 0);
    for (int v : vs) {
        g.check_vertex(v);
        keep[v] = 1;
    }
    std::vector<int> drop;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!keep[v]) drop.push_back(v);
    return delete_vertices(g, drop);
}

std::optional<int> girth(const Graph& g) {
    // Shortest cycle through each start vertex via BFS; a non-tree edge seen
    // between vertices at depths d1, d2 closes a cycle of length d1+d2+1.
    int best = -1;
    int n = g.vertex_count();
    std::vector<int> dist(n), parent(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<int> q;
        dist[s] = 0;
        q.push_back(s);
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (int y : g.neighbors(x)) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    q.push_back(y);
                } else if (y != parent[x]) {
                    int len = dist[x] + dist[y] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<int> comp(g.vertex_count(), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::deque<int> q{s};
        comp[s] = id;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            out[id].push_back(x);
            for (int y : g.neighbors(x))
                if (comp[y] < 0) {
                    comp[y] = id;
                    q.push_back(y);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

Graph read_edge_list(std::istream& in) {
    std::string line;
    int n = -1;
    long declared = -1;
    std::vector<Edge> es;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto pos = line.find('#');
        if (pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "p") {
            if (!(ls >> n >> declared) || n < 0)
                throw InputError("bad 'p' header at line " + std::to_string(lineno));
        } else if (tag == "e") {
            int u, v;
            if (!(ls >> u >> v))
                throw InputError("bad 'e' line at line " + std::to_string(lineno));
            if (n < 0) throw InputError("'e' line before 'p' header");
            if (u < 0 || v < 0 || u >= n || v >= n || u == v)
                throw InputError("bad edge at line " + std::to_string(lineno));
            es.emplace_back(u, v);
        } else {
            throw InputError("unknown line tag '" + tag + "' at line " +
                             std::to_string(lineno));
        }
    }
    if (n < 0) throw InputError("missing 'p' header");
    if (declared >= 0 && declared != static_cast<long>(es.size()))
        throw InputError("edge count mismatch: header says " + std::to_string(declared) +
                         ", got " + std::to_string(es.size()));
    return Graph::from_edges(n, es);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return read_edge_list(in);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const Edge& e : g.edges()) out << "e " << e.u << " " << e.v << "\n";
    return out.str();
}

std::string write_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    std::vector<char> touched(g.vertex_count(), 0);
    for (const Edge& e : g.edges()) touched[e.u] = touched[e.v] = 1;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!touched[v]) out << "  " << v << ";\n";
    for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace ec
