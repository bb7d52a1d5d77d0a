#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ec {

/// Thrown on malformed input: bad vertex/edge references, unparsable files,
/// out-of-range parameters. The CLI maps it to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Unordered vertex pair, stored with the smaller index first.
struct Edge {
    int u, v;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b) throw InputError("self-loop edge (" + std::to_string(a) + ")");
    }
    bool covers(int x) const { return x == u || x == v; }
    int other(int x) const { return x == u ? v : u; }
    auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph over dense 0-based vertex indices.
/// Immutable after construction; mutating operations return new graphs.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n) {
        if (n < 0) throw InputError("negative vertex count");
    }
    static Graph from_edges(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int i) const { return edges_[i]; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    bool has_edge(int u, int v) const;
    /// Index into edges() or -1.
    int edge_index(int u, int v) const;
    int edge_index(const Edge& e) const { return edge_index(e.u, e.v); }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw InputError("vertex " + std::to_string(v) + " out of range [0," +
                             std::to_string(n_) + ")");
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;            // sorted, canonical
    std::vector<std::vector<int>> adj_;  // sorted neighbor lists
};

int degree(const Graph& g, int v);
int max_degree(const Graph& g);
int min_degree(const Graph& g);

/// Distance between two edges in the implicit line graph; nullopt when the
/// edges lie in different components.
std::optional<int> edge_distance(const Graph& g, const Edge& e, const Edge& f);

struct DeleteResult {
    Graph graph;
    std::vector<int> old_to_new;  // -1 for deleted vertices
    std::vector<int> new_to_old;
};

DeleteResult delete_vertices(const Graph& g, const std::vector<int>& xs);
Graph delete_edges(const Graph& g, const std::vector<Edge>& es);

/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Subgraph induced on `vs` plus the index maps (wrapper over delete_vertices).
DeleteResult induced_subgraph(const Graph& g, const std::vector<int>& vs);

/// Edge-list text format: "p <n> <m>" header, "e <u> <v>" lines, '#' comments.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
std::string write_edge_list(const Graph& g);
std::string write_dot(const Graph& g);

}  // namespace ec
