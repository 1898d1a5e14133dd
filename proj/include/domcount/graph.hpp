#ifndef DOMCOUNT_GRAPH_HPP
#define DOMCOUNT_GRAPH_HPP

// Simple undirected graphs on at most 64 vertices. Every vertex set is one
// machine word, so neighborhood unions and subset scans are word-parallel.

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace domcount {

// Bit i set = vertex i is in the set.
using VertexSet = std::uint64_t;

constexpr int kMaxVertices = 64;

constexpr VertexSet single_vertex(int v) { return VertexSet{1} << v; }

constexpr VertexSet full_vertex_set(int n) {
    return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline int set_size(VertexSet s) { return std::popcount(s); }

class Graph {
public:
    explicit Graph(int n);

    int order() const { return n_; }
    int edge_count() const;

    // Mutation is a construction-time affair; built graphs are treated as
    // immutable values everywhere else.
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1; }
    VertexSet neighbors(int v) const { return adj_[v]; }                       // N(v)
    VertexSet closed_neighbors(int v) const { return adj_[v] | single_vertex(v); }  // N[v]
    int degree(int v) const { return std::popcount(adj_[v]); }
    VertexSet vertices() const { return full_vertex_set(n_); }

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;

    int n_;
    std::vector<VertexSet> adj_;
};

VertexSet set_neighborhood(const Graph& g, VertexSet s, bool closed);

std::optional<int> regular_degree(const Graph& g);
int min_degree(const Graph& g);
int max_degree(const Graph& g);
bool is_bipartite(const Graph& g);
std::vector<VertexSet> components(const Graph& g);

// Standard families, with the labelings fixed once and for all: paths and
// cycles are numbered consecutively, complete bipartite sides are {0..a-1}
// and {a..a+b-1}, the hypercube uses binary labels, the Petersen graph has
// the outer 5-cycle on 0..4 and spokes i -- i+5.
Graph make_complete(int k);
Graph make_complete_bipartite(int a, int b);
Graph make_path(int n);
Graph make_cycle(int n);
Graph make_star(int leaves);
Graph make_petersen();
Graph make_hypercube(int dim);
Graph make_empty(int n);
Graph disjoint_union(const Graph& a, const Graph& b);

// Parses a family spec string such as "complete:4", "cycle:5",
// "complete_bipartite:2,3", "petersen", or
// "disjoint_union:complete:3+cycle:4".
Graph make_family(std::string_view spec);

// Layered double cover: vertices V x {0,1}, (u,0)(v,1) adjacent iff uv in E.
// Copy 1 of vertex v is labeled n+v. Always bipartite; for bipartite G this
// is two disjoint copies of G.
Graph bipartite_double_cover(const Graph& g);

struct Hypergraph {
    int n = 0;
    std::vector<VertexSet> edges;  // edge i is the neighborhood of vertex i
};

// Edge i is N(v_i) (open) or N[v_i] (closed). Open mode rejects isolated
// vertices since hyperedges must be nonempty.
Hypergraph neighborhood_hypergraph(const Graph& g, bool closed);

// graph6, one graph per call. Accepts the short header (n <= 62) and the
// 3-byte long header (n = 63, 64); an optional ">>graph6<<" prefix is
// tolerated.
Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

// Labeled-graph generators. The callback borrows the graph; it is reused for
// the next item, so consumers keep a copy if they hold on to it. Caps guard
// runtimes and are widened explicitly by callers that mean it.
void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& fn, int cap = 6);
void for_each_labeled_tree(int n, const std::function<void(const Graph&)>& fn, int cap = 9);
void for_each_labeled_regular(int n, int r, const std::function<void(const Graph&)>& fn,
                              int cap = 10);

}  // namespace domcount

#endif
