#include "domcount/graph.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "domcount/exact.hpp"

namespace domcount {

Graph::Graph(int n) : n_(n), adj_(static_cast<size_t>(n > 0 ? n : 0), 0) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("graph order must be between 1 and 64, got " +
                                    std::to_string(n));
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0, " +
                                    std::to_string(n_) + ")");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loops are not allowed");
    adj_[u] |= single_vertex(v);
    adj_[v] |= single_vertex(u);
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= ~single_vertex(v);
    adj_[v] &= ~single_vertex(u);
}

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

VertexSet set_neighborhood(const Graph& g, VertexSet s, bool closed) {
    if (s & ~g.vertices()) throw std::invalid_argument("vertex set has bits outside the graph");
    VertexSet out = 0;
    for (VertexSet rest = s; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        out |= closed ? g.closed_neighbors(v) : g.neighbors(v);
    }
    return out;
}

std::optional<int> regular_degree(const Graph& g) {
    int r = g.degree(0);
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) != r) return std::nullopt;
    return r;
}

int min_degree(const Graph& g) {
    int d = g.degree(0);
    for (int v = 1; v < g.order(); ++v) d = std::min(d, g.degree(v));
    return d;
}

int max_degree(const Graph& g) {
    int d = g.degree(0);
    for (int v = 1; v < g.order(); ++v) d = std::max(d, g.degree(v));
    return d;
}

bool is_bipartite(const Graph& g) {
    std::vector<int> side(static_cast<size_t>(g.order()), -1);
    std::vector<int> stack;
    for (int s = 0; s < g.order(); ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (VertexSet rest = g.neighbors(u); rest;) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                if (side[v] < 0) {
                    side[v] = 1 - side[u];
                    stack.push_back(v);
                } else if (side[v] == side[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> comps;
    VertexSet seen = 0;
    for (int s = 0; s < g.order(); ++s) {
        if ((seen >> s) & 1) continue;
        VertexSet comp = single_vertex(s);
        VertexSet frontier = comp;
        while (frontier) {
            VertexSet next = 0;
            for (VertexSet rest = frontier; rest;) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                next |= g.neighbors(v);
            }
            frontier = next & ~comp;
            comp |= next;
        }
        comps.push_back(comp);
        seen |= comp;
    }
    return comps;
}

Graph make_complete(int k) {
    Graph g(k);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
    return g;
}

Graph make_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete bipartite sides must be >= 1");
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

Graph make_path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph make_star(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

Graph make_petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);      // outer cycle
        g.add_edge(i, i + 5);            // spokes
        g.add_edge(i + 5, 5 + (i + 2) % 5);  // inner pentagram
    }
    return g;
}

Graph make_hypercube(int dim) {
    if (dim < 0 || dim > 6) throw std::invalid_argument("hypercube dimension must be in [0, 6]");
    Graph g(1 << dim);
    for (int u = 0; u < (1 << dim); ++u)
        for (int b = 0; b < dim; ++b)
            if (u < (u ^ (1 << b))) g.add_edge(u, u ^ (1 << b));
    return g;
}

Graph make_empty(int n) { return Graph(n); }

Graph disjoint_union(const Graph& a, const Graph& b) {
    if (a.order() + b.order() > kMaxVertices)
        throw std::invalid_argument("disjoint union exceeds 64 vertices");
    Graph g(a.order() + b.order());
    for (int u = 0; u < a.order(); ++u)
        for (VertexSet rest = a.neighbors(u); rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (u < v) g.add_edge(u, v);
        }
    int shift = a.order();
    for (int u = 0; u < b.order(); ++u)
        for (VertexSet rest = b.neighbors(u); rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (u < v) g.add_edge(u + shift, v + shift);
        }
    return g;
}

namespace {

std::vector<int> parse_int_args(std::string_view args, std::string_view family) {
    std::vector<int> out;
    size_t pos = 0;
    while (pos <= args.size()) {
        size_t comma = args.find(',', pos);
        std::string_view tok = args.substr(pos, comma == std::string_view::npos ? args.size() - pos
                                                                                : comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw std::invalid_argument("bad integer argument '" + std::string(tok) +
                                        "' for family " + std::string(family));
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace

Graph make_family(std::string_view spec) {
    size_t colon = spec.find(':');
    std::string_view name = spec.substr(0, colon);
    std::string_view args = colon == std::string_view::npos ? std::string_view{}
                                                            : spec.substr(colon + 1);
    auto want = [&](size_t count) {
        auto values = parse_int_args(args, name);
        if (values.size() != count)
            throw std::invalid_argument(std::string(name) + " expects " + std::to_string(count) +
                                        " argument(s)");
        return values;
    };
    if (name == "complete") return make_complete(want(1)[0]);
    if (name == "complete_bipartite") {
        auto v = want(2);
        return make_complete_bipartite(v[0], v[1]);
    }
    if (name == "path") return make_path(want(1)[0]);
    if (name == "cycle") return make_cycle(want(1)[0]);
    if (name == "star") return make_star(want(1)[0]);
    if (name == "petersen") {
        if (!args.empty()) throw std::invalid_argument("petersen takes no arguments");
        return make_petersen();
    }
    if (name == "hypercube") return make_hypercube(want(1)[0]);
    if (name == "e_loopless" || name == "empty") return make_empty(want(1)[0]);
    if (name == "disjoint_union") {
        size_t plus = args.find('+');
        if (plus == std::string_view::npos)
            throw std::invalid_argument("disjoint_union:SPEC+SPEC expects two parts");
        return disjoint_union(make_family(args.substr(0, plus)),
                              make_family(args.substr(plus + 1)));
    }
    throw std::invalid_argument("unknown graph family '" + std::string(name) + "'");
}

Graph bipartite_double_cover(const Graph& g) {
    int n = g.order();
    if (2 * n > kMaxVertices)
        throw std::invalid_argument("double cover exceeds 64 vertices");
    Graph cover(2 * n);
    for (int u = 0; u < n; ++u)
        for (VertexSet rest = g.neighbors(u); rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (u < v) {
                cover.add_edge(u, n + v);
                cover.add_edge(v, n + u);
            }
        }
    return cover;
}

Hypergraph neighborhood_hypergraph(const Graph& g, bool closed) {
    if (!closed && min_degree(g) == 0)
        throw std::invalid_argument("open neighborhood hypergraph needs minimum degree >= 1");
    Hypergraph h;
    h.n = g.order();
    h.edges.reserve(static_cast<size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v)
        h.edges.push_back(closed ? g.closed_neighbors(v) : g.neighbors(v));
    return h;
}

namespace {

int graph6_byte(std::string_view s, size_t i) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126)
        throw std::invalid_argument("graph6: byte " + std::to_string(i) + " out of range");
    return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    constexpr std::string_view kPrefix = ">>graph6<<";
    if (line.substr(0, kPrefix.size()) == kPrefix) line.remove_prefix(kPrefix.size());
    if (line.empty()) throw std::invalid_argument("graph6: empty encoding");

    long n = 0;
    size_t pos = 0;
    if (line[0] == '~') {
        if (line.size() >= 2 && line[1] == '~')
            throw std::invalid_argument("graph6: 8-byte order field means n > 64");
        if (line.size() < 4) throw std::invalid_argument("graph6: truncated order field");
        n = (static_cast<long>(graph6_byte(line, 1)) << 12) |
            (static_cast<long>(graph6_byte(line, 2)) << 6) | graph6_byte(line, 3);
        pos = 4;
    } else {
        n = graph6_byte(line, 0);
        pos = 1;
    }
    if (n < 1) throw std::invalid_argument("graph6: graphs on 0 vertices are not supported");
    if (n > kMaxVertices)
        throw std::invalid_argument("graph6: " + std::to_string(n) + " vertices exceeds 64");

    size_t nbits = static_cast<size_t>(n) * (n - 1) / 2;
    size_t nbytes = (nbits + 5) / 6;
    if (line.size() - pos != nbytes)
        throw std::invalid_argument("graph6: body has " + std::to_string(line.size() - pos) +
                                    " bytes, expected " + std::to_string(nbytes));

    Graph g(static_cast<int>(n));
    size_t bit = 0;
    int row = 0, col = 1;
    for (size_t i = 0; i < nbytes; ++i) {
        int v = graph6_byte(line, pos + i);
        for (int b = 5; b >= 0; --b, ++bit) {
            if (bit >= nbits) {
                if ((v >> b) & 1) throw std::invalid_argument("graph6: nonzero padding bits");
                continue;
            }
            if ((v >> b) & 1) g.add_edge(row, col);
            if (++row == col) {
                row = 0;
                ++col;
            }
        }
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int acc = 0, nbits = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& fn, int cap) {
    if (n < 1) throw std::invalid_argument("need at least one vertex");
    if (n > cap)
        throw CapExceeded("labeled-graph enumeration capped at n = " + std::to_string(cap));
    int m = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> edge_of(static_cast<size_t>(m));
    int e = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) edge_of[e++] = {row, col};

    // Gray-code walk: consecutive subsets differ in one edge.
    Graph g(n);
    fn(g);
    std::uint64_t prev_gray = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        std::uint64_t gray = mask ^ (mask >> 1);
        int flipped = std::countr_zero(prev_gray ^ gray);
        auto [u, v] = edge_of[static_cast<size_t>(flipped)];
        if ((gray >> flipped) & 1)
            g.add_edge(u, v);
        else
            g.remove_edge(u, v);
        prev_gray = gray;
        fn(g);
    }
}

void for_each_labeled_tree(int n, const std::function<void(const Graph&)>& fn, int cap) {
    if (n < 1) throw std::invalid_argument("need at least one vertex");
    if (n > cap)
        throw CapExceeded("labeled-tree enumeration capped at n = " + std::to_string(cap));
    Graph g(n);
    if (n <= 2) {
        if (n == 2) g.add_edge(0, 1);
        fn(g);
        return;
    }

    std::vector<int> seq(static_cast<size_t>(n - 2), 0);
    std::vector<int> deg(static_cast<size_t>(n));
    std::vector<std::pair<int, int>> edges(static_cast<size_t>(n - 1));
    for (;;) {
        // Linear-time Prufer decode: the pointer scans for the smallest
        // unused leaf; vertex n-1 is always the final anchor.
        std::fill(deg.begin(), deg.end(), 1);
        for (int x : seq) ++deg[static_cast<size_t>(x)];
        int ptr = 0;
        while (deg[static_cast<size_t>(ptr)] != 1) ++ptr;
        int leaf = ptr;
        size_t ne = 0;
        for (int x : seq) {
            edges[ne++] = {leaf, x};
            if (--deg[static_cast<size_t>(x)] == 1 && x < ptr) {
                leaf = x;
            } else {
                ++ptr;
                while (deg[static_cast<size_t>(ptr)] != 1) ++ptr;
                leaf = ptr;
            }
        }
        edges[ne++] = {leaf, n - 1};

        for (auto [u, v] : edges) g.add_edge(u, v);
        fn(g);
        for (auto [u, v] : edges) g.remove_edge(u, v);

        int i = n - 3;
        while (i >= 0 && seq[static_cast<size_t>(i)] == n - 1) seq[static_cast<size_t>(i--)] = 0;
        if (i < 0) break;
        ++seq[static_cast<size_t>(i)];
    }
}

namespace {

struct RegularEnum {
    int n, r;
    Graph g;
    std::vector<int> deg;
    const std::function<void(const Graph&)>* fn;

    RegularEnum(int n_, int r_, const std::function<void(const Graph&)>& f)
        : n(n_), r(r_), g(n_), deg(static_cast<size_t>(n_), 0), fn(&f) {}

    void place_vertex(int u) {
        if (u == n) {
            (*fn)(g);
            return;
        }
        choose(u, u + 1, r - deg[static_cast<size_t>(u)]);
    }

    // Pick `need` neighbors for u among vertices >= from with spare degree.
    void choose(int u, int from, int need) {
        if (need == 0) {
            place_vertex(u + 1);
            return;
        }
        int spare = 0;
        for (int v = from; v < n; ++v)
            if (deg[static_cast<size_t>(v)] < r) ++spare;
        if (spare < need) return;
        for (int v = from; v <= n - need; ++v) {
            if (deg[static_cast<size_t>(v)] >= r) continue;
            g.add_edge(u, v);
            ++deg[static_cast<size_t>(u)];
            ++deg[static_cast<size_t>(v)];
            choose(u, v + 1, need - 1);
            g.remove_edge(u, v);
            --deg[static_cast<size_t>(u)];
            --deg[static_cast<size_t>(v)];
        }
    }
};

}  // namespace

void for_each_labeled_regular(int n, int r, const std::function<void(const Graph&)>& fn, int cap) {
    if (n < 1) throw std::invalid_argument("need at least one vertex");
    if (r < 0) throw std::invalid_argument("degree must be nonnegative");
    if (n > cap)
        throw CapExceeded("regular-graph enumeration capped at n = " + std::to_string(cap));
    if (r >= n || (n * r) % 2 != 0) return;  // no such graphs
    RegularEnum state(n, r, fn);
    state.place_vertex(0);
}

}  // namespace domcount
