#include "domcount/counting.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace domcount {

ImageGraph::ImageGraph(int q) : q_(q), adj_(static_cast<size_t>(q > 0 ? q : 0), 0) {
    if (q < 1 || q > 16)
        throw std::invalid_argument("image graph order must be between 1 and 16");
}

void ImageGraph::add_edge(int a, int b) {
    if (a < 0 || a >= q_ || b < 0 || b >= q_)
        throw std::invalid_argument("image graph vertex out of range");
    adj_[static_cast<size_t>(a)] |= std::uint32_t{1} << b;
    adj_[static_cast<size_t>(b)] |= std::uint32_t{1} << a;
}

ImageGraph ImageGraph::h_ind() {
    ImageGraph h(2);
    h.add_edge(0, 1);
    h.add_edge(1, 1);
    return h;
}

ImageGraph ImageGraph::loops(int q) {
    ImageGraph h(q);
    for (int v = 0; v < q; ++v) h.add_edge(v, v);
    return h;
}

ImageGraph ImageGraph::complete(int q) {
    ImageGraph h(q);
    for (int a = 0; a < q; ++a)
        for (int b = a + 1; b < q; ++b) h.add_edge(a, b);
    return h;
}

ImageGraph ImageGraph::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open image graph file " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("image graph file " + path + ": " + e.what());
    }
    if (!j.contains("q") || !j["q"].is_number_integer())
        throw std::invalid_argument("image graph file needs an integer \"q\" field");
    ImageGraph h(j["q"].get<int>());
    for (const auto& e : j.value("edges", nlohmann::json::array())) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("image graph edges must be [a, b] pairs");
        h.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    return h;
}

BigCount Polynomial::at(int k) const {
    if (k < 0 || k >= static_cast<int>(coeff.size())) return 0;
    return coeff[static_cast<size_t>(k)];
}

BigCount Polynomial::total() const {
    BigCount sum = 0;
    for (const auto& c : coeff) sum += c;
    return sum;
}

BigRational Polynomial::eval(const BigRational& mu) const {
    BigRational value = 0;
    for (size_t k = coeff.size(); k-- > 0;) value = value * mu + BigRational(coeff[k]);
    return value;
}

void Polynomial::trim() {
    while (coeff.size() > 1 && coeff.back() == 0) coeff.pop_back();
}

namespace {

void check_coloring_cap(int n, int k, int cap_bits) {
    if (k < 1) throw std::invalid_argument("need at least one color");
    if (cap_bits < 1 || cap_bits > 62) throw std::invalid_argument("cap bits must be in [1, 62]");
    if (pow_count(BigCount(k), n) > (BigCount(1) << cap_bits))
        throw CapExceeded(std::to_string(k) + "^" + std::to_string(n) +
                          " colorings exceed the 2^" + std::to_string(cap_bits) + " cap");
}

void check_subset_cap(int n, int cap_bits) {
    if (cap_bits < 1) throw std::invalid_argument("cap bits must be positive");
    if (n > cap_bits && n > 0)
        throw CapExceeded("2^" + std::to_string(n) + " subsets exceed the 2^" +
                          std::to_string(cap_bits) + " cap");
}

// Shared state for the legal-coloring backtracker. Vertices are colored in
// index order; vertex u's neighborhood condition fires when the highest
// member of its (closed) neighborhood is assigned.
struct LegalPlan {
    const Graph& g;
    int k;
    const ColoringCondition& condition;
    std::vector<VertexSet> sets;                 // per-vertex constrained set
    std::vector<std::vector<int>> finalize_at;   // vertex -> conditions completed there
    bool zero = false;                           // some empty neighborhood is illegal

    LegalPlan(const Graph& graph, int colors, const ColoringCondition& cond, bool closed)
        : g(graph), k(colors), condition(cond) {
        if (condition.colors() != k)
            throw std::invalid_argument("condition color count does not match");
        int n = g.order();
        sets.resize(static_cast<size_t>(n));
        finalize_at.resize(static_cast<size_t>(n));
        ColorMultiset empty;
        empty.counts.assign(static_cast<size_t>(k), 0);
        bool empty_ok = condition.allows(empty);
        for (int u = 0; u < n; ++u) {
            VertexSet s = closed ? g.closed_neighbors(u) : g.neighbors(u);
            sets[static_cast<size_t>(u)] = s;
            if (s == 0) {
                if (!empty_ok) zero = true;
                continue;
            }
            int last = 63 - std::countl_zero(s);
            finalize_at[static_cast<size_t>(last)].push_back(u);
        }
    }

    bool admissible(const std::vector<int>& color, int u, ColorMultiset& scratch) const {
        std::fill(scratch.counts.begin(), scratch.counts.end(), 0);
        for (VertexSet rest = sets[static_cast<size_t>(u)]; rest;) {
            int w = std::countr_zero(rest);
            rest &= rest - 1;
            ++scratch.counts[static_cast<size_t>(color[static_cast<size_t>(w)])];
        }
        return condition.allows(scratch);
    }
};

}  // namespace

BigCount count_legal_colorings(const Graph& g, int k, const ColoringCondition& condition,
                               bool closed, int cap_bits) {
    check_coloring_cap(g.order(), k, cap_bits);
    LegalPlan plan(g, k, condition, closed);
    if (plan.zero) return 0;

    int n = g.order();
    std::vector<int> color(static_cast<size_t>(n), 0);
    ColorMultiset scratch;
    scratch.counts.assign(static_cast<size_t>(k), 0);
    BigCount total = 0;

    auto recurse = [&](auto&& self, int v) -> void {
        if (v == n) {
            ++total;
            return;
        }
        for (int c = 0; c < k; ++c) {
            color[static_cast<size_t>(v)] = c;
            bool ok = true;
            for (int u : plan.finalize_at[static_cast<size_t>(v)])
                if (!plan.admissible(color, u, scratch)) {
                    ok = false;
                    break;
                }
            if (ok) self(self, v + 1);
        }
    };
    recurse(recurse, 0);
    return total;
}

BigRational count_legal_colorings_weighted(const Graph& g, const ColoringCondition& condition,
                                           const Activation& lambda, bool closed, int cap_bits) {
    lambda.validate();
    int k = lambda.colors();
    check_coloring_cap(g.order(), k, cap_bits);
    LegalPlan plan(g, k, condition, closed);
    if (plan.zero) return 0;

    int n = g.order();
    std::vector<int> color(static_cast<size_t>(n), 0);
    std::vector<BigRational> partial(static_cast<size_t>(n) + 1, BigRational(1));
    ColorMultiset scratch;
    scratch.counts.assign(static_cast<size_t>(k), 0);
    BigRational total = 0;

    auto recurse = [&](auto&& self, int v) -> void {
        if (v == n) {
            total += partial[static_cast<size_t>(n)];
            return;
        }
        for (int c = 0; c < k; ++c) {
            color[static_cast<size_t>(v)] = c;
            bool ok = true;
            for (int u : plan.finalize_at[static_cast<size_t>(v)])
                if (!plan.admissible(color, u, scratch)) {
                    ok = false;
                    break;
                }
            if (ok) {
                partial[static_cast<size_t>(v) + 1] =
                    partial[static_cast<size_t>(v)] * lambda.weights[static_cast<size_t>(c)];
                self(self, v + 1);
            }
        }
    };
    recurse(recurse, 0);
    return total;
}

namespace {

// Union of the (closed) neighborhoods of the members of mask.
inline VertexSet cover_of(const Graph& g, std::uint64_t mask, bool strong) {
    VertexSet cover = 0;
    while (mask) {
        int v = std::countr_zero(mask);
        mask &= mask - 1;
        cover |= strong ? g.neighbors(v) : g.closed_neighbors(v);
    }
    return cover;
}

}  // namespace

Polynomial dominating_polynomial(const Graph& g, bool strong, int cap_bits) {
    int n = g.order();
    check_subset_cap(n, cap_bits);
    Polynomial p;
    p.coeff.assign(static_cast<size_t>(n) + 1, 0);
    VertexSet all = g.vertices();
    for (std::uint64_t mask = 0;;) {
        if (cover_of(g, mask, strong) == all)
            ++p.coeff[static_cast<size_t>(std::popcount(mask))];
        if (mask == all) break;
        ++mask;
    }
    p.trim();
    return p;
}

BigCount count_dominating_sets(const Graph& g, bool strong, int cap_bits) {
    int n = g.order();
    check_subset_cap(n, cap_bits);
    VertexSet all = g.vertices();
    unsigned long long total = 0;
    for (std::uint64_t mask = 0;;) {
        if (cover_of(g, mask, strong) == all) ++total;
        if (mask == all) break;
        ++mask;
    }
    return total;
}

BigCount count_minimal_dominating_sets(const Graph& g, int cap_bits) {
    int n = g.order();
    check_subset_cap(n, cap_bits);
    VertexSet all = g.vertices();
    unsigned long long total = 0;
    for (std::uint64_t mask = 0;;) {
        if (cover_of(g, mask, false) == all) {
            bool minimal = true;
            for (std::uint64_t rest = mask; rest;) {
                std::uint64_t bit = rest & (0 - rest);
                rest &= rest - 1;
                if (cover_of(g, mask & ~bit, false) == all) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) ++total;
        }
        if (mask == all) break;
        ++mask;
    }
    return total;
}

namespace {

inline bool is_independent(const Graph& g, std::uint64_t mask) {
    for (std::uint64_t rest = mask; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        if (g.neighbors(v) & mask) return false;
    }
    return true;
}

}  // namespace

BigCount count_independent_sets(const Graph& g, int cap_bits) {
    int n = g.order();
    check_subset_cap(n, cap_bits);
    VertexSet all = g.vertices();
    unsigned long long total = 0;
    for (std::uint64_t mask = 0;;) {
        if (is_independent(g, mask)) ++total;
        if (mask == all) break;
        ++mask;
    }
    return total;
}

BigCount count_maximal_independent_sets(const Graph& g, int cap_bits) {
    int n = g.order();
    check_subset_cap(n, cap_bits);
    VertexSet all = g.vertices();
    unsigned long long total = 0;
    for (std::uint64_t mask = 0;;) {
        // maximal independent = independent and dominating
        if (is_independent(g, mask) && cover_of(g, mask, false) == all) ++total;
        if (mask == all) break;
        ++mask;
    }
    return total;
}

BigCount hom_count(const Graph& g, const ImageGraph& h, int cap_bits) {
    check_coloring_cap(g.order(), h.order(), cap_bits);
    int n = g.order();
    int q = h.order();
    std::vector<int> image(static_cast<size_t>(n), 0);
    BigCount total = 0;
    auto recurse = [&](auto&& self, int v) -> void {
        if (v == n) {
            ++total;
            return;
        }
        VertexSet earlier = g.neighbors(v) & (single_vertex(v) - 1);
        for (int c = 0; c < q; ++c) {
            bool ok = true;
            for (VertexSet rest = earlier; rest;) {
                int u = std::countr_zero(rest);
                rest &= rest - 1;
                if (!h.adjacent(image[static_cast<size_t>(u)], c)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                image[static_cast<size_t>(v)] = c;
                self(self, v + 1);
            }
        }
    };
    recurse(recurse, 0);
    return total;
}

BigRational hom_weight(const Graph& g, const ImageGraph& h, const Activation& lambda,
                       int cap_bits) {
    lambda.validate();
    if (lambda.colors() != h.order())
        throw std::invalid_argument("activation must weight every image vertex");
    check_coloring_cap(g.order(), h.order(), cap_bits);
    int n = g.order();
    int q = h.order();
    std::vector<int> image(static_cast<size_t>(n), 0);
    std::vector<BigRational> partial(static_cast<size_t>(n) + 1, BigRational(1));
    BigRational total = 0;
    auto recurse = [&](auto&& self, int v) -> void {
        if (v == n) {
            total += partial[static_cast<size_t>(n)];
            return;
        }
        VertexSet earlier = g.neighbors(v) & (single_vertex(v) - 1);
        for (int c = 0; c < q; ++c) {
            bool ok = true;
            for (VertexSet rest = earlier; rest;) {
                int u = std::countr_zero(rest);
                rest &= rest - 1;
                if (!h.adjacent(image[static_cast<size_t>(u)], c)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                image[static_cast<size_t>(v)] = c;
                partial[static_cast<size_t>(v) + 1] =
                    partial[static_cast<size_t>(v)] * lambda.weights[static_cast<size_t>(c)];
                self(self, v + 1);
            }
        }
    };
    recurse(recurse, 0);
    return total;
}

BigCount xhom_count(const Graph& g, const ImageGraph& h, int cap_bits) {
    check_coloring_cap(g.order(), h.order(), cap_bits);
    int n = g.order();
    int q = h.order();
    if (min_degree(g) == 0) return 0;  // no witness neighbor can exist

    // The existential constraint at u is decided once u and all of N(u) are
    // assigned, i.e. at the highest vertex of N[u].
    std::vector<std::vector<int>> finalize_at(static_cast<size_t>(n));
    for (int u = 0; u < n; ++u) {
        int last = 63 - std::countl_zero(g.closed_neighbors(u));
        finalize_at[static_cast<size_t>(last)].push_back(u);
    }

    std::vector<int> image(static_cast<size_t>(n), 0);
    BigCount total = 0;
    auto witness = [&](int u) {
        for (VertexSet rest = g.neighbors(u); rest;) {
            int w = std::countr_zero(rest);
            rest &= rest - 1;
            if (h.adjacent(image[static_cast<size_t>(u)], image[static_cast<size_t>(w)]))
                return true;
        }
        return false;
    };
    auto recurse = [&](auto&& self, int v) -> void {
        if (v == n) {
            ++total;
            return;
        }
        for (int c = 0; c < q; ++c) {
            image[static_cast<size_t>(v)] = c;
            bool ok = true;
            for (int u : finalize_at[static_cast<size_t>(v)])
                if (!witness(u)) {
                    ok = false;
                    break;
                }
            if (ok) self(self, v + 1);
        }
    };
    recurse(recurse, 0);
    return total;
}

BigCount path_id_closed_form(int n) {
    if (n < 2) throw std::invalid_argument("id(P_n) closed form needs n >= 2");
    BigCount prev = 1, cur = 1;  // F_0, F_1
    for (int i = 2; i <= n - 2; ++i) {
        BigCount next = cur + prev;
        prev = cur;
        cur = next;
    }
    BigCount f = n - 2 == 0 ? prev : cur;  // F_{n-2}
    return 2 * f;
}

BigCount cycle_xhom_closed_form(int n) {
    if (n < 3) throw std::invalid_argument("cycle closed form needs n >= 3");
    static const std::vector<BigCount> base = [] {
        std::vector<BigCount> b;
        ImageGraph e2 = ImageGraph::loops(2);
        for (int m = 3; m <= 6; ++m) b.push_back(xhom_count(make_cycle(m), e2));
        return b;
    }();
    std::vector<BigCount> c(static_cast<size_t>(std::max(n, 6)) + 1);
    for (int m = 3; m <= 6; ++m) c[static_cast<size_t>(m)] = base[static_cast<size_t>(m - 3)];
    for (int m = 7; m <= n; ++m)
        c[static_cast<size_t>(m)] = 2 * c[static_cast<size_t>(m - 1)] - c[static_cast<size_t>(m - 2)] +
                                    c[static_cast<size_t>(m - 4)];
    return c[static_cast<size_t>(n)];
}

}  // namespace domcount
