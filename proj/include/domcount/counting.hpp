#ifndef DOMCOUNT_COUNTING_HPP
#define DOMCOUNT_COUNTING_HPP

// Exact enumeration kernels: legal neighborhood colorings, domination-type
// subset counts and polynomials, homomorphisms and existence homomorphisms,
// and the two path/cycle closed forms.

#include <cstdint>
#include <string>
#include <vector>

#include "domcount/conditions.hpp"
#include "domcount/exact.hpp"
#include "domcount/graph.hpp"

namespace domcount {

// Default enumeration guards: colorings/maps are capped at 2^30 leaves,
// subset scans at 2^26 masks. Both are widened explicitly by callers.
constexpr int kDefaultColoringCapBits = 30;
constexpr int kDefaultSubsetCapBits = 26;

// Homomorphism target: a small graph on q <= 16 vertices, loops allowed.
class ImageGraph {
public:
    explicit ImageGraph(int q);

    int order() const { return q_; }
    void add_edge(int a, int b);  // a == b adds a loop
    bool adjacent(int a, int b) const { return (adj_[static_cast<size_t>(a)] >> b) & 1; }
    bool has_loop(int v) const { return adjacent(v, v); }

    // Two vertices, an edge between them, a loop at vertex 1. Hom counts
    // independent sets (preimage of vertex 0); XHom counts dominating sets.
    static ImageGraph h_ind();
    // q vertices, a loop on each, no other edges.
    static ImageGraph loops(int q);
    // Loopless complete graph.
    static ImageGraph complete(int q);
    static ImageGraph from_json_file(const std::string& path);

    bool operator==(const ImageGraph&) const = default;

private:
    int q_;
    std::vector<std::uint32_t> adj_;
};

// Generating polynomial with exact coefficients, indexed by degree.
struct Polynomial {
    std::vector<BigCount> coeff;

    int degree() const { return static_cast<int>(coeff.size()) - 1; }
    BigCount at(int k) const;
    BigCount total() const;  // evaluation at 1
    BigRational eval(const BigRational& mu) const;
    void trim();  // drop trailing zero coefficients

    bool operator==(const Polynomial&) const = default;
};

// l(G, L) / l_c(G, L): colorings phi : V -> [k] with every open (closed)
// neighborhood multiset legal. Backtracking over vertices in index order; a
// neighborhood's condition is tested as soon as its last member is colored.
BigCount count_legal_colorings(const Graph& g, int k, const ColoringCondition& condition,
                               bool closed, int cap_bits = kDefaultColoringCapBits);
// Weighted version: sum of per-coloring activation products.
BigRational count_legal_colorings_weighted(const Graph& g, const ColoringCondition& condition,
                                           const Activation& lambda, bool closed,
                                           int cap_bits = kDefaultColoringCapBits);

// Coefficient k counts the (strong) dominating sets of size k.
Polynomial dominating_polynomial(const Graph& g, bool strong,
                                 int cap_bits = kDefaultSubsetCapBits);

BigCount count_dominating_sets(const Graph& g, bool strong = false,
                               int cap_bits = kDefaultSubsetCapBits);
BigCount count_minimal_dominating_sets(const Graph& g, int cap_bits = kDefaultSubsetCapBits);
BigCount count_independent_sets(const Graph& g, int cap_bits = kDefaultSubsetCapBits);
BigCount count_maximal_independent_sets(const Graph& g, int cap_bits = kDefaultSubsetCapBits);

// hom(G, H): maps with every edge of G landing on an edge (or loop) of H.
BigCount hom_count(const Graph& g, const ImageGraph& h, int cap_bits = kDefaultColoringCapBits);
// Z^lambda(G, H): homomorphisms weighted by vertex activations on V(H).
BigRational hom_weight(const Graph& g, const ImageGraph& h, const Activation& lambda,
                       int cap_bits = kDefaultColoringCapBits);

// xhom(G, H): maps where every vertex v has some neighbor w with
// phi(v)phi(w) an edge of H. Isolated vertices make the count zero.
BigCount xhom_count(const Graph& g, const ImageGraph& h, int cap_bits = kDefaultColoringCapBits);

// id(P_n) = 2 F_{n-2} with F_0 = F_1 = 1, for n >= 2.
BigCount path_id_closed_form(int n);

// c_n = xhom(C_n, E_2): brute force for n <= 6, then
// c_n = 2 c_{n-1} - c_{n-2} + c_{n-4}.
BigCount cycle_xhom_closed_form(int n);

}  // namespace domcount

#endif
