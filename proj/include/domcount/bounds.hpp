#ifndef DOMCOUNT_BOUNDS_HPP
#define DOMCOUNT_BOUNDS_HPP

// Exact verification of the extremal inequalities: cross-multiplied power
// comparisons (never real-valued roots), Shearer entropy reports, and
// exhaustive desk-scale sweeps.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "domcount/conditions.hpp"
#include "domcount/counting.hpp"
#include "domcount/exact.hpp"
#include "domcount/graph.hpp"

namespace domcount {

enum class Verdict { holds, equality, fails, holds_numeric, fails_numeric, not_applicable };

std::string to_string(Verdict v);

struct BoundReport {
    std::string name;
    BigRational lhs_base = 0;
    BigRational rhs_base = 0;
    int lhs_exp = 1;
    int rhs_exp = 1;
    BigRational lhs_value = 0;  // lhs_base^lhs_exp, the compared witness
    BigRational rhs_value = 0;  // rhs_base^rhs_exp
    Verdict verdict = Verdict::not_applicable;
    std::string note;

    bool failed() const { return verdict == Verdict::fails || verdict == Verdict::fails_numeric; }
    bool exact() const {
        return verdict == Verdict::holds || verdict == Verdict::equality ||
               verdict == Verdict::fails;
    }
};

// Exact verdict on a^p <= b^q for nonnegative a, b and positive p, q.
BoundReport check_power_inequality(const BigRational& a, int p, const BigRational& b, int q,
                                   std::string name = "power");

// ds(G)^(r+1) vs ds(K_{r+1})^n = (2^{r+1}-1)^n for r-regular G.
BoundReport check_ds_bound(const Graph& g);

// l(G,L)^r vs N(r,L)^n and l_c(G,L)^(r+1) vs N(r+1,L)^n; weighted versions
// when an activation is supplied. Requires a regular graph of degree >= 1.
std::pair<BoundReport, BoundReport> check_legal_bounds(const Graph& g, int k,
                                                       const ColoringCondition& condition,
                                                       const Activation* lambda = nullptr);

// D_G(mu)^(r+1) vs D_{K_{r+1}}(mu)^n and (D^s_G(mu))^(2r) vs
// (D^s_{K_{r,r}}(mu))^n at an exact rational mu > 0.
std::pair<BoundReport, BoundReport> check_polynomial_bounds(const Graph& g,
                                                            const BigRational& mu);

// Proper/rainbow x open/closed neighborhood-hypergraph coloring bounds with
// the closed-form right-hand sides cross-checked against N(r, L).
std::array<BoundReport, 4> check_prorain_bounds(const Graph& g, int q);

// Background theorems: Moon-Moser, Kahn-Zhao, Galvin-Tetali (unweighted and
// weighted, when H is given), and the Fomin et al. minimal-dominating-set
// bound (numeric, the constant is a decimal literal).
std::vector<BoundReport> check_background_bounds(const Graph& g,
                                                 const ImageGraph* h = nullptr,
                                                 const Activation* lambda = nullptr);

struct EntropyReport {
    double total_entropy = 0;                  // H(X) = log2(family size), bits
    std::vector<VertexSet> cover;              // the multiset A of neighborhoods
    int k = 0;                                 // min coverage multiplicity
    std::vector<double> projection_entropies;  // H(X_A) per cover set
    double shearer_rhs = 0;                    // (1/k) sum of projection entropies
    double slack = 0;                          // shearer_rhs - total_entropy
    BigCount family_size = 0;
};

enum class Structure { dominating, strong_dominating };

// Shearer data for the uniform random member of the legal-coloring family:
// the cover is the multiset of (closed) neighborhoods, projections are
// pattern distributions computed by exact counting. Throws if the family is
// empty, some vertex is uncovered, or the inequality fails beyond 1e-9.
EntropyReport shearer_report(const Graph& g, int k, const ColoringCondition& condition,
                             bool closed, int cap_bits = kDefaultColoringCapBits);
EntropyReport shearer_report(const Graph& g, Structure structure,
                             int cap_bits = kDefaultColoringCapBits);

struct SweepReport {
    std::string name;
    long long instances = 0;
    long long violations = 0;
    long long equalities = 0;
    long long spot_checks = 0;
    bool characterization_ok = true;  // sweep-specific equality/side condition
    double min_margin = 0.0;          // smallest numeric margin seen, if any
    std::string note;

    bool ok() const { return violations == 0 && characterization_ok; }
};

// id(T) <= id(P_n) over all labeled trees on n vertices, tracking that
// equality happens exactly on the max-degree-<=2 trees.
SweepReport tree_extremal_sweep(int n, int cap = 9);

// xhom(G, E_2)^6 vs xhom(C_6, E_2)^n for a 2-regular graph.
BoundReport cycle_extremal_check(const Graph& g);

// Exhaustive sweeps used by the acceptance suite and the CLI. All of them
// enumerate labeled graphs; the two big 2-regular sweeps memoize exact
// counts per cycle type (counts are label-invariant) and re-verify the memo
// against direct per-graph computation on a deterministic subsample.
SweepReport sweep_ds_bound(int max_n, int max_r);
SweepReport sweep_legal_two_regular(int max_n, long long spot_interval = 4096);
SweepReport sweep_moon_moser(int max_n);
SweepReport sweep_fomin(int max_n);
SweepReport sweep_shearer_two_regular(int max_n, long long spot_interval = 1024);
SweepReport sweep_cycle_unions(int max_n);

}  // namespace domcount

#endif
