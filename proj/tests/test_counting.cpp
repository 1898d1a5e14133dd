#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "domcount/counting.hpp"
#include "oracles.hpp"

using namespace domcount;

TEST_CASE("image graphs") {
    ImageGraph hind = ImageGraph::h_ind();
    CHECK(hind.adjacent(0, 1));
    CHECK(hind.has_loop(1));
    CHECK(!hind.has_loop(0));

    ImageGraph e3 = ImageGraph::loops(3);
    CHECK(e3.has_loop(2));
    CHECK(!e3.adjacent(0, 1));

    ImageGraph k3 = ImageGraph::complete(3);
    CHECK(k3.adjacent(0, 2));
    CHECK(!k3.has_loop(0));

    CHECK_THROWS_AS(ImageGraph(17), std::invalid_argument);
    CHECK_THROWS_AS(ImageGraph(0), std::invalid_argument);

    const char* path = "image_test.json";
    {
        std::ofstream out(path);
        out << R"({"q": 2, "edges": [[0,1],[1,1]]})";
    }
    CHECK(ImageGraph::from_json_file(path) == ImageGraph::h_ind());
    std::remove(path);
}

TEST_CASE("legal coloring counts") {
    ColoringCondition dom = ColoringCondition::dominating();
    CHECK(count_legal_colorings(make_complete(3), 2, dom, true) == 7);
    CHECK(count_legal_colorings(make_complete_bipartite(2, 2), 2, dom, false) == 9);

    Activation lam12 = Activation::parse("1,2");
    CHECK(count_legal_colorings_weighted(make_complete(2), dom, lam12, true) == 8);

    // isolated vertex: open mode legality rides on the empty multiset
    Graph isolated = make_empty(2);
    CHECK(count_legal_colorings(isolated, 2, dom, false) == 0);
    CHECK(count_legal_colorings(isolated, 2, ColoringCondition::rainbow(2), false) == 4);

    CHECK_THROWS_AS(count_legal_colorings(make_complete(3), 0, dom, true),
                    std::invalid_argument);
    CHECK_THROWS_AS(count_legal_colorings(make_complete(3), 2, dom, true, 2), CapExceeded);
}

TEST_CASE("legal coloring counts equal the naive loop, all graphs n <= 4") {
    std::vector<std::pair<int, ColoringCondition>> conds = {
        {2, ColoringCondition::dominating()},
        {2, ColoringCondition::proper(2)},
        {2, ColoringCondition::rainbow(2)},
        {3, ColoringCondition::proper(3)}};
    for (int n = 1; n <= 4; ++n)
        for_each_labeled_graph(n, [&](const Graph& g) {
            for (const auto& [k, cond] : conds)
                for (bool closed : {false, true})
                    CHECK(BigRational(count_legal_colorings(g, k, cond, closed)) ==
                          oracle::count_legal(g, k, cond, closed));
        });
}

TEST_CASE("weighted legal colorings: naive loop and lambda = 1 collapse") {
    ColoringCondition dom = ColoringCondition::dominating();
    Activation unit = Activation::uniform(2);
    Activation mixed = Activation::parse("1/2,3");
    for (int n = 1; n <= 3; ++n)
        for_each_labeled_graph(n, [&](const Graph& g) {
            for (bool closed : {false, true}) {
                CHECK(count_legal_colorings_weighted(g, dom, mixed, closed) ==
                      oracle::count_legal(g, 2, dom, closed, &mixed));
                CHECK(count_legal_colorings_weighted(g, dom, unit, closed) ==
                      BigRational(count_legal_colorings(g, 2, dom, closed)));
            }
        });
}

TEST_CASE("graph-level blow-up identity") {
    ColoringCondition dom = ColoringCondition::dominating();
    for (int w0 = 1; w0 <= 3; ++w0)
        for (int w1 = 1; w1 <= 3; ++w1) {
            Activation lam;
            lam.weights = {BigRational(w0), BigRational(w1)};
            auto blown = blowup(dom, lam);
            for_each_labeled_graph(3, [&](const Graph& g) {
                for (bool closed : {false, true})
                    CHECK(count_legal_colorings_weighted(g, dom, lam, closed) ==
                          BigRational(count_legal_colorings(g, blown.colors, blown.condition,
                                                            closed)));
            });
        }
}

TEST_CASE("dominating polynomial") {
    Polynomial k3 = dominating_polynomial(make_complete(3), false);
    CHECK(k3.coeff == std::vector<BigCount>{0, 3, 3, 1});

    Polynomial c4 = dominating_polynomial(make_cycle(4), false);
    CHECK(c4.total() == 11);
    CHECK(c4.coeff == std::vector<BigCount>{0, 0, 6, 4, 1});

    Polynomial k22s = dominating_polynomial(make_complete_bipartite(2, 2), true);
    CHECK(k22s.coeff == std::vector<BigCount>{0, 0, 4, 4, 1});  // (mu^2 + 2 mu)^2

    // evaluation: D_{K_3}(1/2) = (3/2)^3 - 1
    CHECK(k3.eval(BigRational(1, 2)) == BigRational(19, 8));

    // strong polynomial of a graph with an isolated vertex is zero
    Polynomial zero = dominating_polynomial(make_empty(2), true);
    CHECK(zero.coeff == std::vector<BigCount>{0});
    CHECK(zero.total() == 0);

    CHECK_THROWS_AS(dominating_polynomial(make_cycle(30), false), CapExceeded);
}

TEST_CASE("subset counters match naive filtering, all graphs n <= 4") {
    for (int n = 1; n <= 4; ++n)
        for_each_labeled_graph(n, [&](const Graph& g) {
            CHECK(count_dominating_sets(g, false) ==
                  oracle::count_subsets(g, oracle::dominating_pred));
            CHECK(count_dominating_sets(g, true) ==
                  oracle::count_subsets(g, oracle::strong_dominating_pred));
            CHECK(count_minimal_dominating_sets(g) ==
                  oracle::count_subsets(g, oracle::minimal_dominating_pred));
            CHECK(count_independent_sets(g) ==
                  oracle::count_subsets(g, oracle::independent_pred));
            CHECK(count_maximal_independent_sets(g) ==
                  oracle::count_subsets(g, oracle::maximal_independent_pred));
            CHECK(dominating_polynomial(g, false).total() == count_dominating_sets(g, false));
            CHECK(dominating_polynomial(g, true).total() == count_dominating_sets(g, true));
        });
}

TEST_CASE("spot values for the subset counters") {
    CHECK(count_minimal_dominating_sets(make_complete(3)) == 3);
    CHECK(count_minimal_dominating_sets(make_cycle(4)) == 6);
    CHECK(count_minimal_dominating_sets(make_empty(2)) == 1);

    CHECK(count_maximal_independent_sets(make_complete(3)) == 3);
    CHECK(count_maximal_independent_sets(make_cycle(4)) == 2);
    Graph two_triangles = disjoint_union(make_complete(3), make_complete(3));
    CHECK(count_maximal_independent_sets(two_triangles) == 9);

    CHECK(count_independent_sets(make_complete_bipartite(2, 2)) == 7);
    CHECK(count_independent_sets(make_petersen()) == 76);
    CHECK(count_maximal_independent_sets(make_petersen()) == 15);
    CHECK(count_dominating_sets(make_petersen()) == 653);

    // low coefficients vanish below the domination number
    Polynomial pet = dominating_polynomial(make_petersen(), false);
    CHECK(pet.at(0) == 0);
    CHECK(pet.at(1) == 0);
    CHECK(pet.at(2) == 0);
    CHECK(pet.at(3) > 0);  // gamma(Petersen) = 3
}

TEST_CASE("homomorphism counts") {
    CHECK(hom_count(make_complete(2), ImageGraph::complete(3)) == 6);
    CHECK(hom_count(make_cycle(4), ImageGraph::h_ind()) == 7);
    CHECK(hom_count(make_complete(2), ImageGraph::h_ind()) == 3);
    CHECK(hom_count(make_path(3), ImageGraph::complete(3)) == 12);

    Activation unit = Activation::uniform(2);
    CHECK(hom_weight(make_complete(2), ImageGraph::h_ind(), unit) == 3);

    Activation lam = Activation::parse("1,1/2");
    for (int n = 1; n <= 4; ++n)
        for_each_labeled_graph(n, [&](const Graph& g) {
            CHECK(BigRational(hom_count(g, ImageGraph::h_ind())) ==
                  oracle::hom(g, ImageGraph::h_ind()));
            CHECK(hom_weight(g, ImageGraph::h_ind(), lam) ==
                  oracle::hom(g, ImageGraph::h_ind(), &lam));
        });

    CHECK_THROWS_AS(hom_count(make_cycle(40), ImageGraph::complete(3)), CapExceeded);
}

TEST_CASE("existence homomorphism counts") {
    CHECK(xhom_count(make_complete(2), ImageGraph::h_ind()) == 3);
    CHECK(xhom_count(make_complete(3), ImageGraph::complete(2)) == 6);
    CHECK(xhom_count(make_cycle(4), ImageGraph::loops(2)) == 6);
    CHECK(xhom_count(make_path(4), ImageGraph::loops(2)) == 4);

    // isolated vertices have no witness
    CHECK(xhom_count(make_empty(3), ImageGraph::h_ind()) == 0);
    CHECK(xhom_count(disjoint_union(make_complete(2), make_empty(1)), ImageGraph::h_ind()) == 0);

    for (int n = 1; n <= 4; ++n)
        for_each_labeled_graph(n, [&](const Graph& g) {
            CHECK(xhom_count(g, ImageGraph::loops(2)) == oracle::xhom(g, ImageGraph::loops(2)));
            CHECK(xhom_count(g, ImageGraph::h_ind()) == oracle::xhom(g, ImageGraph::h_ind()));
        });
}

TEST_CASE("cross-operation identities, all graphs n <= 4 with min degree >= 1") {
    for (int n = 2; n <= 4; ++n)
        for_each_labeled_graph(n, [&](const Graph& g) {
            if (min_degree(g) < 1) return;
            CHECK(xhom_count(g, ImageGraph::h_ind()) == count_dominating_sets(g, false));
            CHECK(hom_count(g, ImageGraph::h_ind()) == count_independent_sets(g));
            for (int q = 1; q <= 3; ++q)
                CHECK(xhom_count(g, ImageGraph::complete(q)) ==
                      count_legal_colorings(g, q, ColoringCondition::proper(q), true));
            CHECK(count_legal_colorings(g, 2, ColoringCondition::dominating(), true) ==
                  count_dominating_sets(g, false));
            CHECK(count_legal_colorings(g, 2, ColoringCondition::dominating(), false) ==
                  count_dominating_sets(g, true));
        });
}

TEST_CASE("hom and xhom are multiplicative over disjoint unions") {
    std::vector<Graph> parts = {make_complete(2), make_complete(3), make_cycle(4), make_path(3)};
    ImageGraph e2 = ImageGraph::loops(2);
    ImageGraph hind = ImageGraph::h_ind();
    for (const Graph& a : parts)
        for (const Graph& b : parts) {
            Graph u = disjoint_union(a, b);
            CHECK(hom_count(u, hind) == hom_count(a, hind) * hom_count(b, hind));
            CHECK(xhom_count(u, e2) == xhom_count(a, e2) * xhom_count(b, e2));
            CHECK(xhom_count(u, hind) == xhom_count(a, hind) * xhom_count(b, hind));
        }
}

TEST_CASE("path closed form") {
    CHECK(path_id_closed_form(2) == 2);
    CHECK(path_id_closed_form(3) == 2);
    CHECK(path_id_closed_form(4) == 4);
    CHECK(path_id_closed_form(10) == 68);
    CHECK_THROWS_AS(path_id_closed_form(1), std::invalid_argument);

    ImageGraph e2 = ImageGraph::loops(2);
    for (int n = 2; n <= 12; ++n)
        CHECK(path_id_closed_form(n) == xhom_count(make_path(n), e2));
}

TEST_CASE("cycle closed form") {
    CHECK(cycle_xhom_closed_form(3) == 2);
    CHECK(cycle_xhom_closed_form(6) == 20);
    CHECK(cycle_xhom_closed_form(7) == 2 * 20 - 12 + 2);
    CHECK_THROWS_AS(cycle_xhom_closed_form(2), std::invalid_argument);

    ImageGraph e2 = ImageGraph::loops(2);
    for (int n = 3; n <= 12; ++n)
        CHECK(cycle_xhom_closed_form(n) == xhom_count(make_cycle(n), e2));
}
