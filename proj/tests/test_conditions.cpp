#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "domcount/conditions.hpp"
#include "oracles.hpp"

using namespace domcount;

namespace {

ColorMultiset ms(std::vector<int> counts) {
    ColorMultiset m;
    m.counts = std::move(counts);
    return m;
}

}  // namespace

TEST_CASE("membership predicates") {
    ColoringCondition dom = ColoringCondition::dominating();
    CHECK(dom.allows(ms({0, 1})));
    CHECK(dom.allows(ms({2, 3})));
    CHECK(!dom.allows(ms({3, 0})));
    CHECK(!dom.allows(ms({0, 0})));  // empty multiset has no 1

    ColoringCondition pr = ColoringCondition::proper(3);
    CHECK(pr.allows(ms({1, 1, 0})));
    CHECK(!pr.allows(ms({0, 4, 0})));
    CHECK(!pr.allows(ms({0, 0, 0})));

    ColoringCondition rb = ColoringCondition::rainbow(3);
    CHECK(rb.allows(ms({1, 0, 1})));
    CHECK(rb.allows(ms({0, 0, 0})));  // the empty multiset is a subset of K
    CHECK(!rb.allows(ms({2, 0, 0})));

    ColoringCondition alc = ColoringCondition::at_least_count(3, 2, 2);
    CHECK(alc.allows(ms({0, 0, 2})));
    CHECK(!alc.allows(ms({5, 5, 1})));

    CHECK_THROWS_AS(dom.allows(ms({1, 1, 1})), std::invalid_argument);
    CHECK_THROWS_AS(ColoringCondition::proper(0), std::invalid_argument);
    CHECK_THROWS_AS(ColoringCondition::at_least_count(2, 2, 1), std::invalid_argument);
}

TEST_CASE("explicit lists") {
    std::map<int, std::set<std::vector<int>>> allowed;
    allowed[2] = {{2, 0}, {1, 1}};
    ColoringCondition ex = ColoringCondition::explicit_list(2, allowed);
    CHECK(ex.allows(ms({2, 0})));
    CHECK(ex.allows(ms({1, 1})));
    CHECK(!ex.allows(ms({0, 2})));
    CHECK(!ex.allows(ms({1, 0})));  // size 1 is unlisted

    CHECK_THROWS_AS(ColoringCondition::explicit_list(2, {{2, {{1, 0}}}}),
                    std::invalid_argument);  // sums to 1, listed under 2
    CHECK_THROWS_AS(ColoringCondition::explicit_list(2, {{1, {{1}}}}),
                    std::invalid_argument);  // wrong vector length
}

TEST_CASE("condition JSON loading") {
    const char* path = "cond_test.json";
    {
        std::ofstream out(path);
        out << R"({"colors": 2, "sizes": {"2": [[2,0],[1,1]], "3": [[3,0]]}})";
    }
    ColoringCondition c = ColoringCondition::from_json_file(path);
    CHECK(c.colors() == 2);
    CHECK(c.allows(ms({2, 0})));
    CHECK(c.allows(ms({1, 1})));
    CHECK(c.allows(ms({3, 0})));
    CHECK(!c.allows(ms({0, 2})));
    CHECK(!c.allows(ms({2, 1})));
    std::remove(path);

    CHECK_THROWS_AS(ColoringCondition::from_json_file("does_not_exist.json"),
                    std::invalid_argument);
}

TEST_CASE("multinomial") {
    CHECK(multinomial(5, ms({2, 2, 1})) == 30);
    CHECK(multinomial(4, ms({4, 0})) == 1);
    CHECK(multinomial(7, ms({0, 7})) == 1);
    CHECK(multinomial(0, ms({0, 0})) == 1);
    CHECK_THROWS_AS(multinomial(3, ms({2, 2})), std::invalid_argument);

    // [4] -> {a, b} with image {a,a,b,b}: count by direct enumeration
    int direct = 0;
    std::vector<int> f(4, 0);
    do {
        if (std::count(f.begin(), f.end(), 0) == 2) ++direct;
    } while (oracle::next_word(f, 2));
    CHECK(multinomial(4, ms({2, 2})) == direct);
    CHECK(direct == 6);
}

TEST_CASE("legal function counts") {
    CHECK(legal_function_count(3, 2, ColoringCondition::dominating()) == 7);
    CHECK(legal_function_count(3, 2, ColoringCondition::proper(2)) == 6);
    for (int q = 1; q <= 5; ++q) {
        CHECK(legal_function_count(2, q, ColoringCondition::rainbow(q)) == q * (q - 1));
        CHECK(legal_function_count(3, q, ColoringCondition::proper(q)) ==
              pow_count(BigCount(q), 3) - q);
    }
    // r = 0: only the empty multiset
    CHECK(legal_function_count(0, 2, ColoringCondition::rainbow(2)) == 1);
    CHECK(legal_function_count(0, 2, ColoringCondition::dominating()) == 0);
    CHECK_THROWS_AS(legal_function_count(-1, 2, ColoringCondition::dominating()),
                    std::invalid_argument);
}

TEST_CASE("legal function counts equal brute-force enumeration") {
    for (int k = 1; k <= 3; ++k) {
        std::vector<ColoringCondition> conds = {ColoringCondition::proper(k),
                                                ColoringCondition::rainbow(k),
                                                ColoringCondition::at_least_count(k, k - 1, 1)};
        if (k >= 2) conds.push_back(ColoringCondition::at_least_count(k, 1, 2));
        for (const auto& cond : conds)
            for (int r = 0; r <= 5; ++r)
                CHECK(legal_function_count(r, k, cond) == oracle::legal_functions(r, k, cond));
    }
}

TEST_CASE("weighted legal function counts") {
    Activation unit = Activation::uniform(2);
    Activation lam12 = Activation::parse("1,2");
    ColoringCondition dom = ColoringCondition::dominating();

    CHECK(weighted_legal_function_count(3, dom, unit) == 7);
    CHECK(weighted_legal_function_count(3, dom, lam12) == 26);

    Activation ab = Activation::parse("2/3,5");
    BigRational expect = 2 * BigRational(2, 3) * 5;  // two orderings of {x, y}
    CHECK(weighted_legal_function_count(2, ColoringCondition::rainbow(2), ab) == expect);

    // lambda = 1 collapses to the unweighted count
    for (int r = 0; r <= 5; ++r) {
        CHECK(weighted_legal_function_count(r, dom, unit) ==
              BigRational(legal_function_count(r, 2, dom)));
        CHECK(weighted_legal_function_count(r, ColoringCondition::proper(2), unit) ==
              BigRational(legal_function_count(r, 2, ColoringCondition::proper(2))));
    }

    // and the weighted count matches direct enumeration on rationals
    Activation mixed = Activation::parse("1/2,3/4");
    for (int r = 0; r <= 4; ++r)
        CHECK(weighted_legal_function_count(r, dom, mixed) ==
              oracle::weighted_legal_functions(r, dom, mixed));

    CHECK_THROWS_AS(Activation::parse("1,0"), std::invalid_argument);
    CHECK_THROWS_AS(Activation::parse("1,-2"), std::invalid_argument);
    CHECK_THROWS_AS(Activation::parse("1,x"), std::invalid_argument);
}

TEST_CASE("blow-up reduction") {
    ColoringCondition dom = ColoringCondition::dominating();

    // identity blow-up leaves the color count alone
    auto same = blowup(dom, Activation::parse("1,1"));
    CHECK(same.colors == 2);
    for (int s = 0; s <= 4; ++s)
        CHECK(legal_function_count(s, 2, same.condition) == legal_function_count(s, 2, dom));

    auto doubled = blowup(dom, Activation::parse("1,2"));
    CHECK(doubled.colors == 3);
    CHECK(legal_function_count(1, 3, doubled.condition) == 2);
    CHECK(legal_function_count(2, 3, doubled.condition) == 8);

    CHECK_THROWS_AS(blowup(dom, Activation::parse("1,1/2")), std::invalid_argument);
}

TEST_CASE("blow-up identity N(s, L') = N^lambda(s, L), exhaustively") {
    for (int w0 = 1; w0 <= 3; ++w0)
        for (int w1 = 1; w1 <= 3; ++w1) {
            Activation lam;
            lam.weights = {BigRational(w0), BigRational(w1)};
            for (const auto& cond : {ColoringCondition::dominating(),
                                     ColoringCondition::proper(2),
                                     ColoringCondition::rainbow(2)}) {
                auto blown = blowup(cond, lam);
                for (int s = 0; s <= 4; ++s)
                    CHECK(BigRational(legal_function_count(s, blown.colors, blown.condition)) ==
                          weighted_legal_function_count(s, cond, lam));
            }
        }
}

TEST_CASE("monotone conditions nest") {
    // L1 inside L2 gives N(r, L1) <= N(r, L2): two-ones inside one-one, and
    // rainbow inside everything-of-that-size.
    for (int r = 0; r <= 5; ++r) {
        CHECK(legal_function_count(r, 2, ColoringCondition::at_least_count(2, 1, 2)) <=
              legal_function_count(r, 2, ColoringCondition::dominating()));
        std::map<int, std::set<std::vector<int>>> all_of_size_r;
        for (int a = 0; a <= r; ++a) all_of_size_r[r].insert({a, r - a});
        CHECK(legal_function_count(r, 2, ColoringCondition::rainbow(2)) <=
              legal_function_count(r, 2, ColoringCondition::explicit_list(2, all_of_size_r)));
    }
}

TEST_CASE("degenerate conditions") {
    // empty family: explicit list with nothing in it
    ColoringCondition none = ColoringCondition::explicit_list(2, {});
    for (int r = 0; r <= 3; ++r) CHECK(legal_function_count(r, 2, none) == 0);

    // family containing only the empty multiset
    ColoringCondition only_empty = ColoringCondition::explicit_list(2, {{0, {{0, 0}}}});
    CHECK(legal_function_count(0, 2, only_empty) == 1);
    CHECK(legal_function_count(1, 2, only_empty) == 0);
}
