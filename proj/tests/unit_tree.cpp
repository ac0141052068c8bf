#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "puiseux/parse.hpp"
#include "puiseux/tree.hpp"

using namespace puiseux;

namespace {

BiPoly<QQ> Q(const std::string& s) { return parse_bipoly(s); }

PolygonTree tree_p(const std::string& s, long p, std::uint64_t seed = 1) {
    Rng rng(seed);
    return polygon_tree_fq(parse_bipoly_fq(s, fp_context(Integer(p))), rng);
}

PolygonTree leaf(long q, long m, long l, std::vector<PolygonTree::Part> profile) {
    PolygonTree t;
    t.edges.push_back({q, m, l, std::move(profile), {}});
    return t;
}

}  // namespace

TEST_CASE("cusp tree over Q and F_5") {
    auto tq = polygon_tree_q(Q("y^2 - x^3"));
    auto expect = leaf(2, 3, 6, {{1, 1}});
    CHECK(tree_equal(tq, expect));
    CHECK(tree_equal(tree_p("y^2 - x^3", 5), expect));
    CHECK(tree_equal(tq, tree_p("y^2 - x^3", 5)));
}

TEST_CASE("node tree over Q vs F_2") {
    auto tq = polygon_tree_q(Q("y^2 - x^2 - x^3"));
    CHECK(tree_equal(tq, leaf(1, 1, 2, {{2, 1}})));

    // over F_2 the characteristic polynomial degenerates to (T+1)^2
    Rng rng(3);
    auto f2 = parse_bipoly_fq("y^2 - x^2 - x^3", fp_context(Integer(2)));
    auto t2 = polygon_tree_fq(f2, rng, TreeOptions{.check_squarefree = false});
    REQUIRE(t2.edges.size() == 1);
    CHECK(t2.edges[0].profile == std::vector<PolygonTree::Part>{{1, 2}});
    REQUIRE(t2.edges[0].children.size() == 1);
    CHECK_FALSE(tree_equal(tq, t2));
}

TEST_CASE("trivial and reflexive") {
    auto t = polygon_tree_q(Q("y - x"));
    CHECK(tree_equal(t, t));
    CHECK(tree_equal(t, leaf(1, 1, 1, {{1, 1}})));
}

TEST_CASE("ramphoid-type cusp: one descent") {
    // (y^2 - x^3)^2 - x^7
    auto f = Q("y^4 - 2*x^3*y^2 + x^6 - x^7");
    auto tq = polygon_tree_q(f);
    PolygonTree expect;
    PolygonTree child = leaf(1, 1, 2, {{2, 1}});
    expect.edges.push_back({2, 3, 12, {{1, 2}}, {{2, {{PolygonTree::Weight(1, 1), child}}}}});
    CHECK(tree_equal(tq, expect));
    for (long p : {5, 7, 11, 13}) CHECK(tree_equal(tree_p(bipoly_str(f), p), tq));
}

TEST_CASE("descent into an irrational double point aggregates conjugates") {
    // (y^2 - 2x^2)^2 + x^5: profile {(2,2)}, child over Q[z]/(z^2-2)
    auto f = Q("y^4 - 4*x^2*y^2 + 4*x^4 + x^5");
    auto tq = polygon_tree_q(f);
    PolygonTree expect;
    PolygonTree child = leaf(2, 1, 2, {{1, 1}});
    expect.edges.push_back({1, 1, 4, {{2, 2}}, {{2, {{PolygonTree::Weight(2, 1), child}}}}});
    CHECK(tree_equal(tq, expect));
    // good primes aggregate the two conjugate branches to the same weight-2 group
    for (long p : {5, 7, 11}) CHECK(tree_equal(tree_p(bipoly_str(f), p), tq));
}

TEST_CASE("y-content is recorded at the node") {
    auto t = polygon_tree_q(Q("y^2 - x*y"));
    CHECK(t.content == 1);
    REQUIRE(t.edges.size() == 1);
    CHECK(t.edges[0].q == 1);
    CHECK(t.edges[0].m == 1);
}

TEST_CASE("squarefree precondition") {
    CHECK_THROWS_AS(polygon_tree_q(Q("y^2 - 2*x*y + x^2")), NotSquarefree);
    Rng rng(1);
    CHECK_THROWS_AS(
        polygon_tree_fq(parse_bipoly_fq("y^2 - 2*x*y + x^2", fp_context(Integer(7))), rng),
        NotSquarefree);
}

TEST_CASE("trees are rng independent") {
    for (const char* s : {"y^2 - x^3", "y^4 - 2*x^3*y^2 + x^6 - x^7", "y^3 - x^2*y + x^5"}) {
        auto a = tree_p(s, 10007, 111);
        auto b = tree_p(s, 10007, 222);
        CHECK(tree_equal(a, b));
    }
}

TEST_CASE("dynamic split: branches with different continuations") {
    // ((y-x)^2 - x^5)((y-2x)^2 - x^7): root profile {(2,2)}, the descent ring
    // Q[z]/((z-1)(z-2)) must split into two different subtrees
    auto f = Q("(1)*y^2 - 2*x*y + x^2 - x^5") * Q("y^2 - 4*x*y + 4*x^2 - x^7");
    auto tq = polygon_tree_q(f);
    REQUIRE(tq.edges.size() == 1);
    CHECK(tq.edges[0].q == 1);
    CHECK(tq.edges[0].m == 1);
    CHECK(tq.edges[0].l == 4);
    CHECK(tq.edges[0].profile == std::vector<PolygonTree::Part>{{2, 2}});
    REQUIRE(tq.edges[0].children.size() == 1);
    const auto& grp = tq.edges[0].children[0];
    REQUIRE(grp.sub.size() == 2);  // two distinct subtrees, weight 1 each
    CHECK(grp.sub[0].first == PolygonTree::Weight(1, 1));
    CHECK(grp.sub[1].first == PolygonTree::Weight(1, 1));
    CHECK_FALSE(tree_equal(grp.sub[0].second, grp.sub[1].second));
    // one branch ramifies at x^{5/2}, the other at x^{7/2}
    CHECK(tree_equal(grp.sub[0].second, leaf(2, 3, 6, {{1, 1}})));
    CHECK(tree_equal(grp.sub[1].second, leaf(2, 5, 10, {{1, 1}})));
    // and a good prime reproduces the same picture
    for (long p : {11, 13, 17}) CHECK(tree_equal(tree_p(bipoly_str(f), p), tq));
}

TEST_CASE("deep descent requiring the general collapse") {
    // Branches y = a x + b x^2 (+- x^{7/2} tails) with a^2 = 2 and b^2 = 1 + a:
    // the level-2 part T^2 - (1 + z) is quadratic over Q[z]/(z^2 - 2), so the
    // descent must collapse the tower to one modulus of degree 4 over Q.
    DynField s{dyn_context(UniPoly<QQ>(QQ{}, {Rational(-2), Rational(0), Rational(1)}))};
    DynElem z(s.ctx, UniPoly<QQ>::xpow(QQ{}, 1));
    auto lift = [&](const BiPoly<QQ>& g) {
        std::vector<UniPoly<DynField>> cy;
        for (const auto& col : g.cy) {
            std::vector<DynElem> c;
            for (const auto& e : col.c)
                c.emplace_back(s.ctx, UniPoly<QQ>::constant(QQ{}, e));
            cy.emplace_back(s, std::move(c));
        }
        return BiPoly<DynField>(s, std::move(cy));
    };
    auto conj_factor = [&](const DynElem& a) {
        // (u^2 + (1+a) x^4 - x^7)^2 - 4 (1+a) x^4 u^2, u = y - a x
        BiPoly<DynField> u = lift(Q("y")) - BiPoly<DynField>(s, {UniPoly<DynField>(s, {s.zero(), a})});
        BiPoly<DynField> one_a(s, {UniPoly<DynField>(s, {s.add(s.one(), a)})});
        BiPoly<DynField> core = u * u + one_a * lift(Q("x^4")) - lift(Q("x^7"));
        return core * core - lift(Q("4x^4")) * one_a * u * u;
    };
    BiPoly<DynField> fd = conj_factor(z) * conj_factor(s.neg(z));
    // all coefficients collapse to rationals
    QQ q0;
    std::vector<UniPoly<QQ>> cy;
    for (const auto& col : fd.cy) {
        std::vector<Rational> c;
        for (const auto& e : col.c) {
            REQUIRE(e.rep().deg() <= 0);
            c.push_back(e.rep().at(0));
        }
        cy.emplace_back(q0, std::move(c));
    }
    BiPoly<QQ> f(q0, std::move(cy));
    REQUIRE(f.degY() == 8);

    auto tq = polygon_tree_q(f);
    REQUIRE(tq.edges.size() == 1);
    CHECK(tq.edges[0].q == 1);
    CHECK(tq.edges[0].m == 1);
    CHECK(tq.edges[0].profile == std::vector<PolygonTree::Part>{{2, 4}});
    REQUIRE(tq.edges[0].children.size() == 1);
    REQUIRE(tq.edges[0].children[0].sub.size() == 1);
    CHECK(tq.edges[0].children[0].sub[0].first == PolygonTree::Weight(2, 1));  // part degree 2
    const PolygonTree& lvl2 = tq.edges[0].children[0].sub[0].second;
    REQUIRE(lvl2.edges.size() == 1);
    CHECK(lvl2.edges[0].profile == std::vector<PolygonTree::Part>{{2, 2}});
    REQUIRE(lvl2.edges[0].children.size() == 1);
    REQUIRE(lvl2.edges[0].children[0].sub.size() == 1);
    CHECK(lvl2.edges[0].children[0].sub[0].first == PolygonTree::Weight(2, 1));  // relative degree 2

    // good primes must reproduce the whole structure
    for (long p : {11, 13, 17}) CHECK(tree_equal(tree_p(bipoly_str(f), p), tq));
}
