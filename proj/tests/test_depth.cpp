#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arrangis/depth.hpp"
#include "arrangis/errors.hpp"
#include "helpers.hpp"

using namespace arrangis;
using namespace testutil;

TEST_CASE("edge cycles of a triangle subgraph") {
    const Combinatorics c = ceva7_combinatorics();
    const BlownUpGraph g = blow_up(c);
    const Character xi = ceva7_character(c);
    const InnerUnramified u = inner_unramified(g, xi);
    const SubgraphForest forest = subgraph_forest(g, u);
    REQUIRE(forest.nontree_edges.size() == 1);
    const Cycle gamma = edge_cycle(g, forest, forest.nontree_edges.front());
    CHECK(gamma.canonical() == ceva7_cycle(c).canonical());
    // A forest edge has no fundamental cycle.
    int tree_edge = -1;
    for (int e : u.edges)
        if (e != forest.nontree_edges.front()) tree_edge = e;
    CHECK_THROWS_AS(edge_cycle(g, forest, tree_edge), InputError);
}

TEST_CASE("A_xi of Ceva-7 reproduces the worked 3x3 matrix") {
    const Arrangement a = load_fixture_arrangement("ceva7.json");
    const Combinatorics c = combinatorics_of(a);
    const DepthReport report = build_a_xi(a, ceva7_character(c), 0);
    CHECK(report.components == std::vector<std::string>{"L0", "L3", "L6"});
    CHECK(report.self_intersections == std::vector<int>{-1, -1, -1});
    REQUIRE(report.nontree.size() == 1);
    CHECK(report.nontree[0].value == RootOfUnity::parse("1/2"));
    REQUIRE(report.a_xi.size == 3);
    CHECK(report.a_xi.order == 2);
    const long expected[3][3] = {{-1, 1, 1}, {1, -1, -1}, {1, -1, -1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(report.a_xi.at(i, j) == CyclotomicNumber::from_rational(2, Rational(expected[i][j])));
    CHECK(report.a_xi.is_hermitian());
    CHECK(report.depth == 2);
    CHECK(quasi_projective_depth(a, ceva7_character(c)) == 2);
}

TEST_CASE("empty inner unramified set gives the empty matrix") {
    Arrangement a;
    a.order = 1;
    auto mk = [](const std::string& lbl, long x, long y, long z) {
        return ProjectiveLine{lbl,
                              {CyclotomicNumber::from_rational(1, Rational(x)),
                               CyclotomicNumber::from_rational(1, Rational(y)),
                               CyclotomicNumber::from_rational(1, Rational(z))}};
    };
    a.lines = {mk("A", 1, 0, 0), mk("B", 0, 1, 0), mk("C", 0, 0, 1), mk("D", 1, 1, 1)};
    const Combinatorics c = combinatorics_of(a);
    std::map<std::string, Rational> exps;
    for (const auto& l : c.lines) exps[l] = Rational(1, 2);
    const DepthReport report = build_a_xi(a, Character::from_exponents(c, exps), 0);
    CHECK(report.components.empty());
    CHECK(report.a_xi.size == 0);
    CHECK(report.depth == 0);
}

TEST_CASE("forest-shaped unramified sets need no invariant evaluations") {
    Arrangement a;
    a.order = 1;
    auto mk = [](const std::string& lbl, long x, long y, long z) {
        return ProjectiveLine{lbl,
                              {CyclotomicNumber::from_rational(1, Rational(x)),
                               CyclotomicNumber::from_rational(1, Rational(y)),
                               CyclotomicNumber::from_rational(1, Rational(z))}};
    };
    a.lines = {mk("A", 1, 0, 0), mk("B", 0, 1, 0)};
    const Combinatorics c = combinatorics_of(a);
    const DepthReport report = build_a_xi(a, Character::trivial(c), 0);
    CHECK(report.nontree.empty());
    CHECK(report.a_xi.size == 2);
    CHECK(report.a_xi.order == 1);
    CHECK(report.a_xi.is_hermitian());
}

TEST_CASE("extended MacLane depth, checked against hand elimination") {
    // A_xi = [[-1,1,1],[1,-2,chi],[1,conj(chi),-2]] with chi a primitive
    // cube root: det = -1*(4-1) - (-2-chi) + (conj(chi)+2) = 1 + chi +
    // conj(chi) = 0, while the upper-left 2x2 minor is 2-1 = 1, so the
    // rank is 2 and the corank 1.
    const Arrangement a = load_fixture_arrangement("maclane_plus.json");
    const Combinatorics c = combinatorics_of(a);
    const Character xi = maclane_character(c);
    const DepthReport report = build_a_xi(a, xi, 0);
    CHECK(report.components == std::vector<std::string>{"L0", "L5", "L6"});
    CHECK(report.self_intersections == std::vector<int>{-1, -2, -2});
    REQUIRE(report.nontree.size() == 1);
    CHECK(report.nontree[0].value.order() == 3);
    CHECK(report.a_xi.is_hermitian());
    CHECK(report.depth == 1);
    CHECK(quasi_projective_depth(load_fixture_arrangement("maclane_minus.json"), xi) == 1);
}

TEST_CASE("cycles through an exceptional component") {
    // Adding a line through L3^L6 turns that double point into a triple,
    // so the unramified cycle runs through the exceptional component over
    // it: L0 - L3 - E - L6 - L0.
    const Arrangement a = load_fixture_arrangement("ceva8.json");
    const Combinatorics c = combinatorics_of(a);
    const Character xi = ceva8_character(c);
    const InnerUnramified u = inner_unramified(blow_up(c), xi);
    CHECK(u.first_betti == 1);
    const DepthReport report = build_a_xi(a, xi, 0);
    CHECK(report.components == std::vector<std::string>{"L0", "L3", "L6", "P:L3:L6:L7"});
    CHECK(report.self_intersections == std::vector<int>{-1, -2, -2, -1});
    REQUIRE(report.nontree.size() == 1);
    CHECK(report.nontree[0].value == RootOfUnity::parse("1/2"));
    CHECK(report.a_xi.is_hermitian());
    // Hand elimination: with rows R1..R4 of the assembled matrix,
    // R3 = -2 R1 - R2 and R4 = R1 + R3, so the rank is 2.
    CHECK(report.depth == 2);
    for (int root : u.components) CHECK(build_a_xi(a, xi, 0, root).depth == 2);
}

TEST_CASE("the corank does not depend on the forest") {
    const Arrangement ceva = load_fixture_arrangement("ceva7.json");
    const Combinatorics cc = combinatorics_of(ceva);
    const Character cxi = ceva7_character(cc);
    const BlownUpGraph g = blow_up(cc);
    const InnerUnramified u = inner_unramified(g, cxi);
    for (int root : u.components) {
        const DepthReport r = build_a_xi(ceva, cxi, 0, root);
        CHECK(r.depth == 2);
        CHECK(r.a_xi.is_hermitian());
    }
    const Arrangement mac = load_fixture_arrangement("maclane_plus.json");
    const Combinatorics mc = combinatorics_of(mac);
    const Character mxi = maclane_character(mc);
    const BlownUpGraph mg = blow_up(mc);
    for (int root : inner_unramified(mg, mxi).components) {
        const DepthReport r = build_a_xi(mac, mxi, 0, root);
        CHECK(r.depth == 1);
        CHECK(r.a_xi.is_hermitian());
    }
}

TEST_CASE("trivial character consults the invariant once per non-tree edge") {
    const Arrangement a = load_fixture_arrangement("ceva7.json");
    const Combinatorics c = combinatorics_of(a);
    const DepthReport report = build_a_xi(a, Character::trivial(c), 0);
    // 13 components, 21 edges, connected: 21 - 13 + 1 = 9 non-tree edges.
    CHECK(report.components.size() == 13);
    CHECK(report.nontree.size() == 9);
    for (const auto& e : report.nontree) CHECK(e.value.is_one());
    CHECK(report.a_xi.is_hermitian());
}
