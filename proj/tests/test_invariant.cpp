#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "arrangis/errors.hpp"
#include "arrangis/invariant.hpp"
#include "helpers.hpp"

using namespace arrangis;
using namespace testutil;

namespace {

std::vector<std::string> maclane_labels() {
    std::vector<std::string> all;
    for (int i = 0; i <= 8; ++i) all.push_back("L" + std::to_string(i));
    return all;
}

// Strand order at the start fiber of the published extended-MacLane
// diagram, bottom to top.
std::vector<std::string> maclane_entry() {
    return {"L5", "L4", "L8", "L7", "L6", "L1", "L2", "L3"};
}

HomologyClass cls(const std::map<std::string, long long>& raw) {
    return HomologyClass(maclane_labels(), raw);
}

}  // namespace

TEST_CASE("homology classes rewrite the first meridian eagerly") {
    const HomologyClass h({"L0", "L1", "L2"}, {{"L0", 1}});
    CHECK(h.coefficient("L0") == 0);
    CHECK(h.coefficient("L1") == -1);
    CHECK(h.coefficient("L2") == -1);
    const HomologyClass z({"L0", "L1", "L2"}, {{"L0", 1}, {"L1", 1}, {"L2", 1}});
    CHECK(z.is_zero());
}

TEST_CASE("character evaluation on homology classes") {
    const Combinatorics c = ceva7_combinatorics();
    const Character xi = ceva7_character(c);
    std::vector<std::string> labels = c.lines;
    CHECK(evaluate(c, xi, HomologyClass(labels)).is_one());
    // -v5 evaluates to the exponent 1/2.
    const HomologyClass mv5(labels, {{"L5", -1}});
    CHECK(evaluate(c, xi, mv5) == RootOfUnity::parse("1/2"));

    // MacLane: xi(-v8 - v4) has exponent 2/3.
    const Combinatorics mc = combinatorics_of(load_fixture_arrangement("maclane_plus.json"));
    const Character mxi = maclane_character(mc);
    const HomologyClass h(mc.lines, {{"L8", -1}, {"L4", -1}});
    CHECK(evaluate(mc, mxi, h) == RootOfUnity::parse("2/3"));
}

TEST_CASE("braid-level pair classes match the published extended MacLane values") {
    // beta+ = (s5 s4 s5) s3 (s2 s1 s2) s4^-1 with strands labelled
    // L5 L4 L8 L7 L6 L1 L2 L3 from the bottom.
    LabeledBraid beta_plus{BraidWord(8, {5, 4, 5, 3, 2, 1, 2, -4}), maclane_entry()};
    const HomologyClass plus = istar_pair_from_braid(beta_plus, maclane_labels(), "L6", "L5");
    CHECK(plus == cls({{"L8", -1}, {"L4", -1}}));

    LabeledBraid beta_minus{BraidWord(8, {5, 4, 5, 3, 2, 1, 2, 4}), maclane_entry()};
    const HomologyClass minus = istar_pair_from_braid(beta_minus, maclane_labels(), "L6", "L5");
    CHECK(minus == cls({{"L4", -1}}));

    // The two one-sided sums behind the plus value.
    const auto fwd = over_crossing_sums(beta_plus, "L6");
    CHECK(fwd == std::map<std::string, int>{{"L1", 1}, {"L8", -1}});
    const auto bwd = over_crossing_sums(beta_plus.inverse(), "L5");
    CHECK(bwd == std::map<std::string, int>{{"L4", -1}, {"L1", -1}});
}

TEST_CASE("pair classes from a diagram degenerate to zero before any crossing") {
    const WiringDiagram w = parse_wiring("strands 2 labels A B\np 1..2 P:A:B\n");
    const HomologyClass h = istar_pair(w, {"INF", "A", "B"}, "A", "B");
    CHECK(h.is_zero());
    CHECK_THROWS_AS(istar_pair(w, {"INF", "A", "B"}, "A", "INF"), InputError);
}

TEST_CASE("Ceva-7 invariant is -1") {
    const Arrangement a = load_fixture_arrangement("ceva7.json");
    const Combinatorics c = combinatorics_of(a);
    const Character xi = ceva7_character(c);
    const Cycle gamma = ceva7_cycle(c);
    const InvariantResult res = invariant(a, xi, gamma, 0);
    CHECK(res.value == RootOfUnity::parse("1/2"));
    CHECK(evaluate(c, xi, res.witness) == RootOfUnity::parse("1/2"));
}

TEST_CASE("extended MacLane invariants distinguish the conjugate realizations") {
    const Arrangement plus = load_fixture_arrangement("maclane_plus.json");
    const Arrangement minus = load_fixture_arrangement("maclane_minus.json");
    const Combinatorics c = combinatorics_of(plus);
    const Character xi = maclane_character(c);
    const Cycle gamma = maclane_cycle(c);

    CHECK(invariant(plus, xi, gamma, 0).value == RootOfUnity::parse("2/3"));
    CHECK(invariant(minus, xi, gamma, 0).value == RootOfUnity::parse("1/3"));

    // Conjugating the arrangement inverts the invariant.
    CHECK(invariant(conjugate(plus), xi, gamma, 0).value == RootOfUnity::parse("1/3"));
    // Inverting the character inverts it as well.
    CHECK(invariant(plus, xi.inverse(), gamma, 0).value == RootOfUnity::parse("1/3"));
}

TEST_CASE("triangle cycles through the infinity line agree with the pair form") {
    const Arrangement a = load_fixture_arrangement("maclane_plus.json");
    const Combinatorics c = combinatorics_of(a);
    const Character xi = maclane_character(c);
    auto [w, frame] = wiring_for(a, "L0", 0);
    const HomologyClass pair_class = istar_pair(w, a.labels(), "L6", "L5");
    const Cycle gamma = maclane_cycle(c);
    const HomologyClass cycle_class = istar_cycle(w, a.labels(), "L0", to_label_cycle(c, gamma));
    // Both represent the same nearby cycle up to ker xi.
    CHECK(evaluate(c, xi, pair_class) == evaluate(c, xi, cycle_class));
}

TEST_CASE("seed and infinity-line independence") {
    const Arrangement a = load_fixture_arrangement("ceva7.json");
    const Combinatorics c = combinatorics_of(a);
    const Character xi = ceva7_character(c);
    const Cycle gamma = ceva7_cycle(c);
    for (std::uint64_t seed = 0; seed < 10; ++seed)
        CHECK(invariant(a, xi, gamma, seed).value == RootOfUnity::parse("1/2"));
    for (const std::string inf : {"L0", "L3", "L6"})
        CHECK(invariant_with_infinity(a, xi, gamma, inf, 3).value == RootOfUnity::parse("1/2"));
}

TEST_CASE("walks may turn at points of higher multiplicity") {
    // In the 8-line Ceva variant the cycle's middle point {L3,L6,L7} is a
    // triple, so the turning fiber carries a width-3 singular event.
    const Arrangement a = load_fixture_arrangement("ceva8.json");
    const Combinatorics c = combinatorics_of(a);
    const Character xi = ceva8_character(c);
    Cycle gamma;
    gamma.lines = {0, 3, 6};
    gamma.points = {c.point_through(0, 3), c.point_through(3, 6), c.point_through(0, 6)};
    CHECK(c.multiplicity(gamma.points[1]) == 3);
    for (std::uint64_t seed = 0; seed < 5; ++seed)
        CHECK(invariant(a, xi, gamma, seed).value == RootOfUnity::parse("1/2"));
    for (const std::string inf : {"L0", "L3", "L6"})
        CHECK(invariant_with_infinity(a, xi, gamma, inf, 2).value == RootOfUnity::parse("1/2"));
}

TEST_CASE("non-inner-cyclic triples are rejected up front") {
    const Arrangement a = load_fixture_arrangement("ceva7.json");
    const Combinatorics c = combinatorics_of(a);
    std::map<std::string, Rational> exps;
    const int halves[] = {0, 1, 1, 1, 1, 0, 0};
    for (int i = 0; i <= 6; ++i) exps["L" + std::to_string(i)] = Rational(halves[i], 2);
    const Character bad = Character::from_exponents(c, exps);
    CHECK_THROWS_WITH_AS(invariant(a, bad, ceva7_cycle(c), 0), doctest::Contains("not inner-cyclic"),
                         InputError);
}
