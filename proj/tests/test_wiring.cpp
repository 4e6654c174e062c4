#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "arrangis/errors.hpp"
#include "arrangis/invariant.hpp"
#include "arrangis/tracker.hpp"
#include "arrangis/wiring.hpp"
#include "helpers.hpp"

using namespace arrangis;
using namespace testutil;

namespace {

std::mt19937_64 corpus_rng(2024);

// Random diagram with valid events; labels S1..Sn bottom to top.
WiringDiagram random_diagram(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nd(2, 9), events(0, 10), coin(0, 1);
    WiringDiagram w;
    w.strands = nd(rng);
    for (int i = 1; i <= w.strands; ++i) w.initial_labels.push_back("S" + std::to_string(i));
    const int ne = events(rng);
    int point = 0;
    for (int e = 0; e < ne; ++e) {
        if (coin(rng) && w.strands >= 2) {
            std::uniform_int_distribution<int> letters(1, 6), gen(1, w.strands - 1);
            BraidWord b;
            b.strands = w.strands;
            const int nl = letters(rng);
            for (int i = 0; i < nl; ++i) b.letters.push_back(coin(rng) ? gen(rng) : -gen(rng));
            w.events.emplace_back(std::move(b));
        } else {
            std::uniform_int_distribution<int> lo(1, w.strands - 1);
            const int l = lo(rng);
            std::uniform_int_distribution<int> hi(l + 1, w.strands);
            w.events.emplace_back(SingularEvent{"Q" + std::to_string(point++), l, hi(rng)});
        }
    }
    normalize_events(w);
    return w;
}

LabeledBraid random_labeled_braid(std::mt19937_64& rng, int max_strands = 8, int length = 20) {
    std::uniform_int_distribution<int> nd(2, max_strands), coin(0, 1);
    LabeledBraid b;
    b.word.strands = nd(rng);
    std::uniform_int_distribution<int> gen(1, b.word.strands - 1);
    for (int i = 0; i < length; ++i) b.word.letters.push_back(coin(rng) ? gen(rng) : -gen(rng));
    for (int i = 1; i <= b.word.strands; ++i) b.entry_labels.push_back("S" + std::to_string(i));
    return b;
}

}  // namespace

TEST_CASE("minimal document parses") {
    const WiringDiagram w = parse_wiring("strands 3 labels A B C\nb +1\np 2..3 P1\n");
    CHECK(w.strands == 3);
    CHECK(w.initial_labels == std::vector<std::string>{"A", "B", "C"});
    REQUIRE(w.events.size() == 2);
    CHECK(std::get<BraidWord>(w.events[0]).letters == std::vector<int>{1});
    CHECK(std::get<SingularEvent>(w.events[1]) == SingularEvent{"P1", 2, 3});
    // After +1: B A C; after the event on 2..3: B C A.
    CHECK(w.terminal_labels() == std::vector<std::string>{"B", "C", "A"});
    CHECK(w.members_of(1) == std::vector<std::string>{"A", "C"});
}

TEST_CASE("parse errors carry position diagnostics") {
    CHECK_THROWS_WITH_AS(parse_wiring("strands 3 labels A B C\np 1..1 P1\n"),
                         doctest::Contains("line 2"), InputError);
    CHECK_THROWS_WITH_AS(parse_wiring("strands 2 labels A\n"), doctest::Contains("expected 2 labels"),
                         InputError);
    CHECK_THROWS_WITH_AS(parse_wiring("strands 2 labels A B\nb +5\n"), doctest::Contains("out of range"),
                         InputError);
    CHECK_THROWS_WITH_AS(parse_wiring("strands 2 labels A B\nq 1..2 P\n"), doctest::Contains("column 1"),
                         InputError);
    CHECK_THROWS_AS(parse_wiring(""), InputError);
}

TEST_CASE("comments are accepted and dropped") {
    const std::string text = "# heading\nstrands 2 labels A B # trailing\nb +1 # another\n";
    const WiringDiagram w = parse_wiring(text);
    CHECK(print_wiring(w) == "strands 2 labels A B\nb +1\n");
}

TEST_CASE("print and parse are inverse on a generated corpus") {
    for (int i = 0; i < 100; ++i) {
        const WiringDiagram w = random_diagram(corpus_rng);
        const std::string text = print_wiring(w);
        const WiringDiagram back = parse_wiring(text);
        CHECK(back == w);
        CHECK(print_wiring(back) == text);  // canonical form is a fixed point
        CHECK(wiring_from_json(wiring_to_json(w)) == w);
    }
}

TEST_CASE("half twists") {
    CHECK(half_twist(2, 1, 2).letters == std::vector<int>{1});
    CHECK(half_twist(3, 1, 3).letters == std::vector<int>{1, 2, 1});
    const BraidWord d4 = half_twist(6, 2, 4);
    CHECK(d4.letters.size() == 6);
    CHECK(std::all_of(d4.letters.begin(), d4.letters.end(), [](int l) { return l > 0; }));
    // Induced permutation reverses the block and fixes the rest.
    const auto perm = d4.permutation();
    CHECK(perm == std::vector<int>{1, 5, 4, 3, 2, 6});
    CHECK_THROWS_AS(half_twist(3, 2, 3), InputError);
}

TEST_CASE("beta between fibers") {
    // Two double points with braiding in between.
    const WiringDiagram w =
        parse_wiring("strands 3 labels A B C\nb +2\np 1..2 P1\nb -2\np 2..3 P2\nb +1\n");
    // After +2 the order is A C B, so P1 covers {A,C}; the event flips
    // them, -2 gives C B A, and P2 covers {B,A}.
    CHECK(w.members_of(1) == std::vector<std::string>{"A", "C"});
    CHECK(w.members_of(2) == std::vector<std::string>{"B", "A"});
    const LabeledBraid b01 = beta_uv(w, 0, 1);
    CHECK(b01.word.letters == std::vector<int>{2});
    CHECK(b01.entry_labels == std::vector<std::string>{"A", "B", "C"});

    const LabeledBraid b12 = beta_uv(w, 1, 2);
    CHECK(b12.word.letters == std::vector<int>{-2});
    CHECK(b12.entry_labels == w.labels_after_fiber(1));

    // Across both fibers: slot0, the half twist of P1, slot1.
    const LabeledBraid b02 = beta_uv(w, 0, 2);
    CHECK(b02.word.letters == std::vector<int>{2, 1, -2});

    // Inverses run backwards.
    const LabeledBraid b20 = beta_uv(w, 2, 0);
    CHECK(b20.word.letters == std::vector<int>{2, -1, -2});
    CHECK(b20.entry_labels == b02.exit_labels());
    LabeledBraid round = b02.then(b20);
    const auto perm = round.word.permutation();
    for (std::size_t i = 0; i < perm.size(); ++i) CHECK(perm[i] == static_cast<int>(i) + 1);

    CHECK_THROWS_AS(beta_uv(w, 0, 0), InputError);
    CHECK_THROWS_AS(beta_uv(w, 0, 3), InputError);
}

TEST_CASE("a_kl on explicit words") {
    LabeledBraid b;
    b.word = BraidWord(2, {1});
    b.entry_labels = {"k", "l"};  // k enters at the bottom
    // In a positive letter the upper strand crosses over.
    CHECK(a_kl(b, "l", "k") == 1);
    CHECK(a_kl(b, "k", "l") == 0);

    LabeledBraid id;
    id.word.strands = 3;
    id.entry_labels = {"a", "b", "c"};
    CHECK(a_kl(id, "a", "b") == 0);
    CHECK_THROWS_AS(a_kl(id, "a", "zz"), InputError);
}

TEST_CASE("a_kl additivity and inversion on random braids") {
    std::mt19937_64 rng(515);
    for (int trial = 0; trial < 1000; ++trial) {
        const LabeledBraid b = random_labeled_braid(rng);
        LabeledBraid second = random_labeled_braid(rng, 8, 20);
        second.word.strands = b.word.strands;
        for (auto& l : second.word.letters)
            l = (l > 0 ? 1 : -1) * (1 + (std::abs(l) - 1) % (b.word.strands - 1));
        second.entry_labels = b.exit_labels();
        const LabeledBraid prod = b.then(second);
        const LabeledBraid inv = b.inverse();
        const std::string k = "S1", l = "S2";
        CHECK(a_kl(prod, k, l) == a_kl(b, k, l) + a_kl(second, k, l));
        CHECK(a_kl(inv, k, l) == -a_kl(b, k, l));
    }
}

TEST_CASE("tracking one and two lines") {
    // A single affine line: no events.
    Arrangement a;
    a.order = 1;
    auto mk = [](const std::string& lbl, long x, long y, long z) {
        return ProjectiveLine{lbl,
                              {CyclotomicNumber::from_rational(1, Rational(x)),
                               CyclotomicNumber::from_rational(1, Rational(y)),
                               CyclotomicNumber::from_rational(1, Rational(z))}};
    };
    a.lines = {mk("INF", 0, 0, 1), mk("A", 1, -1, 0)};
    const auto [w1, f1] = wiring_for(a, "INF", 0);
    CHECK(w1.strands == 1);
    CHECK(w1.events.empty());

    // Two crossing lines: one singular event, possibly no letters.
    a.lines.push_back(mk("B", 1, 1, -1));
    const auto [w2, f2] = wiring_for(a, "INF", 0);
    CHECK(w2.strands == 2);
    CHECK(w2.singular_count() == 1);
    CHECK(w2.members_of(1).size() == 2);
}

TEST_CASE("tracking Ceva-7 gives nine singular events and sound bookkeeping") {
    const Arrangement a = load_fixture_arrangement("ceva7.json");
    const auto [w, frame] = wiring_for(a, "L0", 0);
    CHECK(w.strands == 6);
    CHECK(w.singular_count() == 5);  // the five affine multiple points
    CHECK(w.terminal_labels() == final_strand_order(a, frame));
    // A complexified real arrangement braids only at its singular points.
    for (const auto& ev : w.events) CHECK(std::holds_alternative<SingularEvent>(ev));
}

TEST_CASE("beta assembly over successive fibers matches the direct form") {
    const Arrangement a = load_fixture_arrangement("maclane_plus.json");
    const auto [w, frame] = wiring_for(a, "L0", 0);
    const int k = w.singular_count();
    LabeledBraid assembled = beta_uv(w, 0, 1);
    for (int u = 1; u < k; ++u) {
        const auto& s = w.singular(u);
        LabeledBraid tau{half_twist(w.strands, s.lo, s.hi - s.lo + 1), assembled.exit_labels()};
        assembled = assembled.then(tau).then(beta_uv(w, u, u + 1));
    }
    const LabeledBraid direct = beta_uv(w, 0, k);
    CHECK(assembled.word == direct.word);
    CHECK(assembled.entry_labels == direct.entry_labels);
}

TEST_CASE("tracking extended MacLane keeps positions consistent") {
    const Arrangement a = load_fixture_arrangement("maclane_plus.json");
    const auto [w, frame] = wiring_for(a, "L0", 0);
    CHECK(w.strands == 8);
    CHECK(w.singular_count() == 10);
    CHECK(w.terminal_labels() == final_strand_order(a, frame));
    const Combinatorics derived = combinatorics_from_wiring(w, "L0");
    CHECK_FALSE(validate_combinatorics(derived).has_value());
    // The derived point set matches the geometric one.
    const Combinatorics direct = combinatorics_of(a);
    auto canon = [](Combinatorics c) {
        std::vector<std::vector<std::string>> pts;
        for (const auto& p : c.points) {
            std::vector<std::string> ls;
            for (int l : p) ls.push_back(c.lines[l]);
            std::sort(ls.begin(), ls.end());
            pts.push_back(ls);
        }
        std::sort(pts.begin(), pts.end());
        return pts;
    };
    CHECK(canon(derived) == canon(direct));
}
