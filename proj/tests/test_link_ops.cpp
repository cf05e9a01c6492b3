#include "gli/link_ops.hpp"

#include <set>
#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "gli/coloring.hpp"
#include "gli/errors.hpp"
#include "gli/goeritz.hpp"
#include "gli/surface_diagram.hpp"
#include "test_util.hpp"

using namespace gli;
using namespace fixtures;

namespace {

std::pair<InvariantTriple, InvariantTriple> pair_of(const GaussCode& code) {
    SurfaceDiagram d(code);
    auto pr = checkerboard_colorings(d);
    REQUIRE(pr.has_value());
    return {coloring_invariants(d, pr->first), coloring_invariants(d, pr->second)};
}

InvariantTriple triple(int sigma, Int det, int nullity) {
    InvariantTriple t;
    t.sigma = sigma;
    t.det = det;
    t.nullity = nullity;
    return t;
}

}  // namespace

TEST_CASE("mirrors act on the code as expected") {
    GaussCode two_one = parse_gauss_code(kVirtual21);
    CHECK(serialize_gauss_code(apply(two_one, vertical_mirror())) == "U1-U2-O1-O2-");
    CHECK(serialize_gauss_code(apply(two_one, horizontal_mirror())) == "O1-O2-U1-U2-");

    GaussCode trefoil = parse_gauss_code(kTrefoil);
    CHECK(apply(apply(trefoil, vertical_mirror()), vertical_mirror()) == trefoil);
    CHECK(apply(apply(trefoil, horizontal_mirror()), horizontal_mirror()) == trefoil);
    CHECK(apply(apply(trefoil, crossing_change(1)), crossing_change(1)) == trefoil);
}

TEST_CASE("component reversal reverses one cycle and flips shared signs") {
    GaussCode hopf = parse_gauss_code("O1+U2+;U1+O2+");
    GaussCode rev = apply(hopf, reverse_component(0));
    CHECK(serialize_gauss_code(rev) == "U2-O1-;U1-O2-");
    CHECK(apply(rev, reverse_component(0)) == hopf);

    // A self-crossing keeps its sign: reverse the kink component.
    GaussCode kink = parse_gauss_code("O1+U1+");
    GaussCode kink_rev = apply(kink, reverse_component(0));
    CHECK(kink_rev.signs == std::vector<int>{1});
    CHECK(serialize_gauss_code(kink_rev) == "U1+O1+");
}

TEST_CASE("transform index errors") {
    GaussCode trefoil = parse_gauss_code(kTrefoil);
    CHECK_THROWS_AS(apply(trefoil, reverse_component(1)), IndexError);
    CHECK_THROWS_AS(apply(trefoil, reverse_component(-1)), IndexError);
    CHECK_THROWS_AS(apply(trefoil, crossing_change(3)), IndexError);
    CHECK_THROWS_AS(apply(trefoil, crossing_change(-1)), IndexError);
}

TEST_CASE("vertical mirror negates both signatures slot by slot") {
    GaussCode d37 = parse_gauss_code(kVirtual37);
    auto [xi, dual] = pair_of(d37);
    CHECK(xi == triple(2, 1, 0));
    CHECK(dual == triple(0, 2, 0));

    auto [mxi, mdual] = pair_of(apply(d37, vertical_mirror()));
    CHECK(mxi == triple(-2, 1, 0));
    CHECK(mdual == triple(0, 2, 0));

    GaussCode d5 = parse_gauss_code(kVirtual52024);
    auto [a, b] = pair_of(d5);
    auto [ma, mb] = pair_of(apply(d5, vertical_mirror()));
    CHECK(ma.sigma == -a.sigma);
    CHECK(mb.sigma == -b.sigma);
    CHECK(ma.det == a.det);
    CHECK(mb.nullity == b.nullity);

    CHECK(all_pass(check_mirror_properties(d37)));
    CHECK(all_pass(check_mirror_properties(d5)));
    CHECK(all_pass(check_mirror_properties(parse_gauss_code(kTrefoil))));
    CHECK(all_pass(check_mirror_properties(parse_gauss_code(kVirtual35))));
}

TEST_CASE("report lines carry the verdict, property and code hash") {
    GaussCode trefoil = parse_gauss_code(kTrefoil);
    Report r = check_mirror_properties(trefoil);
    REQUIRE(r.size() == 2);
    CHECK(r[0].rfind("PASS vertical-mirror " + code_hash(trefoil) + " ", 0) == 0);
    CHECK(r[1].rfind("PASS horizontal-mirror " + code_hash(trefoil) + " ", 0) == 0);
    CHECK(all_pass(Report{}));
    CHECK_FALSE(all_pass(Report{"FAIL x y z"}));
    CHECK_FALSE(all_pass(Report{"PASS a b c", "FAIL x y z"}));
}

TEST_CASE("crossing change keeps the colorings and obeys the signature bound") {
    GaussCode trefoil = parse_gauss_code(kTrefoil);

    // The projection does not move, so both diagrams carry the same coloring
    // pair and the slots can be compared directly.
    GaussCode changed = apply(trefoil, crossing_change(0));
    SurfaceDiagram d_plus(trefoil), d_minus(changed);
    CHECK(*checkerboard_colorings(d_plus) == *checkerboard_colorings(d_minus));

    auto [pxi, pdual] = pair_of(trefoil);
    auto [mxi, mdual] = pair_of(changed);
    CHECK(pxi == triple(-2, 3, 0));
    CHECK(mxi == triple(0, 1, 0));   // unknotting the trefoil
    CHECK(mdual == triple(0, 1, 0));
    CHECK(mxi.sigma - pxi.sigma == 2);
    CHECK(mdual.sigma - pdual.sigma == 2);

    CHECK(all_pass(check_crossing_change(trefoil, 0)));
    CHECK(all_pass(check_crossing_change(trefoil, 2)));

    CHECK_THROWS_AS(check_crossing_change(trefoil, 3), IndexError);
    GaussCode negated = apply(trefoil, horizontal_mirror());
    CHECK_THROWS_AS(check_crossing_change(negated, 0), NotPositive);
}

TEST_CASE("orientation reversal shifts signatures by the mutual linking sum") {
    GaussCode hopf = parse_gauss_code("O1+U2+;U1+O2+");
    CHECK(orientation_reversal_shift(hopf, 0) == 2);
    auto [a, b] = pair_of(hopf);
    CHECK(a == triple(-1, 2, 0));
    CHECK(b == triple(-1, 2, 0));
    auto [ra, rb] = pair_of(apply(hopf, reverse_component(0)));
    CHECK(ra == triple(1, 2, 0));
    CHECK(rb == triple(1, 2, 0));

    CHECK(all_pass(check_orientation_reversal(hopf, 0)));
    CHECK(all_pass(check_orientation_reversal(hopf, 1)));
    CHECK_THROWS_AS(check_orientation_reversal(parse_gauss_code(kTrefoil), 0), StructureError);
    CHECK_THROWS_AS(check_orientation_reversal(hopf, 2), IndexError);
}

TEST_CASE("corpus sampling is deterministic and well formed") {
    auto corpus = sample_corpus(40, 20240915, 1, 6);
    auto again = sample_corpus(40, 20240915, 1, 6);
    REQUIRE(corpus.size() == 40);
    std::set<std::string> seen;
    for (size_t i = 0; i < corpus.size(); ++i) {
        CHECK(corpus[i] == again[i]);
        CHECK(seen.insert(serialize_gauss_code(corpus[i])).second);
        CHECK(corpus[i].component_count() == 1);
        CHECK(corpus[i].crossing_count() <= 6);
        SurfaceDiagram d(corpus[i]);
        CHECK(d.is_connected());
        CHECK(checkerboard_colorings(d).has_value());
    }

    auto links = sample_corpus(15, 7, 2, 5);
    for (const auto& code : links) {
        CHECK(code.component_count() == 2);
        CHECK(!code.components[0].empty());
        CHECK(!code.components[1].empty());
    }
}

TEST_CASE("mirror properties hold across the corpus") {
    for (const auto& code : sample_corpus(60, 424242, 1, 6)) {
        Report r = check_mirror_properties(code);
        for (const auto& ln : r) {
            INFO(ln);
            CHECK(ln.rfind("PASS ", 0) == 0);
        }
    }
}

TEST_CASE("crossing change bounds hold across the corpus") {
    int checked = 0;
    for (const auto& code : sample_corpus(60, 987123, 1, 6)) {
        for (int c = 0; c < code.crossing_count(); ++c) {
            if (code.signs[c] != 1) continue;
            Report r = check_crossing_change(code, c);
            for (const auto& ln : r) {
                INFO(ln);
                CHECK(ln.rfind("PASS ", 0) == 0);
            }
            ++checked;
        }
    }
    CHECK(checked > 60);
}

TEST_CASE("orientation reversal holds across two component links") {
    int checked = 0;
    for (const auto& code : sample_corpus(30, 555111, 2, 6)) {
        for (int comp = 0; comp < 2; ++comp) {
            Report r = check_orientation_reversal(code, comp);
            for (const auto& ln : r) {
                INFO(ln);
                CHECK(ln.rfind("PASS ", 0) == 0);
            }
            ++checked;
        }
    }
    CHECK(checked == 60);
}

TEST_CASE("transforms preserve genus and colorability") {
    for (const auto& code : sample_corpus(40, 31337, 1, 5)) {
        int genus = SurfaceDiagram(code).genus();
        std::vector<Transform> ts = {vertical_mirror(), horizontal_mirror(), reverse_component(0),
                                     crossing_change(0)};
        for (const auto& t : ts) {
            SurfaceDiagram d(apply(code, t));
            INFO(serialize_gauss_code(code));
            CHECK(d.genus() == genus);
            CHECK(checkerboard_colorings(d).has_value());
        }
    }
}
