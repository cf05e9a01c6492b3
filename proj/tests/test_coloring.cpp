#include <doctest.h>

#include <random>
#include <vector>

#include "fixtures.hpp"
#include "gli/coloring.hpp"
#include "gli/errors.hpp"
#include "gli/gauss_code.hpp"
#include "test_util.hpp"

using testutil::diagram;
using testutil::random_knot_code;

namespace {

// Independent colorability oracle: try every assignment of colors to faces
// and check the edge constraint directly.
int count_proper_colorings(const gli::SurfaceDiagram& d) {
    int nf = d.face_count();
    REQUIRE(nf <= 12);
    int found = 0;
    for (int mask = 0; mask < (1 << nf); ++mask) {
        bool ok = true;
        for (int dart = 0; dart < d.dart_count() && ok; dart += 2) {
            int f1 = d.face_of_dart(dart);
            int f2 = d.face_of_dart(d.alpha(dart));
            if (((mask >> f1) & 1) == ((mask >> f2) & 1)) ok = false;
        }
        if (ok) ++found;
    }
    return found;
}

}  // namespace

TEST_CASE("colorability fixtures") {
    CHECK_FALSE(gli::checkerboard_colorings(diagram(fixtures::kVirtual21)).has_value());
    CHECK(gli::checkerboard_colorings(diagram(fixtures::kVirtual35)).has_value());
    CHECK(gli::checkerboard_colorings(diagram(fixtures::kVirtual37)).has_value());
    CHECK(gli::checkerboard_colorings(diagram(fixtures::kTrefoil)).has_value());
    CHECK(gli::checkerboard_colorings(diagram(fixtures::kVirtual52024)).has_value());
    CHECK_THROWS_AS(gli::checkerboard_colorings(diagram("O1+U1+;O2+U2+")),
                    gli::NotConnected);
}

TEST_CASE("coloring structure") {
    auto pr = gli::checkerboard_colorings(diagram(fixtures::kTrefoil));
    REQUIRE(pr.has_value());
    const auto& [xi, dual] = *pr;
    CHECK(xi.white(0));
    CHECK_FALSE(dual.white(0));
    for (size_t f = 0; f < xi.face.size(); ++f) CHECK(xi.face[f] != dual.face[f]);
}

TEST_CASE("bipartiteness agrees with brute-force search") {
    std::mt19937_64 rng(52115);
    int colorable_seen = 0;
    for (int trial = 0; trial < 300; ++trial) {
        gli::GaussCode code = random_knot_code(rng, 1 + static_cast<int>(rng() % 5));
        gli::SurfaceDiagram d(code);
        int count = count_proper_colorings(d);
        auto pr = gli::checkerboard_colorings(d);
        if (pr) {
            ++colorable_seen;
            CHECK(count == 2);
        } else {
            CHECK(count == 0);
        }
    }
    CHECK(colorable_seen > 20);  // the sample genuinely exercises both branches
}

TEST_CASE("quadrants alternate and whites land in white faces") {
    std::mt19937_64 rng(99182);
    for (int trial = 0; trial < 200; ++trial) {
        gli::GaussCode code = random_knot_code(rng, 1 + static_cast<int>(rng() % 6));
        gli::SurfaceDiagram d(code);
        auto pr = gli::checkerboard_colorings(d);
        if (!pr) continue;
        for (const auto* col : {&pr->first, &pr->second}) {
            auto data = gli::crossing_color_data(d, *col);
            for (const auto& cd : data) {
                CHECK(col->white(cd.white_a));
                CHECK(col->white(cd.white_b));
                CHECK((cd.eta == 1 || cd.eta == -1));
            }
        }
    }
}

TEST_CASE("duality negates eta, toggles types, and acts on mu accordingly") {
    std::mt19937_64 rng(417);
    for (int trial = 0; trial < 200; ++trial) {
        gli::GaussCode code = random_knot_code(rng, 1 + static_cast<int>(rng() % 6));
        gli::SurfaceDiagram d(code);
        auto pr = gli::checkerboard_colorings(d);
        if (!pr) continue;
        auto a = gli::crossing_color_data(d, pr->first);
        auto b = gli::crossing_color_data(d, pr->second);
        int mu_a = 0, mu_b = 0;
        for (size_t c = 0; c < a.size(); ++c) {
            CHECK(a[c].eta == -b[c].eta);
            CHECK(a[c].type2 != b[c].type2);
            if (a[c].type2) mu_a += a[c].eta;
            if (b[c].type2) mu_b += b[c].eta;
        }
        CHECK(gli::mu_correction(d, pr->first) == mu_a);
        CHECK(gli::mu_correction(d, pr->second) == mu_b);
    }
}

TEST_CASE("incidence numbers and types of the genus-1 three-crossing knot") {
    gli::SurfaceDiagram d = diagram(fixtures::kVirtual37);
    auto pr = gli::checkerboard_colorings(d);
    REQUIRE(pr.has_value());

    // xi is the coloring with a single white face.
    int whites = 0;
    for (auto c : pr->first.face)
        if (c == gli::FaceColor::White) ++whites;
    CHECK(whites == 1);

    auto data = gli::crossing_color_data(d, pr->first);
    int type2 = 0;
    for (const auto& cd : data) {
        if (cd.type2) {
            ++type2;
            CHECK(cd.eta == -1);
        }
    }
    CHECK(type2 == 2);
    CHECK(gli::mu_correction(d, pr->first) == -2);

    auto dual = gli::crossing_color_data(d, pr->second);
    type2 = 0;
    for (const auto& cd : dual) {
        if (cd.type2) {
            ++type2;
            CHECK(cd.eta == 1);
        }
    }
    CHECK(type2 == 1);
    CHECK(gli::mu_correction(d, pr->second) == 1);
}

TEST_CASE("lone unknot component gets the two-face coloring") {
    gli::GaussCode unknot;
    unknot.components.push_back({});
    gli::SurfaceDiagram d(unknot);
    auto pr = gli::checkerboard_colorings(d);
    REQUIRE(pr.has_value());
    CHECK(pr->first.face ==
          std::vector<gli::FaceColor>{gli::FaceColor::White, gli::FaceColor::Black});
    CHECK(gli::mu_correction(d, pr->first) == 0);
}
