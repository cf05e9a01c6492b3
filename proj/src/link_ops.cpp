#include "gli/link_ops.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include "gli/coloring.hpp"
#include "gli/errors.hpp"
#include "gli/goeritz.hpp"
#include "gli/surface_diagram.hpp"

namespace gli {

GaussCode apply(const GaussCode& code, const Transform& t) {
    GaussCode out = code;
    switch (t.kind) {
        case Transform::Kind::VerticalMirror:
            for (auto& comp : out.components)
                for (auto& pass : comp) pass.over = !pass.over;
            for (auto& s : out.signs) s = -s;
            break;
        case Transform::Kind::HorizontalMirror:
            for (auto& s : out.signs) s = -s;
            break;
        case Transform::Kind::ReverseComponent: {
            if (t.index < 0 || t.index >= code.component_count())
                throw IndexError("no such component");
            auto& comp = out.components[t.index];
            std::reverse(comp.begin(), comp.end());
            // A crossing shared with another component sees exactly one of
            // its strands reversed, which negates its sign; self-crossings
            // of the component see both and keep theirs.
            std::vector<int> passes_here(out.crossing_count(), 0);
            for (const auto& pass : comp) ++passes_here[pass.crossing];
            for (int c = 0; c < out.crossing_count(); ++c)
                if (passes_here[c] == 1) out.signs[c] = -out.signs[c];
            break;
        }
        case Transform::Kind::CrossingChange:
            if (t.index < 0 || t.index >= code.crossing_count())
                throw IndexError("no such crossing");
            for (auto& comp : out.components)
                for (auto& pass : comp)
                    if (pass.crossing == t.index) pass.over = !pass.over;
            out.signs[t.index] = -out.signs[t.index];
            break;
    }
    return out;
}

bool all_pass(const Report& r) {
    for (const auto& line : r)
        if (line.rfind("PASS ", 0) != 0) return false;
    return true;
}

namespace {

struct TriplePair {
    InvariantTriple xi, dual;
};

TriplePair invariant_pair(const GaussCode& code) {
    SurfaceDiagram d(code);
    auto pr = checkerboard_colorings(d);
    if (!pr) throw StructureError("code is not checkerboard colorable");
    return {coloring_invariants(d, pr->first), coloring_invariants(d, pr->second)};
}

std::string show(const InvariantTriple& t) {
    std::ostringstream o;
    o << "(" << t.sigma << "," << t.det << "," << t.nullity << ")";
    return o.str();
}

std::string line(bool ok, const std::string& prop, const GaussCode& code,
                 const std::string& details) {
    return (ok ? "PASS " : "FAIL ") + prop + " " + code_hash(code) + " " + details;
}

bool negated_triple(const InvariantTriple& a, const InvariantTriple& b) {
    return a.sigma == -b.sigma && a.det == b.det && a.nullity == b.nullity;
}

// Unordered comparison of {a1, a2} against {b1, b2} under a binary relation.
template <typename Rel>
bool pair_matches(const InvariantTriple& a1, const InvariantTriple& a2, const InvariantTriple& b1,
                  const InvariantTriple& b2, Rel rel) {
    return (rel(a1, b1) && rel(a2, b2)) || (rel(a1, b2) && rel(a2, b1));
}

}  // namespace

Report check_mirror_properties(const GaussCode& code) {
    Report r;
    TriplePair base = invariant_pair(code);

    TriplePair vert = invariant_pair(apply(code, vertical_mirror()));
    bool v_ok = negated_triple(vert.xi, base.xi) && negated_triple(vert.dual, base.dual);
    r.push_back(line(v_ok, "vertical-mirror", code,
                     show(base.xi) + show(base.dual) + " -> " + show(vert.xi) + show(vert.dual)));

    TriplePair horiz = invariant_pair(apply(code, horizontal_mirror()));
    bool h_ok = pair_matches(horiz.xi, horiz.dual, base.xi, base.dual, negated_triple);
    r.push_back(line(h_ok, "horizontal-mirror", code,
                     show(base.xi) + show(base.dual) + " -> " + show(horiz.xi) + show(horiz.dual)));
    return r;
}

Report check_crossing_change(const GaussCode& code, int crossing) {
    if (crossing < 0 || crossing >= code.crossing_count()) throw IndexError("no such crossing");
    if (code.signs[crossing] != 1)
        throw NotPositive("crossing change bounds are stated for a positive crossing");

    TriplePair plus = invariant_pair(code);
    TriplePair minus = invariant_pair(apply(code, crossing_change(crossing)));

    Report r;
    const InvariantTriple* ps[2] = {&plus.xi, &plus.dual};
    const InvariantTriple* ms[2] = {&minus.xi, &minus.dual};
    const char* names[2] = {"crossing-change-xi", "crossing-change-dual"};
    for (int k = 0; k < 2; ++k) {
        int shift = ms[k]->sigma - ps[k]->sigma;
        bool ok = (ps[k]->nullity == ms[k]->nullity) ? (shift == 0 || shift == 2) : (shift == 1);
        ok = ok && 0 <= shift && shift <= 2;
        std::ostringstream details;
        details << "crossing " << crossing + 1 << " " << show(*ps[k]) << " -> " << show(*ms[k]);
        r.push_back(line(ok, names[k], code, details.str()));
    }
    return r;
}

Report check_orientation_reversal(const GaussCode& code, int component) {
    Int shift = orientation_reversal_shift(code, component);
    TriplePair base = invariant_pair(code);
    TriplePair rev = invariant_pair(apply(code, reverse_component(component)));

    auto shifted = [&](const InvariantTriple& a, const InvariantTriple& b) {
        return a.sigma == b.sigma + shift && a.det == b.det && a.nullity == b.nullity;
    };
    bool ok = pair_matches(rev.xi, rev.dual, base.xi, base.dual, shifted);
    std::ostringstream details;
    details << "component " << component + 1 << " shift " << shift << " " << show(base.xi)
            << show(base.dual) << " -> " << show(rev.xi) << show(rev.dual);
    Report r;
    r.push_back(line(ok, "orientation-reversal", code, details.str()));
    return r;
}

std::vector<GaussCode> sample_corpus(int target, std::uint64_t seed, int components,
                                     int max_crossings) {
    std::mt19937_64 rng(seed);
    std::vector<GaussCode> out;
    std::set<std::string> seen;
    int n = 0;
    while (static_cast<int>(out.size()) < target) {
        n = n % max_crossings + 1;
        if (n < components) continue;  // every component needs at least one pass

        // Deal the 2n passes into components, one pass per crossing side.
        std::vector<Pass> deck;
        for (int c = 0; c < n; ++c) {
            deck.push_back({c, true});
            deck.push_back({c, false});
        }
        std::shuffle(deck.begin(), deck.end(), rng);

        GaussCode code;
        code.components.resize(components);
        std::vector<size_t> cuts = {0, deck.size()};
        while (static_cast<int>(cuts.size()) < components + 1)
            cuts.push_back(1 + rng() % (deck.size() - 1));
        std::sort(cuts.begin(), cuts.end());
        bool empty_component = false;
        for (int k = 0; k < components; ++k) {
            if (cuts[k] == cuts[k + 1]) empty_component = true;
            code.components[k].assign(deck.begin() + cuts[k], deck.begin() + cuts[k + 1]);
        }
        if (empty_component) continue;

        code.signs.assign(n, 1);
        code = parse_gauss_code(serialize_gauss_code(code));  // dense first-appearance ids
        for (int c = 0; c < n; ++c) code.signs[c] = rng() % 2 ? 1 : -1;

        SurfaceDiagram d(code);
        if (!d.is_connected()) continue;
        if (!checkerboard_colorings(d)) continue;
        if (!seen.insert(serialize_gauss_code(code)).second) continue;
        out.push_back(std::move(code));
    }
    return out;
}

}  // namespace gli
