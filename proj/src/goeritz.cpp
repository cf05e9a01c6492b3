#include "gli/goeritz.hpp"

#include <map>

#include "gli/errors.hpp"

namespace gli {

GoeritzForm goeritz_form(const SurfaceDiagram& d, const Coloring& col, int delete_index) {
    GoeritzForm form;
    for (int f = 0; f < d.face_count(); ++f) {
        if (col.face[f] == FaceColor::White) form.white_faces.push_back(f);
    }
    const int nw = static_cast<int>(form.white_faces.size());
    if (delete_index < 0 || delete_index >= nw) {
        throw IndexError("white face index out of range");
    }
    std::map<int, int> idx;
    for (int i = 0; i < nw; ++i) idx[form.white_faces[i]] = i;

    Matrix full(nw);
    for (const CrossingColorData& cd : crossing_color_data(d, col)) {
        int i = idx.at(cd.white_a);
        int j = idx.at(cd.white_b);
        if (i == j) continue;
        full.at(i, j) -= cd.eta;
        full.at(j, i) -= cd.eta;
    }
    for (int i = 0; i < nw; ++i) {
        Int s = 0;
        for (int j = 0; j < nw; ++j) {
            if (j != i) s += full.at(i, j);
        }
        full.at(i, i) = -s;
    }

    form.reduced = full.without(delete_index);
    form.full = std::move(full);
    form.deleted = delete_index;
    form.mu = mu_correction(d, col);
    return form;
}

InvariantTriple coloring_invariants(const SurfaceDiagram& d, const Coloring& col) {
    GoeritzForm form = goeritz_form(d, col);
    InvariantTriple t;
    t.mu = form.mu;
    t.sigma = signature(form.reduced) - form.mu;
    t.det = abs(determinant(form.reduced));
    t.nullity = nullity(form.reduced);
    return t;
}

int euler_number_checkerboard(const SurfaceDiagram& d, const Coloring& col) {
    return -2 * mu_correction(d, col);
}

std::string to_string(GenusCertificate c) {
    switch (c) {
        case GenusCertificate::Minimal: return "minimal";
        case GenusCertificate::Inconclusive: return "inconclusive";
        case GenusCertificate::NotColorable: return "not-colorable";
    }
    return "";
}

GenusCertificate genus_certificate(const SurfaceDiagram& d) {
    auto pair = checkerboard_colorings(d);
    if (!pair) return GenusCertificate::NotColorable;
    InvariantTriple a = coloring_invariants(d, pair->first);
    InvariantTriple b = coloring_invariants(d, pair->second);
    return a.det != 0 && b.det != 0 ? GenusCertificate::Minimal
                                    : GenusCertificate::Inconclusive;
}

}  // namespace gli
