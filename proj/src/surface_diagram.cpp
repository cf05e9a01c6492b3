#include "gli/surface_diagram.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

#include "gli/errors.hpp"

namespace gli {

SurfaceDiagram::SurfaceDiagram(const GaussCode& code) : code_(code) {
    const int n = crossing_count();

    // Global pass indices, component by component.
    std::vector<int> pass_comp;  // gauss component of each pass
    std::vector<int> pass_next;  // next pass along the strand (cyclic)
    over_pass_.assign(n, -1);
    under_pass_.assign(n, -1);
    int p = 0;
    for (size_t c = 0; c < code_.components.size(); ++c) {
        const auto& comp = code_.components[c];
        if (comp.empty()) {
            ++unknot_components_;
            continue;
        }
        int first = p;
        for (size_t k = 0; k < comp.size(); ++k, ++p) {
            (comp[k].over ? over_pass_ : under_pass_)[comp[k].crossing] = p;
            pass_comp.push_back(static_cast<int>(c));
            pass_next.push_back(k + 1 < comp.size() ? p + 1 : first);
        }
    }
    const int npass = p;
    assert(npass == 2 * n);

    // Edges: out-dart 2p runs to in-dart 2*next(p)+1.
    alpha_.assign(2 * npass, -1);
    vertex_.assign(2 * npass, -1);
    for (int q = 0; q < npass; ++q) {
        alpha_[2 * q] = 2 * pass_next[q] + 1;
        alpha_[2 * pass_next[q] + 1] = 2 * q;
    }
    for (int x = 0; x < n; ++x) {
        vertex_[over_out(x)] = vertex_[over_in(x)] = x;
        vertex_[under_out(x)] = vertex_[under_in(x)] = x;
    }

    // Rotation (counterclockwise) per crossing.
    sigma_.assign(2 * npass, -1);
    for (int x = 0; x < n; ++x) {
        std::vector<int> rot;
        if (code_.signs[x] > 0)
            rot = {under_in(x), over_in(x), under_out(x), over_out(x)};
        else
            rot = {under_in(x), over_out(x), under_out(x), over_in(x)};
        for (int k = 0; k < 4; ++k) sigma_[rot[k]] = rot[(k + 1) % 4];
    }

    // Faces: orbits of d -> sigma(alpha(d)).
    face_of_dart_.assign(2 * npass, -1);
    face_of_corner_.assign(2 * npass, -1);
    for (int d0 = 0; d0 < 2 * npass; ++d0) {
        if (face_of_dart_[d0] >= 0) continue;
        int id = static_cast<int>(faces_.size());
        std::vector<int> cycle;
        int d = d0;
        do {
            face_of_dart_[d] = id;
            cycle.push_back(d);
            d = sigma_[alpha_[d]];
        } while (d != d0);
        faces_.push_back(std::move(cycle));
    }
    // Canonical ids: sort cycles by least dart and rotate to start there.
    std::sort(faces_.begin(), faces_.end(), [](const auto& a, const auto& b) {
        return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
    });
    for (auto& cycle : faces_) {
        auto mn = std::min_element(cycle.begin(), cycle.end());
        std::rotate(cycle.begin(), mn, cycle.end());
    }
    for (size_t f = 0; f < faces_.size(); ++f)
        for (int d : faces_[f]) face_of_dart_[d] = static_cast<int>(f);

    // The quadrant between d and sigma(d) is wrapped by the face that turns
    // there, which is the face of sigma(d) (equivalently of alpha(d)).
    for (int d = 0; d < 2 * npass; ++d) {
        face_of_corner_[d] = face_of_dart_[sigma_[d]];
        assert(face_of_corner_[d] == face_of_dart_[alpha_[d]]);
    }

    // Connectivity over crossings (edges join consecutive passes' crossings).
    std::vector<int> comp_of(n, -1);
    int ncomp = 0;
    for (int x0 = 0; x0 < n; ++x0) {
        if (comp_of[x0] >= 0) continue;
        std::vector<int> stack{x0};
        comp_of[x0] = ncomp;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int d : {over_out(x), over_in(x), under_out(x), under_in(x)}) {
                int y = vertex_[alpha_[d]];
                if (comp_of[y] < 0) {
                    comp_of[y] = ncomp;
                    stack.push_back(y);
                }
            }
        }
        ++ncomp;
    }
    connected_ = (ncomp + unknot_components_) == 1;

    // Genus: Euler characteristic per diagram component. Unknot spheres
    // contribute genus 0 (and two empty faces, appended below).
    std::vector<int> verts(ncomp, 0), edges(ncomp, 0), fcs(ncomp, 0);
    for (int x = 0; x < n; ++x) ++verts[comp_of[x]];
    for (int q = 0; q < npass; ++q) ++edges[comp_of[vertex_[2 * q]]];
    for (const auto& cycle : faces_) ++fcs[comp_of[vertex_[cycle.front()]]];
    genus_ = 0;
    for (int c = 0; c < ncomp; ++c) {
        int chi = verts[c] - edges[c] + fcs[c];
        assert((2 - chi) % 2 == 0);
        genus_ += (2 - chi) / 2;
    }
    for (int u = 0; u < unknot_components_; ++u) {
        faces_.emplace_back();
        faces_.emplace_back();
    }
}

std::string SurfaceDiagram::debug_dump() const {
    std::ostringstream out;
    out << "crossings " << crossing_count() << "\n";
    out << "darts " << dart_count() << "\n";
    for (int x = 0; x < crossing_count(); ++x) {
        out << "crossing " << x << " sign " << (code_.signs[x] > 0 ? '+' : '-') << " rot";
        int d = under_in(x);
        for (int k = 0; k < 4; ++k, d = sigma_[d]) out << ' ' << d;
        out << "\n";
    }
    for (int d = 0; d < dart_count(); d += 2) out << "edge " << d << " " << alpha_[d] << "\n";
    for (int f = 0; f < face_count(); ++f) {
        out << "face " << f << ":";
        for (int d : faces_[f]) out << ' ' << d;
        out << "\n";
    }
    out << "genus " << genus_ << "\n";
    return out.str();
}

}  // namespace gli
