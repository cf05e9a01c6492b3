#include "gli/disk_band.hpp"

#include <cassert>
#include <cstdlib>
#include <sstream>
#include <vector>

#include "gli/errors.hpp"

namespace gli {

void validate(const DiskBandSurface& s) {
    if (s.n_bands < 0) throw StructureError("negative band count");
    if (s.twists.size() != static_cast<size_t>(s.n_bands))
        throw StructureError("twist list length does not match band count");
    if (s.feet.size() != static_cast<size_t>(2) * s.n_bands)
        throw StructureError("feet list must have two entries per band");
    std::vector<int> seen(s.n_bands, 0);
    for (int id : s.feet) {
        if (id < 0 || id >= s.n_bands) throw IndexError("foot names a band that does not exist");
        ++seen[id];
    }
    for (int c : seen)
        if (c != 2) throw StructureError("every band needs exactly two feet");
    for (const auto& ev : s.events) {
        if (ev.a < 0 || ev.a >= s.n_bands || ev.b < 0 || ev.b >= s.n_bands)
            throw IndexError("crossing names a band that does not exist");
        if (ev.a == ev.b) throw StructureError("a band cannot cross itself");
        if (ev.kind == BandEvent::Kind::Classical) {
            if (ev.sign != 1 && ev.sign != -1)
                throw StructureError("classical crossing sign must be +1 or -1");
        } else if (ev.sign != 0) {
            throw StructureError("virtual crossings carry no sign");
        }
    }
}

namespace {

long parse_int(const std::string& tok, const char* what) {
    size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(tok, &pos);
    } catch (const std::exception&) {
        throw SyntaxError(std::string("expected an integer for ") + what + ", got '" + tok + "'");
    }
    if (pos != tok.size())
        throw SyntaxError(std::string("expected an integer for ") + what + ", got '" + tok + "'");
    return v;
}

int parse_band_id(const std::string& tok, int n_bands, const char* what) {
    long v = parse_int(tok, what);
    if (v < 1 || v > n_bands) throw IndexError(std::string(what) + " band id out of range");
    return static_cast<int>(v - 1);
}

std::vector<std::vector<std::string>> tokenized_lines(const std::string& text) {
    std::vector<std::vector<std::string>> out;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream words(line);
        std::vector<std::string> toks;
        std::string tok;
        while (words >> tok) toks.push_back(tok);
        if (!toks.empty()) out.push_back(std::move(toks));
    }
    return out;
}

}  // namespace

DiskBandSurface parse_dbs(const std::string& text) {
    auto lines = tokenized_lines(text);
    if (lines.size() < 3) throw SyntaxError("surface file needs bands, twists, and feet lines");

    if (lines[0].size() != 2 || lines[0][0] != "bands")
        throw SyntaxError("first line must be 'bands <n>'");
    long n = parse_int(lines[0][1], "band count");
    if (n < 0) throw StructureError("negative band count");

    DiskBandSurface s;
    s.n_bands = static_cast<int>(n);

    if (lines[1].empty() || lines[1][0] != "twists" ||
        lines[1].size() != static_cast<size_t>(n) + 1)
        throw SyntaxError("second line must be 'twists' followed by one count per band");
    for (size_t k = 1; k < lines[1].size(); ++k)
        s.twists.push_back(static_cast<int>(parse_int(lines[1][k], "twist")));

    if (lines[2].empty() || lines[2][0] != "feet" ||
        lines[2].size() != static_cast<size_t>(2) * n + 1)
        throw SyntaxError("third line must be 'feet' followed by 2n band ids");
    for (size_t k = 1; k < lines[2].size(); ++k)
        s.feet.push_back(parse_band_id(lines[2][k], s.n_bands, "foot"));

    for (size_t ln = 3; ln < lines.size(); ++ln) {
        const auto& toks = lines[ln];
        BandEvent ev;
        if (toks[0] == "X") {
            if (toks.size() != 4) throw SyntaxError("classical crossing line must be 'X <over> <under> <+|->'");
            ev.kind = BandEvent::Kind::Classical;
            ev.a = parse_band_id(toks[1], s.n_bands, "crossing");
            ev.b = parse_band_id(toks[2], s.n_bands, "crossing");
            if (toks[3] == "+")
                ev.sign = 1;
            else if (toks[3] == "-")
                ev.sign = -1;
            else
                throw SyntaxError("crossing sign must be '+' or '-'");
        } else if (toks[0] == "V") {
            if (toks.size() != 3) throw SyntaxError("virtual crossing line must be 'V <a> <b>'");
            ev.kind = BandEvent::Kind::Virtual;
            ev.a = parse_band_id(toks[1], s.n_bands, "crossing");
            ev.b = parse_band_id(toks[2], s.n_bands, "crossing");
        } else {
            throw SyntaxError("crossing lines must start with 'X' or 'V'");
        }
        s.events.push_back(ev);
    }

    validate(s);
    return s;
}

std::string serialize_dbs(const DiskBandSurface& s) {
    validate(s);
    std::ostringstream out;
    out << "bands " << s.n_bands << "\n";
    out << "twists";
    for (int k : s.twists) out << ' ' << k;
    out << "\nfeet";
    for (int id : s.feet) out << ' ' << id + 1;
    out << "\n";
    for (const auto& ev : s.events) {
        if (ev.kind == BandEvent::Kind::Classical)
            out << "X " << ev.a + 1 << ' ' << ev.b + 1 << ' ' << (ev.sign > 0 ? '+' : '-') << "\n";
        else
            out << "V " << ev.a + 1 << ' ' << ev.b + 1 << "\n";
    }
    return out.str();
}

Matrix gl_matrix(const DiskBandSurface& s) {
    validate(s);
    Matrix m(s.n_bands);
    for (int i = 0; i < s.n_bands; ++i) m.at(i, i) = s.twists[i];
    for (const auto& ev : s.events) {
        if (ev.kind != BandEvent::Kind::Classical) continue;
        m.at(ev.a, ev.b) += ev.sign;
        m.at(ev.b, ev.a) += ev.sign;
    }
    return m;
}

FramedVirtualLink kirby_diagram(const DiskBandSurface& s) {
    FramedVirtualLink l;
    l.matrix = gl_matrix(s);
    for (int i = 0; i < l.matrix.size(); ++i) l.framings.push_back(l.matrix.at(i, i));
    return l;
}

FramedVirtualLink handle_slide(const FramedVirtualLink& l, int i, int j, int sign) {
    int n = l.matrix.size();
    if (i < 0 || i >= n || j < 0 || j >= n || i == j)
        throw IndexError("handle slide needs two distinct component indices");
    assert(sign == 1 || sign == -1);

    FramedVirtualLink out;
    out.matrix = l.matrix;
    for (int k = 0; k < n; ++k) out.matrix.at(i, k) += sign * l.matrix.at(j, k);
    Matrix half = out.matrix;
    for (int k = 0; k < n; ++k) out.matrix.at(k, i) += sign * half.at(k, j);

    // The same result as conjugating by the elementary matrix, kept as a
    // cross-check that the in-place update stays a unimodular congruence.
    Matrix p(n);
    for (int k = 0; k < n; ++k) p.at(k, k) = 1;
    p.at(j, i) = sign;
    assert(out.matrix == congruent(l.matrix, p));

    for (int k = 0; k < n; ++k) out.framings.push_back(out.matrix.at(k, k));
    return out;
}

BandBoundary trace_boundary(const DiskBandSurface& s) {
    validate(s);
    BandBoundary b;
    b.dir.assign(s.n_bands, {0, 0});
    if (s.n_bands == 0) {
        b.components = 1;  // the bare disk still has its one boundary circle
        return b;
    }

    // Corner c = 2p + side at foot position p, side 0 just before the foot in
    // the cyclic order and side 1 just after. Every corner lies on one arc of
    // the disk boundary (gap) and one side of a band; the surface boundary
    // alternates between the two kinds of arc.
    int m = 2 * s.n_bands;            // foot positions
    int nc = 2 * m;                   // corners
    std::vector<int> foot_a(s.n_bands, -1), foot_b(s.n_bands, -1);
    for (int p = 0; p < m; ++p) {
        if (foot_a[s.feet[p]] < 0)
            foot_a[s.feet[p]] = p;
        else
            foot_b[s.feet[p]] = p;
    }

    std::vector<int> gap_mate(nc), band_mate(nc);
    for (int p = 0; p < m; ++p) {
        gap_mate[2 * p + 1] = 2 * ((p + 1) % m);
        gap_mate[2 * ((p + 1) % m)] = 2 * p + 1;
    }
    for (int band = 0; band < s.n_bands; ++band) {
        int a = foot_a[band], bb = foot_b[band];
        if (s.twists[band] % 2 == 0) {
            // Untwisted sides: the edge leaving one side of foot A comes back
            // on the opposite side of foot B.
            band_mate[2 * a] = 2 * bb + 1;
            band_mate[2 * bb + 1] = 2 * a;
            band_mate[2 * a + 1] = 2 * bb;
            band_mate[2 * bb] = 2 * a + 1;
        } else {
            // An odd number of half twists swaps the two sides en route.
            band_mate[2 * a] = 2 * bb;
            band_mate[2 * bb] = 2 * a;
            band_mate[2 * a + 1] = 2 * bb + 1;
            band_mate[2 * bb + 1] = 2 * a + 1;
        }
    }

    std::vector<char> visited(nc, 0);
    std::vector<int> arcs_seen(s.n_bands, 0);
    for (int start = 0; start < nc; ++start) {
        if (visited[start]) continue;
        ++b.components;
        int c = start;
        bool band_step = true;
        do {
            visited[c] = 1;
            if (band_step) {
                int band = s.feet[c / 2];
                int d = (c / 2 == foot_a[band]) ? 1 : -1;
                assert(arcs_seen[band] < 2);
                b.dir[band][arcs_seen[band]++] = d;
                c = band_mate[c];
            } else {
                c = gap_mate[c];
            }
            visited[c] = 1;
            band_step = !band_step;
        } while (c != start);
    }
    for (int band = 0; band < s.n_bands; ++band) assert(arcs_seen[band] == 2);
    return b;
}

int euler_number(const DiskBandSurface& s) {
    BandBoundary b = trace_boundary(s);

    // Linking of the boundary with its push-off just inside the surface,
    // accumulated feature by feature. Along a band, two boundary arcs run
    // side by side with their push-off partners. A half twist winds those
    // strands around each other and yields two boundary-over-push-off
    // crossings of the twist's handedness when the arcs run the same way
    // along the core, and none when they run opposite ways (the pair
    // cancels). Where band a crosses over band b with sign e, each strand of
    // a crosses each strand of b and the mixed crossings total e times the
    // product of the two direction sums. The constants are pinned by the
    // fixture surfaces in the tests.
    long acc = 0;
    for (int band = 0; band < s.n_bands; ++band)
        acc += static_cast<long>(s.twists[band]) * (1 + b.dir[band][0] * b.dir[band][1]);
    for (const auto& ev : s.events) {
        if (ev.kind != BandEvent::Kind::Classical) continue;
        acc += static_cast<long>(ev.sign) * (b.dir[ev.a][0] + b.dir[ev.a][1]) *
               (b.dir[ev.b][0] + b.dir[ev.b][1]);
    }
    return static_cast<int>(-acc);
}

InvariantTriple surface_invariants(const DiskBandSurface& s) {
    Matrix m = gl_matrix(s);
    int e = euler_number(s);
    if (e % 2 != 0) throw OddEuler("surface euler number came out odd");
    InvariantTriple t;
    t.sigma = signature(m) + e / 2;
    t.det = abs(determinant(m));
    t.nullity = nullity(m);
    t.mu = -e / 2;
    return t;
}

namespace {

int twist_from_entry(const Int& v) {
    if (!v.fits_sint_p()) throw StructureError("matrix entry too large for a twist count");
    return static_cast<int>(v.get_si());
}

}  // namespace

DiskBandSurface realize(const Matrix& m) {
    if (!m.is_symmetric()) throw NotSymmetric("only symmetric matrices are realizable");
    int n = m.size();
    bool odd_diag = false;
    for (int i = 0; i < n; ++i)
        if (m.at(i, i) % 2 != 0) odd_diag = true;
    if (n % 2 != 0 && !odd_diag)
        throw NotAllowable("odd size needs an odd diagonal entry somewhere");

    // When the size is odd, the construction wants the lone unpaired band to
    // carry an odd twist count; swap one into the last slot and relabel back
    // at the end.
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    if (n % 2 != 0) {
        int p = n - 1;
        while (m.at(p, p) % 2 == 0) --p;
        std::swap(perm[p], perm[n - 1]);
    }

    DiskBandSurface s;
    s.n_bands = n;
    s.twists.resize(n);
    for (int i = 0; i < n; ++i) s.twists[i] = twist_from_entry(m.at(perm[i], perm[i]));

    // Attach bands pairwise. A pair with any even twist gets alternating feet
    // (the planar picture then forces one crossing between them, drawn
    // virtual); a pair with two odd twists gets side-by-side feet and no
    // crossing. Either block's boundary threads through in a single strand,
    // so the assembled boundary is one closed curve.
    for (int k = 0; 2 * k + 1 < n; ++k) {
        int b0 = 2 * k, b1 = 2 * k + 1;
        if (s.twists[b0] % 2 != 0 && s.twists[b1] % 2 != 0) {
            s.feet.insert(s.feet.end(), {b0, b0, b1, b1});
        } else {
            s.feet.insert(s.feet.end(), {b0, b1, b0, b1});
            s.events.push_back({BandEvent::Kind::Virtual, b0, b1, 0});
        }
    }
    if (n % 2 != 0) s.feet.insert(s.feet.end(), {n - 1, n - 1});

    // Linking between distinct bands: |entry| crossings of the first band
    // over the second, each paired with a virtual crossing where the band
    // returns.
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Int want = m.at(perm[i], perm[j]);
            int cnt = twist_from_entry(abs(want));
            int sign = want < 0 ? -1 : 1;
            for (int t = 0; t < cnt; ++t) {
                s.events.push_back({BandEvent::Kind::Classical, i, j, sign});
                s.events.push_back({BandEvent::Kind::Virtual, i, j, 0});
            }
        }
    }

    // Undo the diagonal permutation by relabeling bands.
    DiskBandSurface out;
    out.n_bands = n;
    out.twists.resize(n);
    for (int i = 0; i < n; ++i) out.twists[perm[i]] = s.twists[i];
    out.feet.reserve(s.feet.size());
    for (int id : s.feet) out.feet.push_back(perm[id]);
    out.events.reserve(s.events.size());
    for (auto ev : s.events) {
        ev.a = perm[ev.a];
        ev.b = perm[ev.b];
        out.events.push_back(ev);
    }

    assert(gl_matrix(out) == m);
    assert(trace_boundary(out).components == 1);
    return out;
}

}  // namespace gli
