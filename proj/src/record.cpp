#include "gli/record.hpp"

#include <sstream>

#include "gli/coloring.hpp"
#include "gli/errors.hpp"
#include "gli/gauss_code.hpp"
#include "gli/surface_diagram.hpp"
#include "json.hpp"

namespace gli {

InvariantRecord compute_record(const std::string& name, const std::string& gauss_text) {
    InvariantRecord rec;
    rec.name = name;
    try {
        GaussCode code = parse_gauss_code(gauss_text);
        rec.gauss_code = serialize_gauss_code(code);
        SurfaceDiagram d(code);
        rec.genus = d.genus();
        GenusCertificate cert = GenusCertificate::NotColorable;
        if (d.is_connected()) {
            cert = genus_certificate(d);
            if (auto pr = checkerboard_colorings(d)) {
                rec.colorable = true;
                rec.triples = {coloring_invariants(d, pr->first),
                               coloring_invariants(d, pr->second)};
            }
        }
        rec.certificate = to_string(cert);
    } catch (const Error& e) {
        rec.error = e.what();
    }
    return rec;
}

namespace {

using json = nlohmann::ordered_json;

// Determinants are exact integers; emit them as JSON numbers while they fit
// the wire type and fall back to a decimal string beyond that.
json int_json(const Int& v) {
    if (v.fits_slong_p()) return static_cast<long long>(v.get_si());
    return v.get_str();
}

json record_to_json(const InvariantRecord& rec) {
    json j;
    j["name"] = rec.name;
    if (!rec.ok()) {
        j["error"] = rec.error;
        return j;
    }
    j["gauss_code"] = rec.gauss_code;
    j["genus"] = rec.genus;
    j["colorable"] = rec.colorable;
    json invariants = json::array();
    for (const auto& t : rec.triples) {
        json jt;
        jt["sigma"] = t.sigma;
        jt["det"] = int_json(t.det);
        jt["nullity"] = t.nullity;
        jt["mu"] = t.mu;
        invariants.push_back(jt);
    }
    j["invariants"] = invariants;
    j["certificate"] = rec.certificate;
    return j;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string record_json(const InvariantRecord& rec) { return record_to_json(rec).dump(2) + "\n"; }

std::string records_json(const std::vector<InvariantRecord>& recs) {
    json arr = json::array();
    for (const auto& r : recs) arr.push_back(record_to_json(r));
    return arr.dump(2) + "\n";
}

std::string records_csv(const std::vector<InvariantRecord>& recs) {
    std::ostringstream out;
    out << "name,gauss_code,genus,colorable,"
           "sigma_xi,det_xi,nullity_xi,mu_xi,"
           "sigma_dual,det_dual,nullity_dual,mu_dual,certificate,error\n";
    for (const auto& r : recs) {
        out << csv_escape(r.name) << ',';
        if (!r.ok()) {
            out << ",,,,,,,,,,,," << csv_escape(r.error) << '\n';
            continue;
        }
        out << csv_escape(r.gauss_code) << ',' << r.genus << ','
            << (r.colorable ? "true" : "false") << ',';
        for (int k = 0; k < 2; ++k) {
            if (r.colorable) {
                const auto& t = r.triples[k];
                out << t.sigma << ',' << t.det << ',' << t.nullity << ',' << t.mu << ',';
            } else {
                out << ",,,,";
            }
        }
        out << csv_escape(r.certificate) << ",\n";
    }
    return out.str();
}

}  // namespace gli
