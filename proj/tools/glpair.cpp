// glpair: signature, determinant and nullity invariants of checkerboard
// colorable links in thickened surfaces, from Gauss codes or disk-band
// surface files.
//
// Exit codes: 0 ok, 1 input error, 2 not colorable, 3 not allowable.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gli/coloring.hpp"
#include "gli/disk_band.hpp"
#include "gli/errors.hpp"
#include "gli/gauss_code.hpp"
#include "gli/goeritz.hpp"
#include "gli/link_ops.hpp"
#include "gli/matrix.hpp"
#include "gli/record.hpp"
#include "gli/surface_diagram.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNotColorable = 2;
constexpr int kExitNotAllowable = 3;

void print_record_text(const gli::InvariantRecord& rec, std::ostream& out) {
    out << "name:        " << rec.name << "\n";
    out << "gauss:       " << rec.gauss_code << "\n";
    out << "genus:       " << rec.genus << "\n";
    out << "colorable:   " << (rec.colorable ? "yes" : "no") << "\n";
    const char* labels[2] = {"xi:          ", "xi*:         "};
    for (size_t k = 0; k < rec.triples.size(); ++k) {
        const auto& t = rec.triples[k];
        out << labels[k] << "sigma " << t.sigma << "  det " << t.det << "  nullity " << t.nullity
            << "  mu " << t.mu << "\n";
    }
    out << "certificate: " << rec.certificate << "\n";
}

int run_invariants(const std::string& name, const std::string& gauss, bool as_json) {
    gli::InvariantRecord rec = gli::compute_record(name.empty() ? gauss : name, gauss);
    if (!rec.ok()) {
        std::cerr << "error: " << rec.error << "\n";
        return kExitInput;
    }
    if (as_json)
        std::cout << gli::record_json(rec);
    else
        print_record_text(rec, std::cout);
    if (!rec.colorable) {
        std::cerr << "note: diagram is not checkerboard colorable\n";
        return kExitNotColorable;
    }
    return kExitOk;
}

int run_batch(const std::string& input, const std::string& output) {
    std::ifstream in(input);
    if (!in) {
        std::cerr << "error: cannot read " << input << "\n";
        return kExitInput;
    }
    bool as_csv;
    if (output.size() >= 4 && output.substr(output.size() - 4) == ".csv")
        as_csv = true;
    else if (output.size() >= 5 && output.substr(output.size() - 5) == ".json")
        as_csv = false;
    else {
        std::cerr << "error: --out must end in .json or .csv\n";
        return kExitInput;
    }

    std::vector<gli::InvariantRecord> recs;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        size_t tab = line.find('\t');
        if (tab == std::string::npos) {
            gli::InvariantRecord bad;
            bad.name = line;
            bad.error = "missing tab between name and gauss code";
            recs.push_back(bad);
            continue;
        }
        recs.push_back(gli::compute_record(line.substr(0, tab), line.substr(tab + 1)));
    }

    std::ofstream out(output);
    if (!out) {
        std::cerr << "error: cannot write " << output << "\n";
        return kExitInput;
    }
    out << (as_csv ? gli::records_csv(recs) : gli::records_json(recs));
    std::cerr << "wrote " << recs.size() << " records to " << output << "\n";
    return kExitOk;
}

int run_surface(const std::string& path, bool show_gl, bool show_euler, bool show_invariants,
                bool show_kirby) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot read " << path << "\n";
        return kExitInput;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    gli::DiskBandSurface s = gli::parse_dbs(buf.str());

    bool all = !(show_gl || show_euler || show_invariants || show_kirby);
    if (show_gl || all) std::cout << "gl: " << gli::format_matrix(gli::gl_matrix(s)) << "\n";
    if (show_euler || all) std::cout << "euler: " << gli::euler_number(s) << "\n";
    if (show_invariants || all) {
        gli::InvariantTriple t = gli::surface_invariants(s);
        std::cout << "(" << t.sigma << ", " << t.det << ", " << t.nullity << ")\n";
    }
    if (show_kirby || all) {
        gli::FramedVirtualLink l = gli::kirby_diagram(s);
        std::cout << "framings:";
        for (const auto& f : l.framings) std::cout << " " << f;
        std::cout << "\nmatrix: " << gli::format_matrix(l.matrix) << "\n";
    }
    return kExitOk;
}

int run_realize(const std::string& matrix_text, const std::string& output) {
    gli::Matrix m = gli::parse_matrix(matrix_text);
    gli::DiskBandSurface s = gli::realize(m);
    std::ofstream out(output);
    if (!out) {
        std::cerr << "error: cannot write " << output << "\n";
        return kExitInput;
    }
    out << gli::serialize_dbs(s);
    std::cerr << "wrote " << output << " (" << s.n_bands << " bands)\n";
    return kExitOk;
}

// Property harness: sample a corpus and verify the behavioral theorems on
// every member. Prints one report line per check.
int run_check(int count, std::uint64_t seed, int components, int max_crossings) {
    auto corpus = gli::sample_corpus(count, seed, components, max_crossings);
    int failures = 0;
    auto emit = [&](const gli::Report& r) {
        for (const auto& line : r) {
            std::cout << line << "\n";
            if (line.rfind("PASS ", 0) != 0) ++failures;
        }
    };
    for (const auto& code : corpus) {
        emit(gli::check_mirror_properties(code));
        for (int c = 0; c < code.crossing_count(); ++c)
            if (code.signs[c] == 1) emit(gli::check_crossing_change(code, c));
        if (code.component_count() >= 2)
            for (int i = 0; i < code.component_count(); ++i)
                emit(gli::check_orientation_reversal(code, i));
    }
    std::cerr << (failures == 0 ? "all checks passed\n"
                                : std::to_string(failures) + " checks failed\n");
    return failures == 0 ? kExitOk : kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Gordon-Litherland signature, determinant and nullity invariants of "
        "checkerboard colorable virtual links"};
    app.require_subcommand(1);

    auto* inv = app.add_subcommand("invariants", "Invariants of one Gauss code");
    std::string gauss, name;
    bool as_json = false;
    inv->add_option("--gauss", gauss, "Gauss code, e.g. \"O1+U2+O3+U1+O2+U3+\"")->required();
    inv->add_option("--name", name, "Record name (defaults to the code)");
    inv->add_flag("--json", as_json, "Emit JSON instead of text");

    auto* batch = app.add_subcommand("batch", "Process a table of codes");
    std::string batch_in, batch_out;
    batch->add_option("input", batch_in, "TSV file, one `name<TAB>gauss_code` per line")
        ->required();
    batch->add_option("--out", batch_out, "Output file (.json or .csv)")->required();

    auto* surf = app.add_subcommand("surface", "Inspect a disk-band surface file");
    std::string surf_path;
    bool show_gl = false, show_euler = false, show_invariants = false, show_kirby = false;
    surf->add_option("file", surf_path, "Surface in .dbs format")->required();
    surf->add_flag("--gl", show_gl, "Print the virtual linking matrix");
    surf->add_flag("--euler", show_euler, "Print the euler number");
    surf->add_flag("--invariants", show_invariants, "Print (sigma, det, nullity)");
    surf->add_flag("--kirby", show_kirby, "Print the framed link of the doubled cores");

    auto* real = app.add_subcommand("realize", "Build a surface with a prescribed matrix");
    std::string matrix_text, realize_out;
    real->add_option("--matrix", matrix_text, "Symmetric matrix, rows ';' entries ','")
        ->required();
    real->add_option("--out", realize_out, "Output .dbs file")->required();

    auto* check = app.add_subcommand("check", "Run the property harness on a sampled corpus");
    int count = 50, components = 1, max_crossings = 6;
    std::uint64_t seed = 1;
    check->add_option("--count", count, "Corpus size (default 50)");
    check->add_option("--seed", seed, "Sampling seed (default 1)");
    check->add_option("--components", components, "Components per code (default 1)");
    check->add_option("--max-crossings", max_crossings, "Crossing bound (default 6)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*inv) return run_invariants(name, gauss, as_json);
        if (*batch) return run_batch(batch_in, batch_out);
        if (*surf) return run_surface(surf_path, show_gl, show_euler, show_invariants, show_kirby);
        if (*real) return run_realize(matrix_text, realize_out);
        if (*check) return run_check(count, seed, components, max_crossings);
    } catch (const gli::NotAllowable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotAllowable;
    } catch (const gli::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
