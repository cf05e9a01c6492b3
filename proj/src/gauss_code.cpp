#include "gli/gauss_code.hpp"

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <map>

#include "gli/errors.hpp"

namespace gli {

GaussCode parse_gauss_code(const std::string& text) {
    // Component boundaries first; whitespace is meaningless everywhere else.
    std::vector<std::string> parts(1);
    bool any_content = false;
    for (char c : text) {
        if (c == ';') {
            parts.emplace_back();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            parts.back() += c;
            any_content = true;
        }
    }
    if (!any_content && parts.size() == 1) throw StructureError("gauss code has no components");

    GaussCode code;
    std::map<long, int> dense;                   // original id -> dense id
    std::vector<std::pair<int, int>> seen_over;  // per dense id: O count, U count
    std::vector<int> seen_sign;

    for (const std::string& comp : parts) {
        code.components.emplace_back();
        size_t i = 0;
        while (i < comp.size()) {
            char kind = comp[i];
            if (kind != 'O' && kind != 'U')
                throw SyntaxError(std::string("expected O or U, got '") + comp[i] + "'");
            ++i;
            size_t start = i;
            while (i < comp.size() && std::isdigit(static_cast<unsigned char>(comp[i]))) ++i;
            if (i == start) throw SyntaxError("missing crossing id after O/U");
            long orig = 0;
            try {
                orig = std::stol(comp.substr(start, i - start));
            } catch (const std::out_of_range&) {
                throw SyntaxError("crossing id out of range");
            }
            if (orig <= 0) throw SyntaxError("crossing ids must be positive integers");
            if (i >= comp.size() || (comp[i] != '+' && comp[i] != '-'))
                throw SyntaxError("missing +/- sign on crossing " + std::to_string(orig));
            int sign = comp[i] == '+' ? 1 : -1;
            ++i;

            auto [it, fresh] = dense.try_emplace(orig, static_cast<int>(seen_sign.size()));
            int id = it->second;
            if (fresh) {
                seen_over.emplace_back(0, 0);
                seen_sign.push_back(sign);
            } else if (seen_sign[id] != sign) {
                throw StructureError("crossing " + std::to_string(orig) + " has mismatched signs");
            }
            (kind == 'O' ? seen_over[id].first : seen_over[id].second) += 1;
            code.components.back().push_back(Pass{id, kind == 'O'});
        }
    }

    for (size_t id = 0; id < seen_over.size(); ++id) {
        auto [o, u] = seen_over[id];
        if (o != 1 || u != 1)
            throw StructureError("crossing must appear exactly once as O and once as U (dense id " +
                                 std::to_string(id + 1) + " has O x" + std::to_string(o) + ", U x" +
                                 std::to_string(u) + ")");
    }
    code.signs = std::move(seen_sign);
    return code;
}

std::string serialize_gauss_code(const GaussCode& code) {
    std::string out;
    for (size_t c = 0; c < code.components.size(); ++c) {
        if (c) out += ';';
        for (const Pass& p : code.components[c]) {
            out += p.over ? 'O' : 'U';
            out += std::to_string(p.crossing + 1);
            out += code.signs[p.crossing] > 0 ? '+' : '-';
        }
    }
    return out;
}

Matrix vlk_matrix(const GaussCode& code) {
    const int n = code.crossing_count();
    const int m = code.component_count();
    std::vector<int> over_comp(n, -1), under_comp(n, -1);
    for (int c = 0; c < m; ++c)
        for (const Pass& p : code.components[c]) (p.over ? over_comp : under_comp)[p.crossing] = c;
    Matrix vlk(m);
    for (int x = 0; x < n; ++x) vlk.at(over_comp[x], under_comp[x]) += code.signs[x];
    return vlk;
}

Int total_linking(const GaussCode& code) {
    Matrix vlk = vlk_matrix(code);
    Int sum = 0;
    for (int i = 0; i < vlk.size(); ++i)
        for (int j = 0; j < vlk.size(); ++j)
            if (i != j) sum += vlk.at(i, j);
    return sum;
}

Int orientation_reversal_shift(const GaussCode& code, int component) {
    if (component < 0 || component >= code.component_count())
        throw IndexError("orientation_reversal_shift: no such component");
    if (code.component_count() < 2)
        throw StructureError("orientation_reversal_shift needs at least two components");
    Matrix vlk = vlk_matrix(code);
    Int sum = 0;
    for (int j = 0; j < vlk.size(); ++j)
        if (j != component) sum += vlk.at(component, j) + vlk.at(j, component);
    return sum;
}

std::string code_hash(const GaussCode& code) {
    uint32_t h = 2166136261u;
    for (char c : serialize_gauss_code(code)) {
        h ^= static_cast<unsigned char>(c);
        h *= 16777619u;
    }
    char buf[9];
    std::snprintf(buf, sizeof buf, "%08x", h);
    return buf;
}

}  // namespace gli
