#include "gli/matrix.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <utility>

#include "gli/errors.hpp"

namespace gli {

Matrix Matrix::from_rows(const std::vector<std::vector<long>>& rows) {
    Matrix m(static_cast<int>(rows.size()));
    for (int i = 0; i < m.size(); ++i) {
        if (static_cast<int>(rows[i].size()) != m.size())
            throw StructureError("matrix rows must form a square");
        for (int j = 0; j < m.size(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

bool Matrix::is_symmetric() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

Matrix Matrix::principal(const std::vector<int>& idx) const {
    Matrix m(static_cast<int>(idx.size()));
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) m.at(i, j) = at(idx[i], idx[j]);
    return m;
}

Matrix Matrix::without(int k) const {
    std::vector<int> idx;
    for (int i = 0; i < n_; ++i)
        if (i != k) idx.push_back(i);
    return principal(idx);
}

Int determinant(const Matrix& m) {
    const int n = m.size();
    if (n == 0) return 1;
    Matrix a = m;
    Int prev = 1;
    int sgn = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
            sgn = -sgn;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                // Bareiss guarantees exact divisibility by the previous pivot.
                mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a.at(k, k);
    }
    return sgn * a.at(n - 1, n - 1);
}

int rank(const Matrix& m) {
    const int n = m.size();
    std::vector<std::vector<Rat>> b(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b[i][j] = Rat(m.at(i, j));
    int r = 0;
    for (int col = 0; col < n && r < n; ++col) {
        int piv = -1;
        for (int i = r; i < n; ++i)
            if (b[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(b[piv], b[r]);
        for (int i = r + 1; i < n; ++i) {
            if (b[i][col] == 0) continue;
            Rat f = b[i][col] / b[r][col];
            for (int j = col; j < n; ++j) b[i][j] -= f * b[r][j];
        }
        ++r;
    }
    return r;
}

int nullity(const Matrix& m) { return m.size() - rank(m); }

namespace {

void sym_swap(std::vector<std::vector<Rat>>& b, int i, int j) {
    if (i == j) return;
    std::swap(b[i], b[j]);
    for (auto& row : b) std::swap(row[i], row[j]);
}

}  // namespace

int signature(const Matrix& m) {
    if (!m.is_symmetric()) throw NotSymmetric("signature: matrix is not symmetric");
    const int n = m.size();
    std::vector<std::vector<Rat>> b(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b[i][j] = Rat(m.at(i, j));

    int pos = 0, neg = 0;
    int k = 0, end = n;  // active block is rows/cols [k, end)
    while (k < end) {
        if (b[k][k] == 0) {
            int dj = -1;
            for (int j = k + 1; j < end; ++j)
                if (b[j][j] != 0) {
                    dj = j;
                    break;
                }
            if (dj >= 0) {
                sym_swap(b, k, dj);
            } else {
                int oj = -1;
                for (int j = k + 1; j < end; ++j)
                    if (b[k][j] != 0) {
                        oj = j;
                        break;
                    }
                if (oj >= 0) {
                    // All active diagonal entries vanish but b[k][oj] does not:
                    // adding row oj to row k and column oj to column k makes
                    // b[k][k] = 2*b[k][oj] != 0 (we are over Q).
                    for (int t = k; t < end; ++t) b[k][t] += b[oj][t];
                    for (int t = k; t < end; ++t) b[t][k] += b[t][oj];
                } else {
                    // Row k vanishes on the active block: a radical vector.
                    sym_swap(b, k, end - 1);
                    --end;
                    continue;
                }
            }
        }
        if (b[k][k] > 0)
            ++pos;
        else
            ++neg;
        for (int i = k + 1; i < end; ++i) {
            if (b[i][k] == 0) continue;
            Rat f = b[i][k] / b[k][k];
            for (int t = k; t < end; ++t) b[i][t] -= f * b[k][t];
            for (int t = k; t < end; ++t) b[t][i] -= f * b[t][k];
        }
        ++k;
    }
    return pos - neg;
}

int signature_minor_chain(const Matrix& m) {
    if (!m.is_symmetric()) throw NotSymmetric("signature_minor_chain: matrix is not symmetric");
    const int n = m.size();
    if (n > 12) throw IndexError("signature_minor_chain: supported only up to size 12");
    const int r = rank(m);
    if (r == 0) return 0;

    std::map<uint32_t, Int> dets;
    dets[0] = 1;
    std::function<const Int&(uint32_t)> minor_det = [&](uint32_t mask) -> const Int& {
        auto it = dets.find(mask);
        if (it != dets.end()) return it->second;
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        return dets.emplace(mask, determinant(m.principal(idx))).first->second;
    };

    // Depth-first search for a nested chain of principal minors of sizes
    // 0..r in which no two consecutive determinants vanish and the final
    // one is nonsingular. Such a chain always exists for a symmetric form.
    std::vector<uint32_t> chain;
    std::map<uint32_t, bool> dead;  // mask -> already failed from here
    std::function<bool(uint32_t, int)> dfs = [&](uint32_t mask, int depth) -> bool {
        if (depth == r) {
            if (minor_det(mask) == 0) return false;
            chain.push_back(mask);
            return true;
        }
        if (auto it = dead.find(mask); it != dead.end()) return false;
        const bool cur_zero = (minor_det(mask) == 0);
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) continue;
            uint32_t next = mask | (1u << i);
            if (cur_zero && minor_det(next) == 0) continue;
            if (dfs(next, depth + 1)) {
                chain.push_back(mask);
                return true;
            }
        }
        dead[mask] = true;
        return false;
    };
    if (!dfs(0, 0)) throw Error("signature_minor_chain: no admissible chain found");
    std::reverse(chain.begin(), chain.end());

    int sigma = 0;
    for (size_t i = 0; i + 1 < chain.size(); ++i)
        sigma += sgn(minor_det(chain[i])) * sgn(minor_det(chain[i + 1]));
    return sigma;
}

Matrix congruent(const Matrix& m, const Matrix& p) {
    if (p.size() != m.size()) throw IndexError("congruent: size mismatch");
    Int dp = determinant(p);
    if (dp != 1 && dp != -1) throw NotUnimodular("congruent: change of basis must have determinant +-1");
    const int n = m.size();
    Matrix mp(n), r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Int s = 0;
            for (int k = 0; k < n; ++k) s += m.at(i, k) * p.at(k, j);
            mp.at(i, j) = s;
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Int s = 0;
            for (int k = 0; k < n; ++k) s += p.at(k, i) * mp.at(k, j);
            r.at(i, j) = s;
        }
    return r;
}

Matrix parse_matrix(const std::string& text) {
    auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)); };
    if (std::all_of(text.begin(), text.end(), is_space)) return Matrix();

    auto split = [](const std::string& s, char sep) {
        std::vector<std::string> parts(1);
        for (char c : s) {
            if (c == sep)
                parts.emplace_back();
            else
                parts.back() += c;
        }
        return parts;
    };

    std::vector<std::vector<Int>> rows;
    for (const std::string& rowtext : split(text, ';')) {
        std::vector<Int> row;
        for (const std::string& tok : split(rowtext, ',')) {
            size_t a = 0, b = tok.size();
            while (a < b && is_space(tok[a])) ++a;
            while (b > a && is_space(tok[b - 1])) --b;
            std::string body = tok.substr(a, b - a);
            bool ok = !body.empty();
            for (size_t i = 0; ok && i < body.size(); ++i) {
                char c = body[i];
                if (i == 0 && (c == '-' || c == '+')) {
                    ok = body.size() > 1;
                    continue;
                }
                if (!std::isdigit(static_cast<unsigned char>(c))) ok = false;
            }
            if (!ok) throw SyntaxError("matrix entry is not an integer: '" + tok + "'");
            row.emplace_back(body);
        }
        if (row.empty()) throw SyntaxError("matrix has an empty row");
        rows.push_back(std::move(row));
    }
    const size_t n = rows.size();
    for (const auto& row : rows)
        if (row.size() != n) throw StructureError("matrix is not square");
    Matrix m(static_cast<int>(n));
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) m.at(i, j) = std::move(rows[i][j]);
    return m;
}

std::string format_matrix(const Matrix& m) {
    std::string out;
    for (int i = 0; i < m.size(); ++i) {
        if (i) out += ';';
        for (int j = 0; j < m.size(); ++j) {
            if (j) out += ',';
            out += m.at(i, j).get_str();
        }
    }
    return out;
}

}  // namespace gli
