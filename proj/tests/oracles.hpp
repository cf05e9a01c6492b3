#pragma once

// Independent reference implementations used only by the tests. These are
// deliberately written with different algorithms than the library so that
// agreement is meaningful:
//   - cofactor_det: textbook Laplace expansion, exponential but exact
//   - eigen_signature: floating-point spectral count via Eigen

#include <Eigen/Eigenvalues>
#include <cmath>
#include <vector>

#include "gli/matrix.hpp"

namespace oracle {

inline gli::Int cofactor_det(const gli::Matrix& m) {
    const int n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m.at(0, 0);
    gli::Int acc = 0;
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        std::vector<int> idx;
        gli::Matrix sub(n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                sub.at(r - 1, cc++) = m.at(r, c);
            }
        }
        gli::Int term = m.at(0, j) * cofactor_det(sub);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

struct EigenSig {
    int signature = 0;
    int zeros = 0;
};

inline EigenSig eigen_signature(const gli::Matrix& m, double eps = 1e-9) {
    const int n = m.size();
    EigenSig out;
    if (n == 0) return out;
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = m.at(i, j).get_d();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    for (int i = 0; i < n; ++i) {
        double ev = solver.eigenvalues()(i);
        if (std::abs(ev) < eps)
            ++out.zeros;
        else
            out.signature += ev > 0 ? 1 : -1;
    }
    return out;
}

}  // namespace oracle
