#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "affrkl/rational.hpp"

namespace affrkl::linalg {

using QMat = std::vector<QVec>;  // row-major

inline QMat to_qmat(const std::vector<IVec>& rows) {
    QMat m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) m[i] = to_qvec(rows[i]);
    return m;
}

/// Row-reduce in place; returns pivot columns.
inline std::vector<std::size_t> rref(QMat& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rat inv = Rat(1) / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Rat f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(QMat m) { return rref(m).size(); }

/// Solve M x = b exactly; nullopt if inconsistent. If the system is
/// underdetermined the free variables are set to zero.
inline std::optional<QVec> solve(const QMat& M, const QVec& b) {
    if (M.empty()) return QVec{};
    std::size_t rows = M.size(), cols = M[0].size();
    QMat aug(rows, QVec(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug[i][j] = M[i][j];
        aug[i][cols] = b[i];
    }
    auto pivots = rref(aug);
    QVec x(cols, Rat(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == cols) return std::nullopt;  // 0 = nonzero row
        x[pivots[r]] = aug[r][cols];
    }
    for (std::size_t r = pivots.size(); r < rows; ++r)
        if (!aug[r][cols].is_zero()) return std::nullopt;
    return x;
}

/// Basis of the right nullspace of M.
inline std::vector<QVec> nullspace(QMat M) {
    if (M.empty()) return {};
    std::size_t cols = M[0].size();
    auto pivots = rref(M);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<QVec> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        QVec v(cols, Rat(0));
        v[f] = Rat(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -M[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace affrkl::linalg
