#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "affrkl/errors.hpp"
#include "affrkl/linalg.hpp"
#include "affrkl/rational.hpp"

namespace affrkl {

/// Generalized Cartan matrix: 2 on the diagonal, nonpositive off-diagonal
/// entries with a symmetric zero pattern.
class GCM {
public:
    explicit GCM(std::vector<IVec> entries) : a_(std::move(entries)) {
        const std::size_t n = a_.size();
        if (n == 0) throw InputError("GCM: empty matrix");
        for (const auto& row : a_)
            if (row.size() != n) throw InputError("GCM: matrix not square");
        for (std::size_t i = 0; i < n; ++i) {
            if (a_[i][i] != 2) throw InputError("GCM: diagonal entry != 2");
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                if (a_[i][j] > 0) throw InputError("GCM: positive off-diagonal entry");
                if ((a_[i][j] == 0) != (a_[j][i] == 0))
                    throw InputError("GCM: asymmetric zero pattern");
            }
        }
    }

    int size() const { return static_cast<int>(a_.size()); }
    long long entry(int i, int j) const { return a_[i][j]; }
    const std::vector<IVec>& entries() const { return a_; }

    GCM submatrix(const std::vector<int>& J) const {
        std::vector<IVec> s(J.size(), IVec(J.size()));
        for (std::size_t i = 0; i < J.size(); ++i)
            for (std::size_t j = 0; j < J.size(); ++j) s[i][j] = a_[J[i]][J[j]];
        return GCM(std::move(s));
    }

    std::size_t rank_q() const { return linalg::rank(linalg::to_qmat(a_)); }

    /// Positive diagonal D with D*A symmetric, when one exists.
    std::optional<QVec> symmetrizer() const {
        const int n = size();
        QVec d(n, Rat(0));
        std::vector<int> stack;
        for (int start = 0; start < n; ++start) {
            if (!d[start].is_zero()) continue;
            d[start] = Rat(1);
            stack.push_back(start);
            while (!stack.empty()) {
                int i = stack.back();
                stack.pop_back();
                for (int j = 0; j < n; ++j) {
                    if (a_[i][j] == 0 || i == j) continue;
                    Rat want = d[i] * Rat(a_[i][j], a_[j][i]);
                    if (d[j].is_zero()) {
                        d[j] = want;
                        stack.push_back(j);
                    } else if (d[j] != want) {
                        return std::nullopt;
                    }
                }
            }
        }
        return d;
    }

    /// Finite type <=> symmetrizable with positive-definite symmetrization
    /// (exact leading-principal-minor test).
    bool is_finite_type() const {
        auto d = symmetrizer();
        if (!d) return false;
        const int n = size();
        linalg::QMat b(n, QVec(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) b[i][j] = (*d)[i] * Rat(a_[i][j]);
        // Sylvester: all leading principal minors positive.
        for (int k = 1; k <= n; ++k) {
            linalg::QMat m(k, QVec(k));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) m[i][j] = b[i][j];
            if (det(m).sign() <= 0) return false;
        }
        return true;
    }

    bool is_connected() const {
        const int n = size();
        std::vector<bool> seen(n, false);
        std::vector<int> stack{0};
        seen[0] = true;
        int count = 1;
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < n; ++j)
                if (!seen[j] && a_[i][j] != 0) {
                    seen[j] = true;
                    ++count;
                    stack.push_back(j);
                }
        }
        return count == n;
    }

private:
    std::vector<IVec> a_;

    static Rat det(linalg::QMat m) {
        const std::size_t n = m.size();
        Rat result(1);
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t p = c;
            while (p < n && m[p][c].is_zero()) ++p;
            if (p == n) return Rat(0);
            if (p != c) {
                std::swap(m[p], m[c]);
                result = -result;
            }
            result *= m[c][c];
            Rat inv = Rat(1) / m[c][c];
            for (std::size_t i = c + 1; i < n; ++i) {
                Rat f = m[i][c] * inv;
                if (f.is_zero()) continue;
                for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
            }
        }
        return result;
    }
};

}  // namespace affrkl
