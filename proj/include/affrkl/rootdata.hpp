#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "affrkl/errors.hpp"
#include "affrkl/gcm.hpp"
#include "affrkl/linalg.hpp"
#include "affrkl/rational.hpp"

namespace affrkl {

/// A real root together with its coroot. `coeff` are the coordinates over the
/// simple roots; height is their sum (signed).
struct Root {
    IVec x;       // coordinates in X
    IVec y;       // coroot coordinates in Y
    IVec coeff;   // coordinates over the simple roots
    long long height = 0;
    bool positive = false;

    friend bool operator==(const Root& a, const Root& b) { return a.coeff == b.coeff; }
    friend bool operator!=(const Root& a, const Root& b) { return !(a == b); }
    /// Canonical order: height, then lexicographic coefficients.
    friend bool operator<(const Root& a, const Root& b) {
        if (a.height != b.height) return a.height < b.height;
        return a.coeff < b.coeff;
    }
    Root negated() const {
        Root r = *this;
        for (auto& v : r.x) v = -v;
        for (auto& v : r.y) v = -v;
        for (auto& v : r.coeff) v = -v;
        r.height = -height;
        r.positive = !positive;
        return r;
    }
};

/// Kac-Moody root datum: a GCM together with embedded simple roots in X and
/// simple coroots in Y, both free Z-modules of rank d, paired by the dot
/// product. Real roots are generated lazily per height band and cached; the
/// cache is internally synchronized and shared between copies.
class RootDatum {
public:
    static RootDatum simply_connected(const GCM& gcm) {
        const int n = gcm.size();
        const int r = static_cast<int>(gcm.rank_q());
        const int d = 2 * n - r;
        std::vector<IVec> coroots(n, IVec(d, 0));
        for (int i = 0; i < n; ++i) coroots[i][i] = 1;
        // Roots: first n coordinates are the GCM columns; the remaining d-n
        // coordinates come from unit rows chosen greedily to reach full rank.
        std::vector<IVec> roots(n, IVec(d, 0));
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) roots[j][i] = gcm.entry(i, j);
        linalg::QMat span = linalg::to_qmat(gcm.entries());  // rows span row space of A
        int extra = 0;
        for (int j = 0; j < n && extra < d - n; ++j) {
            QVec e(n, Rat(0));
            e[j] = Rat(1);
            linalg::QMat test = span;
            test.push_back(e);
            if (linalg::rank(test) > linalg::rank(span)) {
                span.push_back(e);
                roots[j][n + extra] = 1;
                ++extra;
            }
        }
        if (extra != d - n) throw Error("simply_connected: rank completion failed");
        return RootDatum(gcm, d, std::move(roots), std::move(coroots));
    }

    RootDatum(GCM gcm, int rank, std::vector<IVec> simple_roots,
              std::vector<IVec> simple_coroots)
        : gcm_(std::move(gcm)),
          rank_(rank),
          roots_(std::move(simple_roots)),
          coroots_(std::move(simple_coroots)),
          cache_(std::make_shared<Cache>()) {
        const int n = gcm_.size();
        if (static_cast<int>(roots_.size()) != n || static_cast<int>(coroots_.size()) != n)
            throw InputError("RootDatum: wrong number of simple roots/coroots");
        for (int i = 0; i < n; ++i)
            if (static_cast<int>(roots_[i].size()) != rank_ ||
                static_cast<int>(coroots_[i].size()) != rank_)
                throw InputError("RootDatum: wrong embedding dimension");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (pair(coroots_[i], roots_[j]) != gcm_.entry(i, j))
                    throw InputError("RootDatum: pairing does not match the GCM");
        if (linalg::rank(linalg::to_qmat(roots_)) != static_cast<std::size_t>(n))
            throw InputError("RootDatum: simple roots not independent");
        if (linalg::rank(linalg::to_qmat(coroots_)) != static_cast<std::size_t>(n))
            throw InputError("RootDatum: simple coroots not independent");
        // Row-reduced system for extracting simple-root coefficients.
        coeff_solver_.assign(rank_, QVec(n, Rat(0)));
        for (int r2 = 0; r2 < rank_; ++r2)
            for (int j = 0; j < n; ++j) coeff_solver_[r2][j] = Rat(roots_[j][r2]);
    }

    int rank() const { return rank_; }
    int num_simple() const { return gcm_.size(); }
    const GCM& gcm() const { return gcm_; }
    const IVec& simple_root_x(int i) const { return roots_[i]; }
    const IVec& simple_coroot_y(int i) const { return coroots_[i]; }

    static long long pair(const IVec& y, const IVec& x) {
        long long s = 0;
        for (std::size_t k = 0; k < y.size(); ++k) s += y[k] * x[k];
        return s;
    }
    static Rat pair(const QVec& y, const IVec& x) {
        Rat s(0);
        for (std::size_t k = 0; k < y.size(); ++k) s += y[k] * Rat(x[k]);
        return s;
    }

    Root simple(int i) const {
        Root r;
        r.x = roots_[i];
        r.y = coroots_[i];
        r.coeff.assign(num_simple(), 0);
        r.coeff[i] = 1;
        r.height = 1;
        r.positive = true;
        return r;
    }

    /// s_i on X-coordinates.
    template <class Vec>
    Vec simple_refl_x(int i, const Vec& x) const {
        auto c = pair_with_coroot(i, x);
        Vec out = x;
        for (int k = 0; k < rank_; ++k) out[k] = out[k] - c * scalar_of<Vec>(roots_[i][k]);
        return out;
    }
    /// s_i on Y-coordinates.
    template <class Vec>
    Vec simple_refl_y(int i, const Vec& y) const {
        auto c = pair_with_root(i, y);
        Vec out = y;
        for (int k = 0; k < rank_; ++k) out[k] = out[k] - c * scalar_of<Vec>(coroots_[i][k]);
        return out;
    }

    long long pair_with_coroot(int i, const IVec& x) const { return pair(coroots_[i], x); }
    Rat pair_with_coroot(int i, const QVec& x) const {
        Rat s(0);
        for (int k = 0; k < rank_; ++k) s += x[k] * Rat(coroots_[i][k]);
        return s;
    }
    long long pair_with_root(int i, const IVec& y) const { return pair(y, roots_[i]); }
    Rat pair_with_root(int i, const QVec& y) const { return pair(y, roots_[i]); }

    /// Simple-root coefficients of an X-vector; nullopt if not integral or not
    /// in the span.
    std::optional<IVec> coefficients(const IVec& x) const {
        QVec b(rank_);
        for (int k = 0; k < rank_; ++k) b[k] = Rat(x[k]);
        auto sol = linalg::solve(coeff_solver_, b);
        if (!sol) return std::nullopt;
        IVec c(num_simple());
        for (int j = 0; j < num_simple(); ++j) {
            if (!(*sol)[j].is_integer()) return std::nullopt;
            c[j] = (*sol)[j].num();
        }
        // verify (solver zero-fills free variables, so check exactly)
        for (int k = 0; k < rank_; ++k) {
            long long s = 0;
            for (int j = 0; j < num_simple(); ++j) s += c[j] * roots_[j][k];
            if (s != x[k]) return std::nullopt;
        }
        return c;
    }

    Root root_from_x(const IVec& x, const IVec& y) const {
        Root r;
        r.x = x;
        r.y = y;
        auto c = coefficients(x);
        if (!c) throw Error("root_from_x: vector is not in the root lattice");
        r.coeff = *c;
        r.height = 0;
        bool has_pos = false, has_neg = false;
        for (auto v : r.coeff) {
            r.height += v;
            if (v > 0) has_pos = true;
            if (v < 0) has_neg = true;
        }
        if (has_pos && has_neg) throw Error("root_from_x: mixed-sign coefficients");
        r.positive = !has_neg;
        return r;
    }

    /// All positive real roots of height <= H, canonically ordered.
    std::vector<Root> positive_roots(long long H) const {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        extend_cache(H);
        std::vector<Root> out;
        for (const auto& r : cache_->roots)
            if (r.height <= H) out.push_back(r);
        return out;
    }

    /// Positive and negative real roots of |height| <= H.
    std::vector<Root> real_roots(long long H) const {
        auto pos = positive_roots(H);
        std::vector<Root> out;
        out.reserve(2 * pos.size());
        for (const auto& r : pos) out.push_back(r.negated());
        std::reverse(out.begin(), out.end());
        for (const auto& r : pos) out.push_back(r);
        return out;
    }

    /// s_beta applied to a root; the root side moves by <beta^,gamma>, the
    /// coroot side by <gamma^,beta>.
    Root reflect_root(const Root& beta, const Root& gamma) const {
        long long c = pair(beta.y, gamma.x);
        long long cv = pair(gamma.y, beta.x);
        Root r = gamma;
        for (int k = 0; k < rank_; ++k) r.x[k] -= c * beta.x[k];
        for (int k = 0; k < rank_; ++k) r.y[k] -= cv * beta.y[k];
        for (int j = 0; j < num_simple(); ++j) r.coeff[j] -= c * beta.coeff[j];
        r.height -= c * beta.height;
        bool has_neg = false;
        for (auto v : r.coeff)
            if (v < 0) has_neg = true;
        r.positive = !has_neg;
        return r;
    }

    Root simple_refl_on_root(int i, const Root& g) const {
        return reflect_root(simple(i), g);
    }

    /// Greedy dominantization: returns the dominant representative and the
    /// word i1..ik with y = s_{i1}...s_{ik} (dominant rep). Nullopt when the
    /// step budget runs out.
    template <class Vec>
    std::optional<std::pair<Vec, std::vector<int>>> dominantize(Vec y, long long step_budget) const {
        std::vector<int> word;
        for (long long step = 0; step < step_budget; ++step) {
            int i = -1;
            for (int j = 0; j < num_simple(); ++j) {
                if (sign_of(pair_with_root(j, y)) < 0) {
                    i = j;
                    break;
                }
            }
            if (i < 0) return std::make_pair(y, word);
            y = simple_refl_y(i, y);
            word.push_back(i);
        }
        return std::nullopt;
    }

    /// W-invariant null functional delta = sum kappa_j alpha_j for connected
    /// GCMs with a one-dimensional nullspace spanned by a positive vector
    /// (affine type). Used as an outside-the-Tits-cone certificate.
    std::optional<IVec> null_root_coeffs() const {
        if (!gcm_.is_connected()) return std::nullopt;
        auto ns = linalg::nullspace(linalg::to_qmat(gcm_.entries()));
        if (ns.size() != 1) return std::nullopt;
        // scale to integers
        long long lcm = 1;
        for (const auto& v : ns[0]) lcm = lcm / std::gcd(lcm, v.den()) * v.den();
        IVec kappa(num_simple());
        bool all_pos = true, all_neg = true;
        for (int j = 0; j < num_simple(); ++j) {
            Rat s = ns[0][j] * Rat(lcm);
            kappa[j] = s.num();
            if (kappa[j] <= 0) all_pos = false;
            if (kappa[j] >= 0) all_neg = false;
        }
        if (all_neg)
            for (auto& v : kappa) v = -v;
        else if (!all_pos)
            return std::nullopt;
        return kappa;
    }

private:
    GCM gcm_;
    int rank_;
    std::vector<IVec> roots_;
    std::vector<IVec> coroots_;
    linalg::QMat coeff_solver_;

    struct Cache {
        std::mutex mutex;
        long long height_done = 0;
        std::vector<Root> roots;  // positive, canonically sorted
    };
    std::shared_ptr<Cache> cache_;

    template <class Vec>
    static auto scalar_of(long long v) {
        using S = typename Vec::value_type;
        return S(v);
    }
    static int sign_of(long long v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }
    static int sign_of(const Rat& v) { return v.sign(); }

    void extend_cache(long long H) const {
        auto& c = *cache_;
        if (H <= c.height_done) return;
        std::map<IVec, Root> known;
        for (const auto& r : c.roots) known.emplace(r.coeff, r);
        if (known.empty())
            for (int i = 0; i < num_simple(); ++i) {
                Root r = simple(i);
                known.emplace(r.coeff, r);
            }
        // closure of the simple roots under simple reflections, pruned by height
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<Root> batch;
            for (const auto& [_, r] : known)
                for (int i = 0; i < num_simple(); ++i) {
                    Root s = simple_refl_on_root(i, r);
                    if (!s.positive || s.height > H) continue;
                    if (!known.count(s.coeff)) batch.push_back(s);
                }
            for (auto& s : batch)
                if (known.emplace(s.coeff, s).second) grew = true;
        }
        c.roots.clear();
        for (const auto& [_, r] : known) c.roots.push_back(r);
        std::sort(c.roots.begin(), c.roots.end());
        c.height_done = H;
    }
};

}  // namespace affrkl
