#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "affrkl/errors.hpp"
#include "affrkl/rootdata.hpp"

namespace affrkl {

inline Rat rat_of(long long v) { return Rat(v); }
inline Rat rat_of(const Rat& v) { return v; }

/// Element of the vectorial Weyl group, stored as its faithful integer matrix
/// on X together with the contragredient matrix on Y (so inversion is a
/// transpose). Words are certificates, recomputed on demand; identity is the
/// matrix.
class WeylElt {
public:
    explicit WeylElt(const RootDatum& rd) : rd_(&rd) {
        const int d = rd.rank();
        a_.assign(d * d, 0);
        b_.assign(d * d, 0);
        for (int k = 0; k < d; ++k) a_[k * d + k] = b_[k * d + k] = 1;
    }
    static WeylElt identity(const RootDatum& rd) { return WeylElt(rd); }
    static WeylElt simple(const RootDatum& rd, int i) {
        WeylElt w(rd);
        const int d = rd.rank();
        const IVec& al = rd.simple_root_x(i);
        const IVec& av = rd.simple_coroot_y(i);
        for (int r = 0; r < d; ++r)
            for (int s = 0; s < d; ++s) {
                w.a_[r * d + s] -= al[r] * av[s];
                w.b_[r * d + s] -= av[r] * al[s];
            }
        return w;
    }
    static WeylElt from_word(const RootDatum& rd, const std::vector<int>& word) {
        WeylElt w(rd);
        for (int i : word) w = w * simple(rd, i);
        return w;
    }
    /// Reflection s_beta of a real root beta.
    static WeylElt reflection(const RootDatum& rd, const Root& beta) {
        WeylElt w(rd);
        const int d = rd.rank();
        for (int r = 0; r < d; ++r)
            for (int s = 0; s < d; ++s) {
                w.a_[r * d + s] -= beta.x[r] * beta.y[s];
                w.b_[r * d + s] -= beta.y[r] * beta.x[s];
            }
        return w;
    }

    const RootDatum& datum() const { return *rd_; }
    const IVec& matrix_x() const { return a_; }

    bool is_identity() const {
        const int d = rd_->rank();
        for (int r = 0; r < d; ++r)
            for (int s = 0; s < d; ++s)
                if (a_[r * d + s] != (r == s ? 1 : 0)) return false;
        return true;
    }

    friend WeylElt operator*(const WeylElt& u, const WeylElt& v) {
        const int d = u.rd_->rank();
        WeylElt w(*u.rd_);
        mul(u.a_, v.a_, w.a_, d);
        mul(u.b_, v.b_, w.b_, d);
        return w;
    }
    WeylElt inverse() const {
        WeylElt w(*rd_);
        const int d = rd_->rank();
        for (int r = 0; r < d; ++r)
            for (int s = 0; s < d; ++s) {
                w.a_[r * d + s] = b_[s * d + r];
                w.b_[r * d + s] = a_[s * d + r];
            }
        return w;
    }

    friend bool operator==(const WeylElt& u, const WeylElt& v) { return u.a_ == v.a_; }
    friend bool operator!=(const WeylElt& u, const WeylElt& v) { return !(u == v); }
    friend bool operator<(const WeylElt& u, const WeylElt& v) { return u.a_ < v.a_; }

    template <class Vec>
    Vec act_x(const Vec& x) const {
        return apply(a_, x, rd_->rank());
    }
    template <class Vec>
    Vec act_y(const Vec& y) const {
        return apply(b_, y, rd_->rank());
    }
    Root act(const Root& g) const { return rd_->root_from_x(act_x(g.x), act_y(g.y)); }

    /// Sign of w(alpha_i) without building the image root.
    bool sends_simple_negative(int i) const {
        Root img = act(rd_->simple(i));
        return !img.positive;
    }

private:
    const RootDatum* rd_;
    IVec a_, b_;

    static void mul(const IVec& l, const IVec& r, IVec& out, int d) {
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                long long s = 0;
                for (int k = 0; k < d; ++k) s += l[i * d + k] * r[k * d + j];
                out[i * d + j] = s;
            }
    }
    template <class Vec>
    static Vec apply(const IVec& m, const Vec& v, int d) {
        Vec out = v;
        for (int r = 0; r < d; ++r) {
            typename Vec::value_type s{};
            for (int k = 0; k < d; ++k) s = s + v[k] * static_cast<long long>(m[r * d + k]);
            out[r] = s;
        }
        return out;
    }
};

/// l(w s_i) < l(w), i.e. w(alpha_i) negative.
inline bool right_descent(const WeylElt& w, int i) { return w.sends_simple_negative(i); }
/// l(s_i w) < l(w), i.e. w^{-1}(alpha_i) negative.
inline bool left_descent(const WeylElt& w, int i) {
    return w.inverse().sends_simple_negative(i);
}

/// Greedy descent: strips right descents, returning the length and a reduced
/// word. Terminates for genuine group elements.
inline std::pair<int, std::vector<int>> length_and_word(WeylElt w) {
    std::vector<int> rev;
    const int n = w.datum().num_simple();
    while (!w.is_identity()) {
        int i = 0;
        while (i < n && !right_descent(w, i)) ++i;
        if (i == n) throw Error("length_and_word: no descent on a non-identity element");
        w = w * WeylElt::simple(w.datum(), i);
        rev.push_back(i);
    }
    std::reverse(rev.begin(), rev.end());
    return {static_cast<int>(rev.size()), rev};
}

inline int length(const WeylElt& w) { return length_and_word(w).first; }

/// Inv(w) = {positive alpha : w(alpha) < 0}, read off a reduced word. Exact,
/// no height cutoff.
inline std::vector<Root> inversion_set(const WeylElt& w) {
    const RootDatum& rd = w.datum();
    auto [len, word] = length_and_word(w);
    // Inv(w) = { s_{i_len}...s_{i_{j+1}}(alpha_{i_j}) : j }, innermost first
    std::vector<Root> out;
    for (int j = 0; j < len; ++j) {
        Root g = rd.simple(word[j]);
        for (int m = j + 1; m < len; ++m) g = rd.simple_refl_on_root(word[m], g);
        out.push_back(g);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Subword criterion via the standard right-descent recursion.
inline bool bruhat_leq_v(const WeylElt& u, const WeylElt& w) {
    if (u.is_identity()) return true;
    if (u == w) return true;
    auto lu = length_and_word(u).first;
    auto [lw, ww] = length_and_word(w);
    if (lu > lw) return false;
    if (lw == 0) return false;
    int i = ww.back();
    WeylElt si = WeylElt::simple(u.datum(), i);
    WeylElt wsi = w * si;
    if (right_descent(u, i)) return bruhat_leq_v(u * si, wsi);
    return bruhat_leq_v(u, wsi);
}

/// Fixator data of a dominant coweight: type J, sphericity and (when W_J is
/// finite) its longest element.
struct ParabolicData {
    std::vector<int> J;
    bool is_spherical = false;
    std::optional<WeylElt> w_long;

    const WeylElt& longest() const {
        if (!w_long) throw NotSpherical("ParabolicData: W_J is infinite", J);
        return *w_long;
    }
};

inline ParabolicData parabolic_data_of_type(const RootDatum& rd, std::vector<int> J) {
    ParabolicData pd;
    pd.J = std::move(J);
    pd.is_spherical = pd.J.empty() || rd.gcm().submatrix(pd.J).is_finite_type();
    if (pd.is_spherical) {
        // longest-element search by the exchange condition
        WeylElt w = WeylElt::identity(rd);
        const int guard = 1 << 20;
        int steps = 0;
        bool grew = true;
        while (grew) {
            grew = false;
            for (int j : pd.J)
                if (!right_descent(w, j)) {
                    w = w * WeylElt::simple(rd, j);
                    grew = true;
                    if (++steps > guard) throw Error("parabolic_data: longest element runaway");
                    break;
                }
        }
        pd.w_long = w;
    }
    return pd;
}

inline ParabolicData parabolic_data(const RootDatum& rd, const IVec& lambda_dominant) {
    std::vector<int> J;
    for (int i = 0; i < rd.num_simple(); ++i) {
        long long p = rd.pair_with_root(i, lambda_dominant);
        if (p < 0) throw InputError("parabolic_data: coweight is not dominant");
        if (p == 0) J.push_back(i);
    }
    return parabolic_data_of_type(rd, std::move(J));
}

enum class ConeStatus {
    Interior,       // spherical: finite stabilizer
    DominantOrbit,  // in the Tits cone with infinite stabilizer
    Outside
};

template <class Vec>
struct ConeResult {
    ConeStatus status = ConeStatus::Outside;
    Vec dominant;              // y^{++} (when inside)
    std::optional<WeylElt> v;  // minimal v with y = v . y^{++}
    std::vector<int> J;        // fixator type of y^{++}
    bool spherical = false;
};

/// Membership of y in the Tits cone with witness: greedy dominantization
/// under a step budget, preceded by the affine null-root certificate which
/// gives definite "outside" answers when it applies.
template <class Vec>
ConeResult<Vec> in_tits_cone(const RootDatum& rd, const Vec& y, long long step_budget = 4096) {
    ConeResult<Vec> out;
    if (auto kappa = rd.null_root_coeffs()) {
        // delta = sum kappa_j alpha_j is W-invariant; <y,delta> < 0 is outside,
        // and <y,delta> = 0 forces y into the radical.
        Rat val(0);
        bool radical = true;
        for (int j = 0; j < rd.num_simple(); ++j) {
            Rat pj = rat_of(rd.pair_with_root(j, y));
            val += Rat((*kappa)[j]) * pj;
            if (!pj.is_zero()) radical = false;
        }
        if (val.sign() < 0) return out;
        if (val.is_zero() && !radical) return out;
    }
    auto dom = rd.dominantize(y, step_budget);
    if (!dom) throw CutoffExceeded("in_tits_cone: dominantization did not settle", "step_budget");
    out.dominant = dom->first;
    WeylElt v = WeylElt::from_word(rd, dom->second);
    for (int i = 0; i < rd.num_simple(); ++i)
        if (rat_of(rd.pair_with_root(i, out.dominant)).is_zero()) out.J.push_back(i);
    // minimal coset representative: strip right descents lying in J
    bool moved = true;
    while (moved) {
        moved = false;
        for (int j : out.J)
            if (right_descent(v, j)) {
                v = v * WeylElt::simple(rd, j);
                moved = true;
            }
    }
    out.v = v;
    out.spherical = out.J.empty() || rd.gcm().submatrix(out.J).is_finite_type();
    out.status = out.spherical ? ConeStatus::Interior : ConeStatus::DominantOrbit;
    return out;
}

/// Minimal-length v with lam = v . lam^{++}; lam must lie in the Tits cone or
/// its negative.
template <class Vec>
std::pair<WeylElt, Vec> min_coset_rep(const RootDatum& rd, const Vec& lam,
                                      long long step_budget = 4096) {
    std::optional<ConeResult<Vec>> direct;
    try {
        direct = in_tits_cone(rd, lam, step_budget);
    } catch (const CutoffExceeded&) {
    }
    if (direct && direct->v) return {*direct->v, direct->dominant};
    Vec neg = lam;
    for (auto& c : neg) c = -c;
    auto opp = in_tits_cone(rd, neg, step_budget);
    if (opp.v) {
        Vec dom = opp.dominant;
        for (auto& c : dom) c = -c;
        return {*opp.v, dom};
    }
    throw CutoffExceeded("min_coset_rep: coweight outside both Tits cones", "step_budget");
}

/// Minimal representative of the coset g W_J (strip right descents in J).
inline WeylElt min_in_coset(WeylElt g, const std::vector<int>& J) {
    bool moved = true;
    while (moved) {
        moved = false;
        for (int j : J)
            if (right_descent(g, j)) {
                g = g * WeylElt::simple(g.datum(), j);
                moved = true;
            }
    }
    return g;
}

}  // namespace affrkl
