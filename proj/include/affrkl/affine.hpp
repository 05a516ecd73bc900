#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "affrkl/errors.hpp"
#include "affrkl/weyl.hpp"

namespace affrkl {

/// Element of Y x| W^v, written pi^mu w. Not restricted to the semigroup W+;
/// affine reflections live here.
struct AffElt {
    IVec mu;
    WeylElt w;

    AffElt(IVec mu_, WeylElt w_) : mu(std::move(mu_)), w(std::move(w_)) {}
    static AffElt identity(const RootDatum& rd) {
        return AffElt(IVec(rd.rank(), 0), WeylElt::identity(rd));
    }
    static AffElt translation(const RootDatum& rd, IVec mu) {
        return AffElt(std::move(mu), WeylElt::identity(rd));
    }

    const RootDatum& datum() const { return w.datum(); }

    /// pi^lam u . pi^mu v = pi^{lam + u mu} uv
    friend AffElt operator*(const AffElt& a, const AffElt& b) {
        IVec shifted = a.w.act_y(b.mu);
        for (std::size_t k = 0; k < shifted.size(); ++k) shifted[k] += a.mu[k];
        return AffElt(std::move(shifted), a.w * b.w);
    }
    AffElt inverse() const {
        WeylElt wi = w.inverse();
        IVec m = wi.act_y(mu);
        for (auto& c : m) c = -c;
        return AffElt(std::move(m), wi);
    }
    friend bool operator==(const AffElt& a, const AffElt& b) {
        return a.mu == b.mu && a.w == b.w;
    }
    friend bool operator!=(const AffElt& a, const AffElt& b) { return !(a == b); }
    friend bool operator<(const AffElt& a, const AffElt& b) {
        if (a.mu != b.mu) return a.mu < b.mu;
        return a.w < b.w;
    }

    /// Affine action on the apartment: pi^mu w . x = -mu + w(x).
    QVec act_point(const QVec& x) const {
        QVec out = w.act_y(x);
        for (std::size_t k = 0; k < out.size(); ++k) out[k] -= Rat(mu[k]);
        return out;
    }
};

/// Positive affine root beta[n], stored normalized: n > 0 with beta of either
/// sign, or n = 0 with beta positive. beta[n] = (-beta)[-n].
struct AffineRoot {
    Root beta;
    long long n = 0;

    static AffineRoot make(const Root& beta, long long n) {
        AffineRoot ar;
        if (n > 0 || (n == 0 && beta.positive)) {
            ar.beta = beta;
            ar.n = n;
        } else {
            ar.beta = beta.negated();
            ar.n = -n;
        }
        return ar;
    }

    /// The pair (beta', n') with beta' positive (the paper's beta[n] with
    /// beta' in Phi+): for stored (b,m) with b negative this is (-b, -m).
    std::pair<Root, long long> positive_form() const {
        if (beta.positive) return {beta, n};
        return {beta.negated(), -n};
    }

    /// s_{beta[n]} = pi^{n beta^} s_beta.
    AffElt reflection(const RootDatum& rd) const {
        IVec mu(rd.rank());
        for (int k = 0; k < rd.rank(); ++k) mu[k] = n * beta.y[k];
        return AffElt(std::move(mu), WeylElt::reflection(rd, beta));
    }

    /// Value of the affine form <x, beta> + n at a point.
    Rat value_at(const QVec& x) const {
        Rat v(n);
        for (std::size_t k = 0; k < x.size(); ++k) v += x[k] * Rat(beta.x[k]);
        return v;
    }

    friend bool operator==(const AffineRoot& a, const AffineRoot& b) {
        return a.n == b.n && a.beta == b.beta;
    }
    friend bool operator<(const AffineRoot& a, const AffineRoot& b) {
        if (!(a.beta == b.beta)) return a.beta < b.beta;
        return a.n < b.n;
    }

    std::string str() const {
        auto [b, m] = positive_form();
        std::string s = "(";
        for (std::size_t j = 0; j < b.coeff.size(); ++j) {
            if (j) s += ",";
            s += std::to_string(b.coeff[j]);
        }
        s += ")[" + std::to_string(m) + "]";
        return s;
    }
};

/// pi^lam w . (beta,n) = (w beta, n + <lam, w beta>); not re-normalized, the
/// sign of the output is the point.
inline std::pair<Root, long long> act_on_affine_root(const AffElt& x,
                                                     const std::pair<Root, long long>& ar) {
    Root wb = x.w.act(ar.first);
    long long n = ar.second + RootDatum::pair(x.mu, wb.x);
    return {wb, n};
}

/// Element of the affine Weyl semigroup W+ = Y+ x| W^v with its cone data
/// cached at construction (lam^{++}, minimal v^lam, fixator type).
class WPlusElt {
public:
    WPlusElt(IVec lam, WeylElt w, long long step_budget = 4096)
        : g_(std::move(lam), std::move(w)), v_lam_(WeylElt::identity(g_.w.datum())) {
        auto res = in_tits_cone(datum(), g_.mu, step_budget);
        if (res.status == ConeStatus::Outside || !res.v)
            throw InputError("WPlusElt: coweight is not in the Tits cone");
        lam_pp_ = res.dominant;
        v_lam_ = *res.v;
        J_ = res.J;
        spherical_ = res.spherical;
    }
    static WPlusElt identity(const RootDatum& rd) {
        return WPlusElt(IVec(rd.rank(), 0), WeylElt::identity(rd));
    }
    static WPlusElt from_aff(const AffElt& g, long long step_budget = 4096) {
        return WPlusElt(g.mu, g.w, step_budget);
    }

    const RootDatum& datum() const { return g_.w.datum(); }
    const AffElt& aff() const { return g_; }
    const IVec& lam() const { return g_.mu; }
    const WeylElt& w() const { return g_.w; }
    const IVec& lam_pp() const { return lam_pp_; }
    const WeylElt& v_lam() const { return v_lam_; }
    const std::vector<int>& fixator_type() const { return J_; }
    bool spherical() const { return spherical_; }

    void require_spherical(const char* who) const {
        if (!spherical_) throw NotSpherical(std::string(who) + ": element is not spherical", J_);
    }

    const ParabolicData& parabolic() const {
        if (!pd_) pd_ = parabolic_data(datum(), lam_pp_);
        return *pd_;
    }

    friend WPlusElt operator*(const WPlusElt& a, const WPlusElt& b) {
        return WPlusElt::from_aff(a.g_ * b.g_);
    }
    friend bool operator==(const WPlusElt& a, const WPlusElt& b) { return a.g_ == b.g_; }
    friend bool operator!=(const WPlusElt& a, const WPlusElt& b) { return !(a == b); }
    friend bool operator<(const WPlusElt& a, const WPlusElt& b) { return a.g_ < b.g_; }

    std::string str() const {
        std::string s = "pi^(";
        for (std::size_t k = 0; k < g_.mu.size(); ++k) {
            if (k) s += ",";
            s += std::to_string(g_.mu[k]);
        }
        s += ")";
        auto [len, word] = length_and_word(g_.w);
        (void)len;
        if (word.empty()) {
            s += " e";
        } else {
            s += " s";
            for (std::size_t k = 0; k < word.size(); ++k) {
                if (k) s += ".s";
                s += std::to_string(word[k] + 1);
            }
        }
        return s;
    }

private:
    AffElt g_;
    IVec lam_pp_;
    WeylElt v_lam_;
    std::vector<int> J_;
    bool spherical_ = false;
    mutable std::optional<ParabolicData> pd_;
};

/// Muthiah's elementary lowering criterion: s_{beta[n]} x < x iff
/// x^{-1}(beta[n]) is not a positive affine root; explicitly
/// |n| < sgn(n)<lam,beta> or (|n| = sgn(n)<lam,beta> and sgn(n) w^{-1}beta < 0),
/// with (beta,n) in the beta-positive form. When true, s_{beta[n]} x lies in W+.
inline bool lowering_test(const WPlusElt& x, const AffineRoot& ar) {
    auto [beta, n] = ar.positive_form();
    long long p = RootDatum::pair(x.lam(), beta.x);
    long long sgn = n >= 0 ? 1 : -1;
    long long an = n >= 0 ? n : -n;
    if (an < sgn * p) return true;
    if (an == sgn * p) {
        Root wb = x.w().inverse().act(beta);
        bool pos = wb.positive;
        return sgn > 0 ? !pos : pos;
    }
    return false;
}

/// The lowered element s_{beta[n]} x; call only after lowering_test.
inline WPlusElt lower_by(const WPlusElt& x, const AffineRoot& ar) {
    return WPlusElt::from_aff(ar.reflection(x.datum()) * x.aff());
}

/// All affine roots beta[n] with s_{beta[n]} x < x, for beta of height <= H.
/// Finite: |n| is bounded by |<lam,beta>| + 1 per root.
inline std::vector<AffineRoot> lowering_roots(const WPlusElt& x, long long H) {
    std::vector<AffineRoot> out;
    const RootDatum& rd = x.datum();
    for (const auto& beta : rd.positive_roots(H)) {
        long long p = RootDatum::pair(x.lam(), beta.x);
        long long lo = std::min<long long>(-1, p), hi = std::max<long long>(1, p);
        for (long long n = lo; n <= hi; ++n) {
            AffineRoot ar = AffineRoot::make(beta, n);
            if (lowering_test(x, ar)) out.push_back(ar);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end(),
                          [](const AffineRoot& a, const AffineRoot& b) { return a == b; }),
              out.end());
    return out;
}

enum class SearchVerdict { Proven, NotFoundWithinBounds };

/// Bounded downward search for y <= x in the affine Bruhat order: DFS over
/// lowering chains from x, cut by root height H and chain depth.
inline SearchVerdict leq_within(const WPlusElt& y, const WPlusElt& x, long long H, int depth) {
    if (y == x) return SearchVerdict::Proven;
    if (depth <= 0) return SearchVerdict::NotFoundWithinBounds;
    std::set<AffElt> seen;
    std::vector<std::pair<WPlusElt, int>> stack{{x, depth}};
    seen.insert(x.aff());
    while (!stack.empty()) {
        auto [z, d] = stack.back();
        stack.pop_back();
        for (const auto& ar : lowering_roots(z, H)) {
            WPlusElt nz = lower_by(z, ar);
            if (nz == y) return SearchVerdict::Proven;
            if (d > 1 && seen.insert(nz.aff()).second) stack.push_back({nz, d - 1});
        }
    }
    return SearchVerdict::NotFoundWithinBounds;
}

/// Quantum root test: <beta^, gamma> = 1 for every gamma in Inv(s_beta)
/// except beta itself. Inv(s_beta) is read off a reduced word, so the test is
/// exact; H is only a sanity bound.
inline bool is_quantum_root(const RootDatum& rd, const Root& beta_pos, long long /*H*/ = 0) {
    if (!beta_pos.positive) throw InputError("is_quantum_root: root must be positive");
    WeylElt s = WeylElt::reflection(rd, beta_pos);
    for (const auto& gamma : inversion_set(s)) {
        if (gamma == beta_pos) continue;
        if (RootDatum::pair(beta_pos.y, gamma.x) != 1) return false;
    }
    return true;
}

/// Almost-dominance: <mu + 0, tau> >= -1 for all positive tau. Exact whenever
/// mu lies in +-Y+ (negative pairings only occur on the finite inversion set
/// of v^mu); otherwise a band check up to H, inconclusive when it passes.
inline bool is_almost_dominant(const RootDatum& rd, const IVec& mu, long long H,
                               long long step_budget = 4096) {
    std::optional<ConeResult<IVec>> res;
    try {
        res = in_tits_cone(rd, mu, step_budget);
    } catch (const CutoffExceeded&) {
    }
    if (res && res->v) {
        for (const auto& tau : inversion_set(res->v->inverse()))
            if (RootDatum::pair(mu, tau.x) < -1) return false;
        return true;
    }
    // mu not visibly in Y+: check the band, then refuse to extrapolate
    bool neg_cone = true;
    for (int i = 0; i < rd.num_simple(); ++i)
        if (rd.pair_with_root(i, mu) > 0) neg_cone = false;
    for (const auto& tau : rd.positive_roots(H))
        if (RootDatum::pair(mu, tau.x) < -1) return false;
    if (neg_cone && rd.gcm().is_finite_type()) return true;
    throw CutoffInconclusive("is_almost_dominant: band passed but no certificate");
}

enum class CoverKind { n_zero, n_pairing, n_minus_one, n_pairing_plus_one };

inline const char* to_string(CoverKind k) {
    switch (k) {
        case CoverKind::n_zero: return "n_zero";
        case CoverKind::n_pairing: return "n_pairing";
        case CoverKind::n_minus_one: return "n_minus_one";
        case CoverKind::n_pairing_plus_one: return "n_pairing_plus_one";
    }
    return "?";
}

/// Certificate for y covered by x: y = pi^{v lam} w, x = s_{v(beta)[n]} y with
/// lam dominant, v minimal, beta positive and n in {0, <lam,beta>, -1,
/// <lam,beta>+1} per kind.
struct CoverCertificate {
    CoverKind kind;
    Root beta;
    long long n = 0;
    WeylElt v;
    WeylElt w;

    CoverCertificate(CoverKind k, Root b, long long n_, WeylElt v_, WeylElt w_)
        : kind(k), beta(std::move(b)), n(n_), v(std::move(v_)), w(std::move(w_)) {}
};

namespace detail {

/// Classify a verified cover pair into the four-case normal form.
inline CoverCertificate classify_cover(const WPlusElt& y, const AffineRoot& ar) {
    const RootDatum& rd = y.datum();
    const WeylElt& v = y.v_lam();
    auto [b, m] = ar.positive_form();  // wall b[m] with b positive, m signed
    Root beta = v.inverse().act(b);
    long long n = m;
    if (!beta.positive) {
        beta = beta.negated();
        n = -m;
    }
    long long p = RootDatum::pair(y.lam_pp(), beta.x);
    CoverKind kind;
    if (n == 0)
        kind = CoverKind::n_zero;
    else if (n == -1)
        kind = CoverKind::n_minus_one;
    else if (n == p)
        kind = CoverKind::n_pairing;
    else if (n == p + 1)
        kind = CoverKind::n_pairing_plus_one;
    else
        throw Error("cover classification: n = " + std::to_string(n) + " with <lam,beta> = " +
                    std::to_string(p) + " is outside the four-case classification");
    (void)rd;
    return CoverCertificate(kind, beta, n, v, y.w());
}

}  // namespace detail

/// Is y covered by x? Checks that y is one lowering step below x and that no
/// other one-step descendant of x lies above y (bounded search). Returns the
/// classified certificate.
inline std::optional<CoverCertificate> is_cover(const WPlusElt& y, const WPlusElt& x,
                                                long long H, int depth = 6) {
    if (y == x) return std::nullopt;
    // the connecting reflection, if any: r = y x^{-1}
    AffElt r = y.aff() * x.aff().inverse();
    if (r.w.is_identity()) return std::nullopt;
    // r must be s_{b[m]}: vectorial part a reflection s_b, translation m b^
    std::optional<AffineRoot> found;
    for (const auto& b : x.datum().positive_roots(H)) {
        if (r.w != WeylElt::reflection(x.datum(), b)) continue;
        // mu = m * b^
        std::optional<long long> m;
        bool ok = true;
        for (int k = 0; k < x.datum().rank(); ++k) {
            if (b.y[k] == 0) {
                if (r.mu[k] != 0) ok = false;
            } else if (r.mu[k] % b.y[k] != 0) {
                ok = false;
            } else {
                long long q = r.mu[k] / b.y[k];
                if (m && *m != q) ok = false;
                m = q;
            }
        }
        if (!ok || !m) continue;
        found = AffineRoot::make(b, *m);
        break;
    }
    if (!found) return std::nullopt;
    if (!lowering_test(x, *found)) return std::nullopt;
    if (lower_by(x, *found) != y) return std::nullopt;
    // no intermediate: no other one-step descendant of x dominates y
    for (const auto& ar : lowering_roots(x, H)) {
        WPlusElt z = lower_by(x, ar);
        if (z == y) continue;
        if (leq_within(y, z, H, depth - 1) == SearchVerdict::Proven) return std::nullopt;
    }
    return detail::classify_cover(y, *found);
}

/// All covers of x reachable with wall directions of height <= H, each with
/// its certificate. Kinds n_minus_one / n_pairing_plus_one are additionally
/// checked against the quantum-root and almost-dominance conditions.
inline std::vector<std::pair<WPlusElt, CoverCertificate>> covers_of(const WPlusElt& x,
                                                                    long long H,
                                                                    int depth = 6) {
    std::vector<std::pair<WPlusElt, CoverCertificate>> out;
    auto low = lowering_roots(x, H);
    std::vector<WPlusElt> lowered;
    lowered.reserve(low.size());
    for (const auto& ar : low) lowered.push_back(lower_by(x, ar));
    for (std::size_t i = 0; i < low.size(); ++i) {
        const WPlusElt& y = lowered[i];
        bool intermediate = false;
        for (std::size_t j = 0; j < low.size() && !intermediate; ++j) {
            if (lowered[j] == y) continue;
            if (leq_within(y, lowered[j], H, depth - 1) == SearchVerdict::Proven)
                intermediate = true;
        }
        if (intermediate) continue;
        CoverCertificate cert = detail::classify_cover(y, low[i]);
        if (cert.kind == CoverKind::n_minus_one || cert.kind == CoverKind::n_pairing_plus_one) {
            if (!is_quantum_root(x.datum(), cert.beta))
                throw Error("covers_of: coweight-changing cover without a quantum root");
            IVec mu = y.lam_pp();
            for (int k = 0; k < x.datum().rank(); ++k) mu[k] += cert.beta.y[k];
            if (!is_almost_dominant(x.datum(), mu, H))
                throw Error("covers_of: coweight-changing cover without almost-dominance");
        }
        out.emplace_back(y, cert);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

}  // namespace affrkl
