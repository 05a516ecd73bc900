#pragma once

#include <optional>
#include <vector>

#include "affrkl/affine.hpp"
#include "affrkl/errors.hpp"
#include "affrkl/weyl.hpp"

namespace affrkl {

/// Point of the affine apartment A = Y (x) R, with exact rational
/// coordinates.
struct Point {
    QVec v;

    explicit Point(QVec coords) : v(std::move(coords)) {}
    static Point origin(const RootDatum& rd) { return Point(QVec(rd.rank(), Rat(0))); }
    static Point of(const IVec& y) {
        Point p{QVec()};
        p.v = to_qvec(y);
        return p;
    }
    bool is_integral() const {
        for (const auto& c : v)
            if (!c.is_integer()) return false;
        return true;
    }
    IVec as_coweight() const {
        IVec out(v.size());
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (!v[k].is_integer()) throw Error("Point: not integral");
            out[k] = v[k].num();
        }
        return out;
    }
    friend bool operator==(const Point& a, const Point& b) { return a.v == b.v; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    friend bool operator<(const Point& a, const Point& b) {
        for (std::size_t k = 0; k < a.v.size(); ++k) {
            if (a.v[k] < b.v[k]) return true;
            if (b.v[k] < a.v[k]) return false;
        }
        return false;
    }
};

/// Alcove a(x, eps w): base point, sign, vectorial direction.
struct Alcove {
    Point base;
    int sign;  // +1 or -1
    WeylElt dir;

    Alcove(Point b, int s, WeylElt d) : base(std::move(b)), sign(s), dir(std::move(d)) {}

    friend bool operator==(const Alcove& a, const Alcove& b) {
        return a.sign == b.sign && a.base == b.base && a.dir == b.dir;
    }
    friend bool operator!=(const Alcove& a, const Alcove& b) { return !(a == b); }
    friend bool operator<(const Alcove& a, const Alcove& b) {
        if (a.base != b.base) return a.base < b.base;
        if (a.sign != b.sign) return a.sign < b.sign;
        return a.dir < b.dir;
    }
};

/// Fundamental alcove C_0 = a(0, +e).
inline Alcove fundamental_alcove(const RootDatum& rd) {
    return Alcove(Point::origin(rd), +1, WeylElt::identity(rd));
}

/// C_x for x in W+: a(-lam, +w).
inline Alcove alcove_of(const WPlusElt& x) {
    QVec base = to_qvec(x.lam());
    for (auto& c : base) c = -c;
    return Alcove(Point(std::move(base)), +1, x.w());
}

/// pi^lam w . a(x, eps v) = a(w.x - lam, eps w v).
inline Alcove act(const AffElt& g, const Alcove& a) {
    return Alcove(Point(g.act_point(a.base.v)), a.sign, g.w * a.dir);
}

/// W^v-distance between same-sign alcoves at the same base point.
inline WeylElt d_eps(const Alcove& a1, const Alcove& a2) {
    if (a1.base != a2.base) throw BaseMismatch("d_eps: different base points");
    if (a1.sign != a2.sign) throw SignMismatch("d_eps: different signs");
    return a1.dir.inverse() * a2.dir;
}

/// W^v-codistance between opposite-sign alcoves at the same base point:
/// d*(a,b) = dir(a)^{-1} dir(b), and d*(a,b) = d*(b,a)^{-1}.
inline WeylElt d_star(const Alcove& a1, const Alcove& a2) {
    if (a1.base != a2.base) throw BaseMismatch("d_star: different base points");
    if (a1.sign == a2.sign) throw SignMismatch("d_star: equal signs");
    return a1.dir.inverse() * a2.dir;
}

/// Wall through a point: positive-normalized direction root and the level
/// <x,beta>; a true wall iff the level is an integer, otherwise a ghost wall.
struct WallId {
    Root beta;  // positive
    Rat level;
    bool is_true_wall;

    WallId(Root b, Rat l) : beta(std::move(b)), level(std::move(l)) {
        if (!beta.positive) {
            beta = beta.negated();
            level = -level;
        }
        is_true_wall = level.is_integer();
    }

    /// The affine form defining the positive side: for the associated
    /// positive (affine or ghost) root. Direction component only; evaluate as
    /// dirsign * (<x,beta> - level).
    int dir_sign() const { return level.sign() > 0 ? -1 : +1; }
    Root positive_direction() const { return dir_sign() > 0 ? beta : beta.negated(); }
};

/// Side of a wall an alcove lies on: +1 positive (the C_0 side for true
/// walls), -1 negative. Implements the four base-point cases.
inline int side_of_wall(const Alcove& a, const WallId& wall) {
    Rat val = RootDatum::pair(a.base.v, wall.beta.x) - wall.level;
    int s = val.sign() * wall.dir_sign();
    if (s != 0) return s;
    // base point on the wall: decided by the direction chamber
    Root d = a.dir.inverse().act(wall.positive_direction());
    bool pos = d.positive;
    if (a.sign < 0) pos = !pos;
    return pos ? +1 : -1;
}

/// Wall supporting the panel of type i of an alcove a(x, eps u): direction
/// u(alpha_i) at level <x, u(alpha_i)>.
inline WallId wall_of_panel(const Alcove& a, int i) {
    Root r = a.dir.act(a.dir.datum().simple(i));
    Rat level = RootDatum::pair(a.base.v, r.x);
    return WallId(std::move(r), std::move(level));
}

/// Thick iff the supporting wall is a true (integral-level) wall.
inline bool thick_panel_test(const Alcove& a, int i) {
    return wall_of_panel(a, i).is_true_wall;
}

/// The wall M_{beta[n]} = { <x,beta> + n = 0 } of an affine root.
inline WallId wall_of_affine_root(const AffineRoot& ar) {
    auto [b, m] = ar.positive_form();
    return WallId(b, Rat(-m));
}

/// Local fundamental data at x in the negative Tits cone: C^{++}_x =
/// a(x,+v^x) and its opposite C^infty_x = a(x,-v^x), where -x = v^x (-x)^{++}.
struct LocalFundamental {
    Alcove c_plusplus;
    Alcove c_infty;
    WeylElt v_x;
};

inline LocalFundamental local_fundamental(const RootDatum& rd, const Point& x,
                                          long long step_budget = 4096) {
    QVec neg = x.v;
    for (auto& c : neg) c = -c;
    auto res = in_tits_cone(rd, neg, step_budget);
    if (!res.v) throw InputError("local_fundamental: point not in the negative Tits cone");
    return LocalFundamental{Alcove(x, +1, *res.v), Alcove(x, -1, *res.v), *res.v};
}

/// Frame of the alcoves of a given sign containing a germ that extends in
/// direction `dir` (a vector of +-(interior Tits cone)): their directions are
/// exactly sign * (v W_J).
struct GermFrame {
    int sign;            // requested alcove sign
    WeylElt v;           // minimal rep of the direction coset
    std::vector<int> J;  // parabolic type of |dir|^{++}
    WeylElt w_long;      // longest element of W_J
};

inline GermFrame germ_frame(const RootDatum& rd, const QVec& dir, int alcove_sign,
                            long long step_budget = 4096) {
    bool zero = true;
    for (const auto& c : dir)
        if (!c.is_zero()) zero = false;
    if (zero) throw DegeneratePath("germ_frame: zero direction");
    QVec oriented = dir;
    if (alcove_sign < 0)
        for (auto& c : oriented) c = -c;
    auto res = in_tits_cone(rd, oriented, step_budget);
    if (!res.v) throw InputError("germ_frame: no alcove of this sign contains the germ");
    if (!res.spherical)
        throw NotSpherical("germ_frame: direction has infinite fixator", res.J);
    auto pd = parabolic_data_of_type(rd, res.J);
    return GermFrame{alcove_sign, *res.v, res.J, pd.longest()};
}

/// proj_{s_-(t2)}(a) for a segment s with constant derivative on [t1,t2] and
/// an alcove a = a(s(t1), eps u) dominating the forward germ s_+(t1), which
/// extends in direction `dir`: a(s(t2), -eps u w_{mu,0}).
inline Alcove project_to_germ(const RootDatum& rd, const Alcove& a, const QVec& dir,
                              const Point& target, long long step_budget = 4096) {
    GermFrame f = germ_frame(rd, dir, a.sign, step_budget);
    if (min_in_coset(a.dir, f.J) != f.v)
        throw NotDominating("project_to_germ: alcove does not dominate the germ");
    return Alcove(target, -a.sign, a.dir * f.w_long);
}

/// Projection of an alcove c onto the germ at its own base point extending in
/// direction `dir`, landing among alcoves of sign `want_sign`: minimizes the
/// distance to c (same sign) or maximizes the codistance (opposite signs).
inline Alcove project_onto_germ_at_base(const RootDatum& rd, const Alcove& c, const QVec& dir,
                                        int want_sign, long long step_budget = 4096) {
    GermFrame f = germ_frame(rd, dir, want_sign, step_budget);
    WeylElt h = min_in_coset(c.dir.inverse() * f.v, f.J);
    if (c.sign == want_sign) return Alcove(c.base, want_sign, c.dir * h);
    return Alcove(c.base, want_sign, c.dir * h * f.w_long);
}

}  // namespace affrkl
