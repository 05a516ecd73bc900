#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "affrkl/apartment.hpp"

namespace affrkl {

struct FoldRecord {
    Rat t;
    AffineRoot ar;
};

/// Open path: a piecewise-affine -lam-path with decoration and end alcove.
/// Pieces carry the decoration representative u_k (direction of D^- on
/// (t_{k-1}, t_k]); the underlying direction of piece k is -u_k(lam^{++}), so
/// decorations determine the path. Values are immutable; foldings build new
/// paths.
class OpenPath {
public:
    OpenPath(WPlusElt x, std::vector<Rat> breaks, std::vector<Point> pts,
             std::vector<WeylElt> us, Alcove end, WeylElt u1_segment,
             std::vector<FoldRecord> folds)
        : x_(std::move(x)),
          breaks_(std::move(breaks)),
          pts_(std::move(pts)),
          us_(std::move(us)),
          end_(std::move(end)),
          u1_segment_(std::move(u1_segment)),
          folds_(std::move(folds)) {
        canonicalize();
    }

    const RootDatum& datum() const { return x_.datum(); }
    const WPlusElt& type_elt() const { return x_; }
    const std::vector<Rat>& breaks() const { return breaks_; }
    const std::vector<Point>& points() const { return pts_; }
    const std::vector<WeylElt>& piece_us() const { return us_; }
    const Alcove& end_alcove() const { return end_; }
    const std::vector<FoldRecord>& folding_data() const { return folds_; }
    int piece_count() const { return static_cast<int>(us_.size()); }

    const WeylElt& w_lam0() const { return x_.parabolic().longest(); }

    /// Decoration representative of the open segment of the same type; the
    /// local polynomial slots at t in {0,1} refer to it.
    const WeylElt& segment_u1() const { return u1_segment_; }
    /// w^x with D^+_{x,0} = a(0,-w^x) on the open segment.
    WeylElt w_x() const { return u1_segment_ * w_lam0(); }
    /// w^-_{x,1} = d^+(D^-_{x,1}, C_x) on the open segment.
    WeylElt w_minus_1() const { return u1_segment_.inverse() * x_.w(); }
    /// w^-_{x,t}: d*(C_0, D^+_{x,0}) at 0, d^+(D^-_{x,1}, C_x) at 1, w_{lam,0}
    /// in between.
    WeylElt w_minus(const Rat& t) const {
        if (t.is_zero()) return w_x();
        if (t == Rat(1)) return w_minus_1();
        return w_lam0();
    }

    QVec dir_of_piece(int k) const {
        IVec d = us_[k].act_y(x_.lam_pp());
        QVec out = to_qvec(d);
        for (auto& c : out) c = -c;
        return out;
    }

    Point at(const Rat& t) const {
        int k = piece_containing(t);
        QVec d = dir_of_piece(k);
        QVec out = pts_[k].v;
        Rat dt = t - breaks_[k];
        for (std::size_t j = 0; j < out.size(); ++j) out[j] += dt * d[j];
        return Point(std::move(out));
    }

    /// Piece whose half-open interval [t_k, t_{k+1}) contains t; governs
    /// forward data (D^+, c'_+). Requires t < 1.
    int piece_for_plus(const Rat& t) const {
        if (!(t < Rat(1))) throw Error("piece_for_plus: t must be < 1");
        for (int k = piece_count() - 1; k >= 0; --k)
            if (!(t < breaks_[k])) return k;
        throw Error("piece_for_plus: t out of range");
    }
    /// Piece whose interval (t_k, t_{k+1}] contains t; backward data. t > 0.
    int piece_for_minus(const Rat& t) const {
        if (!(Rat(0) < t)) throw Error("piece_for_minus: t must be > 0");
        for (int k = 0; k < piece_count(); ++k)
            if (t <= breaks_[k + 1]) return k;
        throw Error("piece_for_minus: t out of range");
    }

    QVec dir_plus(const Rat& t) const { return dir_of_piece(piece_for_plus(t)); }
    /// Left derivative, with the convention c'_-(0) = -lam^{++}.
    QVec dir_minus(const Rat& t) const {
        if (t.is_zero()) {
            QVec d = to_qvec(x_.lam_pp());
            for (auto& c : d) c = -c;
            return d;
        }
        return dir_of_piece(piece_for_minus(t));
    }

    /// D^+_t = a(c(t), -u_k w_{lam,0}) for t in [t_{k-1}, t_k); t < 1.
    Alcove D_plus(const Rat& t) const {
        int k = piece_for_plus(t);
        return Alcove(at(t), -1, us_[k] * w_lam0());
    }
    /// D^-_t = a(c(t), +u_k) for t in (t_{k-1}, t_k); D^-_0 = C_0.
    Alcove D_minus(const Rat& t) const {
        if (t.is_zero()) return fundamental_alcove(datum());
        int k = piece_for_minus(t);
        return Alcove(at(t), +1, us_[k]);
    }

    /// Times in (0,1) where the direction changes; with the c'_-(0)
    /// convention, 0 is a fold time iff the first direction is not -lam^{++}.
    std::vector<Rat> direction_change_times() const {
        std::vector<Rat> out;
        if (!(dir_of_piece(0) == to_neg_q(x_.lam_pp()))) out.push_back(Rat(0));
        for (int k = 0; k + 1 < piece_count(); ++k)
            if (!(us_[k] == us_[k + 1]) && !(dir_of_piece(k) == dir_of_piece(k + 1)))
                out.push_back(breaks_[k + 1]);
        return out;
    }

    /// Admissible iff every interior break changes the direction (pieces with
    /// equal direction and equal decoration are merged on construction).
    bool is_admissible() const {
        for (int k = 0; k + 1 < piece_count(); ++k)
            if (dir_of_piece(k) == dir_of_piece(k + 1)) return false;
        return true;
    }

    /// Identity of the open path: underlying path + decoration + end alcove;
    /// folding data is provenance, not identity.
    friend bool operator==(const OpenPath& a, const OpenPath& b) {
        return a.breaks_ == b.breaks_ && a.pts_ == b.pts_ && a.us_ == b.us_ && a.end_ == b.end_;
    }
    friend bool operator<(const OpenPath& a, const OpenPath& b) {
        if (a.breaks_ != b.breaks_) return a.breaks_ < b.breaks_;
        if (!(a.pts_ == b.pts_)) return a.pts_ < b.pts_;
        if (!(a.us_ == b.us_)) return a.us_ < b.us_;
        return a.end_ < b.end_;
    }

private:
    WPlusElt x_;
    std::vector<Rat> breaks_;
    std::vector<Point> pts_;
    std::vector<WeylElt> us_;
    Alcove end_;
    WeylElt u1_segment_;
    std::vector<FoldRecord> folds_;

    static QVec to_neg_q(const IVec& v) {
        QVec out = to_qvec(v);
        for (auto& c : out) c = -c;
        return out;
    }

    int piece_containing(const Rat& t) const {
        if (t < Rat(0) || Rat(1) < t) throw Error("OpenPath: time out of [0,1]");
        for (int k = piece_count() - 1; k >= 0; --k)
            if (!(t < breaks_[k])) return k;
        return 0;
    }

    void canonicalize() {
        for (int k = 0; k + 1 < piece_count();) {
            if (us_[k] == us_[k + 1]) {
                breaks_.erase(breaks_.begin() + k + 1);
                pts_.erase(pts_.begin() + k + 1);
                us_.erase(us_.begin() + k + 1);
            } else {
                ++k;
            }
        }
    }
};

/// The open segment of a spherical x = pi^lam w: path t -> -t lam, decoration
/// obtained by projecting C_x onto the backward germ at the endpoint, end
/// alcove C_x.
inline OpenPath open_segment(const WPlusElt& x) {
    x.require_spherical("open_segment");
    const RootDatum& rd = x.datum();
    bool zero = true;
    for (auto c : x.lam())
        if (c != 0) zero = false;
    if (zero) throw DegeneratePath("open_segment: lam = 0 gives a constant path");
    Alcove cx = alcove_of(x);
    QVec back = to_qvec(x.lam());  // backward germ at t=1 extends toward +lam
    Alcove d_minus_1 = project_onto_germ_at_base(rd, cx, back, +1);
    WeylElt u1 = d_minus_1.dir;
    std::vector<Rat> breaks{Rat(0), Rat(1)};
    std::vector<Point> pts{Point::origin(rd), cx.base};
    std::vector<WeylElt> us{u1};
    return OpenPath(x, std::move(breaks), std::move(pts), std::move(us), cx, u1, {});
}

/// Positive (C_infty-centrifuged) folding test: D^+_{t0} (or the end alcove
/// when t0 = 1) lies on the negative side of the wall.
inline bool is_positive_fold(const OpenPath& p, const Rat& t0, const AffineRoot& ar) {
    WallId wall = wall_of_affine_root(ar);
    if (!ar.value_at(p.at(t0).v).is_zero())
        throw NotOnWall("is_positive_fold: path point not on the wall");
    if (t0 == Rat(1)) return side_of_wall(p.end_alcove(), wall) == -1;
    return side_of_wall(p.D_plus(t0), wall) == -1;
}

/// Folding of an open path along M_{beta[n]} at time t0: reflects the path
/// tail, the decoration tail (keeping D^-_{t0}) and the end alcove. A fold at
/// t0 = 1 only changes the end alcove.
inline OpenPath fold(const OpenPath& p, const Rat& t0, const AffineRoot& ar) {
    if (t0 < Rat(0) || Rat(1) < t0) throw Error("fold: time out of [0,1]");
    if (!ar.value_at(p.at(t0).v).is_zero())
        throw NotOnWall("fold: path point not on the wall");
    const RootDatum& rd = p.datum();
    AffElt s = ar.reflection(rd);
    std::vector<FoldRecord> folds = p.folding_data();
    folds.push_back(FoldRecord{t0, ar});
    Alcove end = act(s, p.end_alcove());
    if (t0 == Rat(1))
        return OpenPath(p.type_elt(), p.breaks(), p.points(), p.piece_us(), end,
                        p.segment_u1(), std::move(folds));
    std::vector<Rat> breaks = p.breaks();
    std::vector<Point> pts = p.points();
    std::vector<WeylElt> us = p.piece_us();
    // split at t0 when it falls inside a piece
    int split = -1;
    for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
        if (breaks[k] == t0) {
            split = static_cast<int>(k);
            break;
        }
        if (breaks[k] < t0 && t0 < breaks[k + 1]) {
            breaks.insert(breaks.begin() + k + 1, t0);
            pts.insert(pts.begin() + k + 1, p.at(t0));
            us.insert(us.begin() + k + 1, us[k]);
            split = static_cast<int>(k) + 1;
            break;
        }
    }
    if (split < 0) throw Error("fold: could not locate the fold time");
    for (std::size_t k = split; k < pts.size(); ++k) pts[k] = Point(s.act_point(pts[k].v));
    for (std::size_t k = split; k < us.size(); ++k) us[k] = s.w * us[k];
    return OpenPath(p.type_elt(), std::move(breaks), std::move(pts), std::move(us), end,
                    p.segment_u1(), std::move(folds));
}

/// Chain data for a (C^infty_a, W^v_a)-chain between two alcoves based at the
/// same point: reflections along true walls through the point, each step
/// jumping from the non-C^infty side to the other.
struct ChainData {
    std::vector<AffineRoot> reflections;
};

inline std::optional<ChainData> chain_exists(const RootDatum& rd, const Point& x,
                                             const Alcove& from, const Alcove& to, long long H,
                                             int max_len = 8) {
    if (from.base != x || to.base != x) throw BaseMismatch("chain_exists: wrong base point");
    if (from.sign != to.sign) throw SignMismatch("chain_exists: signs differ");
    if (from == to) return ChainData{};
    auto lf = local_fundamental(rd, x);
    // true walls through x, with their reflections and C^infty side
    struct Step {
        AffineRoot ar;
        AffElt refl;
        WallId wall;
        int cinf_side;
    };
    std::vector<Step> steps;
    for (const auto& beta : rd.positive_roots(H)) {
        Rat lv = RootDatum::pair(x.v, beta.x);
        if (!lv.is_integer()) continue;
        AffineRoot ar = AffineRoot::make(beta, -lv.num());
        WallId wall = wall_of_affine_root(ar);
        steps.push_back(Step{ar, ar.reflection(rd), wall, side_of_wall(lf.c_infty, wall)});
    }
    std::map<Alcove, std::pair<Alcove, int>> parent;  // child -> (parent, step index)
    std::vector<Alcove> frontier{from};
    parent.emplace(from, std::make_pair(from, -1));
    for (int depth = 0; depth < max_len && !frontier.empty(); ++depth) {
        std::vector<Alcove> next;
        for (const auto& c : frontier) {
            for (std::size_t si = 0; si < steps.size(); ++si) {
                if (side_of_wall(c, steps[si].wall) == steps[si].cinf_side) continue;
                Alcove img = act(steps[si].refl, c);
                if (parent.count(img)) continue;
                parent.emplace(img, std::make_pair(c, static_cast<int>(si)));
                if (img == to) {
                    ChainData chain;
                    Alcove cur = img;
                    while (true) {
                        auto [par, idx] = parent.at(cur);
                        if (idx < 0) break;
                        chain.reflections.push_back(steps[idx].ar);
                        cur = par;
                    }
                    std::reverse(chain.reflections.begin(), chain.reflections.end());
                    return chain;
                }
                next.push_back(img);
            }
        }
        frontier = std::move(next);
    }
    return std::nullopt;
}

/// Local characterization of C_infty-Hecke open paths: chains at every
/// direction break and at t = 1 against the reference alcove determined by
/// the open segment of the type element. Independent validator for the
/// enumerator.
inline bool verify_hecke(const OpenPath& p, long long H, int max_chain = 8) {
    const RootDatum& rd = p.datum();
    if (!p.is_admissible()) return false;
    for (int k = 0; k + 1 < p.piece_count(); ++k) {
        Rat t = p.breaks()[k + 1];
        Point c = p.points()[k + 1];
        Alcove d_plus = p.D_plus(t);  // next piece
        Alcove d_plus_limit(c, -1, p.piece_us()[k] * p.w_lam0());
        if (!chain_exists(rd, c, d_plus, d_plus_limit, H, max_chain)) return false;
    }
    // t = 1: reference alcove with d^+(D^-_1, ref) = w^-_{x,1}
    Point c1 = p.points().back();
    const WeylElt& up = p.piece_us().back();
    Alcove ref(c1, +1, up * p.w_minus_1());
    if (!chain_exists(rd, c1, p.end_alcove(), ref, H, max_chain)) return false;
    return true;
}

}  // namespace affrkl
