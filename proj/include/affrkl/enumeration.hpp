#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "affrkl/paths.hpp"

namespace affrkl {

/// Cutoffs for the bounded searches: root height H, fold count F,
/// dominantization steps.
struct SearchBudget {
    long long H = 10;
    int F = 3;
    long long step_budget = 4096;

    SearchBudget doubled() const { return SearchBudget{2 * H, 2 * F, 2 * step_budget}; }
};

/// T(c): times where an affine wall separates C^infty_{c(t)} from the
/// forward germ, together with 0, 1 and the fold times T^f.
struct EventTimes {
    std::vector<Rat> times;
    std::vector<Rat> fold_times;
};

/// Wall-event times of an admissible open path, scanning wall directions of
/// height <= H. A wall through c(t) separates C^infty from c_+(t) iff
/// <c(t),g><c'_+(t),g> < 0, or <c(t),g> = 0 and <c'_+(t),g> > 0 for positive
/// g; only true (integral) walls count.
inline EventTimes event_times(const OpenPath& p, long long H) {
    std::set<Rat> times{Rat(0), Rat(1)};
    const RootDatum& rd = p.datum();
    auto pos = rd.positive_roots(H);
    for (int k = 0; k < p.piece_count(); ++k) {
        Rat t0 = p.breaks()[k], t1 = p.breaks()[k + 1];
        const Point& base = p.points()[k];
        QVec d = p.dir_of_piece(k);
        for (const auto& gamma : pos) {
            Rat slope = RootDatum::pair(d, gamma.x);
            if (slope.is_zero()) continue;  // wall parallel or containing: never separates
            Rat f0 = RootDatum::pair(base.v, gamma.x);
            // f(t) = f0 + (t - t0) slope; integer crossings within [t0, t1)
            Rat fa = f0, fb = f0 + (t1 - t0) * slope;
            Rat lo = std::min(fa, fb), hi = std::max(fa, fb);
            for (long long m = lo.ceil(); m <= hi.floor(); ++m) {
                Rat t = t0 + (Rat(m) - f0) / slope;
                if (t < t0 || !(t < t1) || !(t < Rat(1))) continue;
                bool separating = (m != 0) ? (Rat(m) * slope).sign() < 0 : slope.sign() > 0;
                if (separating) times.insert(t);
            }
        }
    }
    EventTimes out;
    out.fold_times = p.direction_change_times();
    for (const auto& t : out.fold_times) times.insert(t);
    out.times.assign(times.begin(), times.end());
    return out;
}

/// One admissible positive-fold candidate on the tail of a path.
struct FoldCandidate {
    Rat t;
    AffineRoot ar;

    friend bool operator<(const FoldCandidate& a, const FoldCandidate& b) {
        if (a.t != b.t) return a.t < b.t;
        auto [ra, na] = a.ar.positive_form();
        auto [rb, nb] = b.ar.positive_form();
        if (!(ra == rb)) return ra < rb;
        return na < nb;
    }
};

namespace detail {

/// Wall incidences (true walls only) on the final-piece tail [t_last, 1],
/// canonically ordered.
inline std::vector<FoldCandidate> fold_candidates(const OpenPath& p, const Rat& t_last,
                                                  long long H) {
    std::vector<FoldCandidate> out;
    const RootDatum& rd = p.datum();
    int k = p.piece_count() - 1;
    Rat tk = p.breaks()[k];
    const Point& base = p.points()[k];
    QVec d = p.dir_of_piece(k);
    for (const auto& gamma : rd.positive_roots(H)) {
        Rat slope = RootDatum::pair(d, gamma.x);
        Rat f0 = RootDatum::pair(base.v, gamma.x);
        if (slope.is_zero()) {
            if (!f0.is_integer()) continue;
            AffineRoot ar = AffineRoot::make(gamma, -f0.num());
            out.push_back(FoldCandidate{t_last, ar});
            out.push_back(FoldCandidate{Rat(1), ar});
            continue;
        }
        Rat fa = f0 + (t_last - tk) * slope, fb = f0 + (Rat(1) - tk) * slope;
        Rat lo = std::min(fa, fb), hi = std::max(fa, fb);
        for (long long m = lo.ceil(); m <= hi.floor(); ++m) {
            Rat t = tk + (Rat(m) - f0) / slope;
            if (t < t_last || Rat(1) < t) continue;
            out.push_back(FoldCandidate{t, AffineRoot::make(gamma, -m)});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

struct EnumerationResult {
    std::vector<OpenPath> paths;
    /// True when some branch was cut by the fold budget while positive
    /// admissible folds remained; resolved by stabilization.
    bool budget_exhausted = false;
};

/// Depth-first enumeration of the C_infty-Hecke open paths of type x
/// (obtained from the open segment by successive positive foldings at
/// non-decreasing times), optionally filtered by end alcove C_y. Output is
/// deduplicated by path identity and canonically sorted.
inline EnumerationResult enumerate_paths(const WPlusElt& x, const std::optional<WPlusElt>& y,
                                         const SearchBudget& budget) {
    EnumerationResult result;
    OpenPath seg = open_segment(x);
    std::optional<Alcove> target;
    if (y) target = alcove_of(*y);
    std::set<OpenPath> emitted;
    std::map<OpenPath, Rat> visited;  // path -> smallest t_last explored
    std::vector<OpenPath> ordered;

    struct Frame {
        OpenPath path;
        Rat t_last;
        int folds;
    };
    std::vector<Frame> stack{{seg, Rat(0), 0}};
    visited.emplace(seg, Rat(0));
    while (!stack.empty()) {
        Frame fr = std::move(stack.back());
        stack.pop_back();
        if ((!target || fr.path.end_alcove() == *target) && emitted.insert(fr.path).second)
            ordered.push_back(fr.path);
        auto cands = detail::fold_candidates(fr.path, fr.t_last, budget.H);
        for (const auto& cand : cands) {
            if (!is_positive_fold(fr.path, cand.t, cand.ar)) continue;
            OpenPath folded = fold(fr.path, cand.t, cand.ar);
            if (!folded.is_admissible()) continue;
            if (fr.folds + 1 > budget.F) {
                result.budget_exhausted = true;
                break;
            }
            auto it = visited.find(folded);
            if (it != visited.end() && !(cand.t < it->second)) continue;
            if (it != visited.end())
                it->second = cand.t;
            else
                visited.emplace(folded, cand.t);
            stack.push_back(Frame{std::move(folded), cand.t, fr.folds + 1});
        }
    }
    std::sort(ordered.begin(), ordered.end());
    result.paths = std::move(ordered);
    return result;
}

/// Stabilization protocol: rerun with doubled budgets; complete when the
/// output is unchanged.
struct StabilizedEnumeration {
    EnumerationResult base;
    bool complete = false;
};

inline StabilizedEnumeration enumerate_paths_stabilized(const WPlusElt& x,
                                                        const std::optional<WPlusElt>& y,
                                                        const SearchBudget& budget) {
    StabilizedEnumeration out;
    out.base = enumerate_paths(x, y, budget);
    EnumerationResult big = enumerate_paths(x, y, budget.doubled());
    out.complete = big.paths == out.base.paths;
    return out;
}

}  // namespace affrkl
