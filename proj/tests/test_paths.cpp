#include "affrkl/paths.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace affrkl;

namespace {
RootDatum sl2() { return RootDatum::simply_connected(GCM(std::vector<IVec>{{2}})); }
RootDatum a2() { return RootDatum::simply_connected(GCM({{2, -1}, {-1, 2}})); }
}  // namespace

TEST_CASE("open segment construction") {
    auto rd1 = sl2();
    // lam = 0 is degenerate
    CHECK_THROWS_AS(open_segment(WPlusElt::identity(rd1)), DegeneratePath);

    // SL2, x = pi^{a^}: path t -> -t a^, single piece, end alcove a(-a^, +e)
    Root a = rd1.simple(0);
    WPlusElt x(a.y, WeylElt::identity(rd1));
    OpenPath seg = open_segment(x);
    CHECK(seg.piece_count() == 1);
    CHECK(seg.points()[0] == Point::origin(rd1));
    CHECK(seg.points()[1] == Point(QVec{Rat(-1)}));
    CHECK(seg.end_alcove() == alcove_of(x));
    CHECK(seg.segment_u1().is_identity());  // lam regular forces the decoration
    CHECK(seg.at(Rat(1, 2)) == Point(QVec{Rat(-1, 2)}));
    CHECK(seg.is_admissible());

    // A2, x = pi^lam s1 with lam regular: the unique alcove on the backward
    // germ is a(-lam, +e), so u1 = e and w^-_{x,1} = s1
    auto rd2 = a2();
    WPlusElt x2(IVec{1, 1}, WeylElt::simple(rd2, 0));
    OpenPath seg2 = open_segment(x2);
    CHECK(seg2.end_alcove() == alcove_of(x2));
    CHECK(seg2.segment_u1().is_identity());
    CHECK(seg2.w_minus_1() == WeylElt::simple(rd2, 0));
    CHECK(seg2.w_lam0().is_identity());

    // non-regular lam = (1,2): J = {0}, w_{lam,0} = s1
    WPlusElt x3(IVec{1, 2}, WeylElt::identity(rd2));
    OpenPath seg3 = open_segment(x3);
    CHECK(seg3.w_lam0() == WeylElt::simple(rd2, 0));
    // D^+_0 = a(0, -u1 w_{lam,0})
    Alcove dp0 = seg3.D_plus(Rat(0));
    CHECK(dp0.sign == -1);
    CHECK(dp0.dir == seg3.segment_u1() * seg3.w_lam0());
    CHECK(seg3.w_x() == seg3.segment_u1() * seg3.w_lam0());
}

TEST_CASE("folding an open path") {
    auto rd = sl2();
    Root a = rd.simple(0);
    WPlusElt x(a.y, WeylElt::identity(rd));
    OpenPath seg = open_segment(x);

    // fold at t0 = 1/2 along M_{a[1]}: tail reflected, endpoint goes to 0
    AffineRoot a1 = AffineRoot::make(a, 1);
    CHECK(is_positive_fold(seg, Rat(1, 2), a1));
    OpenPath f = fold(seg, Rat(1, 2), a1);
    CHECK(f.piece_count() == 2);
    CHECK(f.points()[1] == Point(QVec{Rat(-1, 2)}));
    CHECK(f.points()[2] == Point(QVec{Rat(0)}));
    CHECK(f.end_alcove().base == Point(QVec{Rat(0)}));
    CHECK(f.folding_data().size() == 1);
    CHECK(f.is_admissible());

    // folding twice along the same wall restores the open path
    OpenPath ff = fold(f, Rat(1, 2), a1);
    CHECK(ff == seg);

    // a fold at t0 = 1 only changes the end alcove
    AffineRoot a2r = AffineRoot::make(a, 2);  // wall through c(1) = -a^
    OpenPath endfold = fold(seg, Rat(1), a2r);
    CHECK(endfold.piece_count() == 1);
    CHECK(endfold.points() == seg.points());
    CHECK(endfold.piece_us() == seg.piece_us());
    CHECK_FALSE(endfold.end_alcove() == seg.end_alcove());

    // incidence is required
    CHECK_THROWS_AS(fold(seg, Rat(1, 3), a1), NotOnWall);
    CHECK_THROWS_AS(is_positive_fold(seg, Rat(1, 3), a1), NotOnWall);
}

TEST_CASE("positivity of folds") {
    auto rd = sl2();
    Root a = rd.simple(0);
    WPlusElt x(IVec{2}, WeylElt::identity(rd));  // pi^{2a^}: path to -2a^
    OpenPath seg = open_segment(x);
    // D^+ is on the negative side of M_{a[1]} at the crossing t = 1/4
    CHECK(is_positive_fold(seg, Rat(1, 4), AffineRoot::make(a, 1)));
    // after folding, the same wall is no longer a positive fold
    OpenPath f = fold(seg, Rat(1, 4), AffineRoot::make(a, 1));
    CHECK_FALSE(is_positive_fold(f, Rat(1, 4), AffineRoot::make(a, 1)));
    // end alcove on the positive side: not positive
    CHECK_FALSE(is_positive_fold(seg, Rat(1), AffineRoot::make(a, 4)));
}

TEST_CASE("chains between alcoves at a point") {
    auto rd = a2();
    Point origin = Point::origin(rd);
    // from == to: empty chain
    Alcove c0 = fundamental_alcove(rd);
    auto trivial = chain_exists(rd, origin, c0, c0, 4);
    REQUIRE(trivial.has_value());
    CHECK(trivial->reflections.empty());
    // single reflection with the sign condition: C_0 is opposite C^infty at 0,
    // s_{a1[0]} throws it across
    Alcove img = act(AffineRoot::make(rd.simple(0), 0).reflection(rd), c0);
    auto one = chain_exists(rd, origin, c0, img, 4);
    REQUIRE(one.has_value());
    CHECK(one->reflections.size() == 1);
    // the reverse step starts on the C^infty side: no chain within bounds
    auto back = chain_exists(rd, origin, img, c0, 4);
    CHECK_FALSE(back.has_value());
}

TEST_CASE("verify_hecke validates segments and rejects a non-positive fold") {
    auto rd = sl2();
    Root a = rd.simple(0);
    WPlusElt x(IVec{2}, WeylElt::identity(rd));
    OpenPath seg = open_segment(x);
    CHECK(verify_hecke(seg, 5));

    // positive fold keeps the Hecke property
    OpenPath pos = fold(seg, Rat(1, 4), AffineRoot::make(a, 1));
    CHECK(verify_hecke(pos, 5));

    // an end-fold along a wall where the end alcove sits on the positive side
    // is not positive; the folded path is not C_infty-Hecke
    CHECK_FALSE(is_positive_fold(seg, Rat(1), AffineRoot::make(a, 4)));
    OpenPath bad = fold(seg, Rat(1), AffineRoot::make(a, 4));
    CHECK_FALSE(verify_hecke(bad, 8));
}
