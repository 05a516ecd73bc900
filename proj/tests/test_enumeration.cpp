#include "affrkl/enumeration.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace affrkl;

namespace {
RootDatum sl2() { return RootDatum::simply_connected(GCM(std::vector<IVec>{{2}})); }
RootDatum a2() { return RootDatum::simply_connected(GCM({{2, -1}, {-1, 2}})); }
}  // namespace

TEST_CASE("event times of an open segment are {0,1}") {
    auto rd1 = sl2();
    WPlusElt x(IVec{1}, WeylElt::identity(rd1));
    auto ev = event_times(open_segment(x), 6);
    CHECK(ev.times == std::vector<Rat>{Rat(0), Rat(1)});
    CHECK(ev.fold_times.empty());

    auto rd2 = a2();
    WPlusElt x2(IVec{1, 1}, WeylElt::from_word(rd2, {0, 1}));
    auto ev2 = event_times(open_segment(x2), 6);
    CHECK(ev2.times == std::vector<Rat>{Rat(0), Rat(1)});
}

TEST_CASE("event times of the coweight-changing cover path: {0, t0, 1}") {
    // SL2: y = pi^{-a^} covered by x = pi^{2a^} s_a via beta = a, n = -1;
    // t0 = |n| / (<lam,beta>+2) = 1/4
    auto rd = sl2();
    Root a = rd.simple(0);
    WPlusElt x(IVec{2}, WeylElt::reflection(rd, a));
    OpenPath seg = open_segment(x);
    // wall v(beta)[n] with v = s_a: (-a)[-1] = a[1]
    OpenPath folded = fold(seg, Rat(1, 4), AffineRoot::make(a, 1));
    CHECK(folded.end_alcove().base == Point(QVec{Rat(1)}));
    auto ev = event_times(folded, 8);
    CHECK(ev.times == std::vector<Rat>{Rat(0), Rat(1, 4), Rat(1)});
    CHECK(ev.fold_times == std::vector<Rat>{Rat(1, 4)});
    // doubling the height cutoff changes nothing
    CHECK(event_times(folded, 16).times == ev.times);
}

TEST_CASE("enumerate_paths with end alcove C_x returns only the open segment") {
    auto rd = a2();
    for (const WPlusElt& x : {WPlusElt(IVec{1, 1}, WeylElt::identity(rd)),
                              WPlusElt(IVec{1, 1}, WeylElt::from_word(rd, {0, 1})),
                              WPlusElt(IVec{1, 2}, WeylElt::simple(rd, 1))}) {
        auto res = enumerate_paths(x, x, SearchBudget{6, 3, 4096});
        REQUIRE(res.paths.size() == 1);
        CHECK(res.paths[0] == open_segment(x));
    }
}

TEST_CASE("cover targets have a unique path except the n=0 pairing-zero case") {
    auto rd = a2();
    WPlusElt x(IVec{1, 1}, WeylElt::from_word(rd, {0, 1}));
    auto covers = covers_of(x, 4);
    REQUIRE(!covers.empty());
    for (const auto& [y, cert] : covers) {
        auto res = enumerate_paths(x, y, SearchBudget{6, 3, 4096});
        long long pairing = RootDatum::pair(y.lam_pp(), cert.beta.x);
        if (cert.n == 0 && pairing == 0) {
            CHECK(res.paths.size() == 2);
        } else {
            CHECK(res.paths.size() == 1);
        }
    }
}

TEST_CASE("the pairing-zero cover yields exactly two paths") {
    // lam = (1,2) has <lam,a1> = 0: x = pi^lam s1 covers y = pi^lam e via
    // beta = a1, n = 0 = <lam,beta>; folds at t = 0 and t = 1 both land at C_y
    auto rd = a2();
    IVec lam{1, 2};
    WPlusElt x(lam, WeylElt::simple(rd, 0));
    WPlusElt y(lam, WeylElt::identity(rd));
    auto cert = is_cover(y, x, 4);
    REQUIRE(cert.has_value());
    CHECK(cert->kind == CoverKind::n_zero);
    CHECK(cert->n == 0);
    auto res = enumerate_paths(x, y, SearchBudget{6, 3, 4096});
    CHECK(res.paths.size() == 2);
    // one of them is the open segment of y (same underlying path, decorations)
    OpenPath segy = open_segment(y);
    bool found_segy = false;
    for (const auto& p : res.paths)
        if (p == segy) found_segy = true;
    CHECK(found_segy);
}

TEST_CASE("every enumerated path is Hecke and lowers along its folding data") {
    auto rd = a2();
    WPlusElt x(IVec{1, 1}, WeylElt::from_word(rd, {0, 1}));
    auto res = enumerate_paths(x, std::nullopt, SearchBudget{5, 2, 4096});
    CHECK(res.paths.size() > 3);
    for (const auto& p : res.paths) {
        CHECK(verify_hecke(p, 6));
        // chain: z_{i+1} = s_{beta_i[n_i]} z_i with each step a lowering
        WPlusElt z = x;
        for (const auto& fr : p.folding_data()) {
            CHECK(lowering_test(z, fr.ar));
            z = lower_by(z, fr.ar);
        }
        // end alcove is special and matches the chain endpoint
        CHECK(alcove_of(z) == p.end_alcove());
        // fold times are event times
        auto ev = event_times(p, 6);
        for (const auto& t : ev.fold_times)
            CHECK(std::find(ev.times.begin(), ev.times.end(), t) != ev.times.end());
    }
}

TEST_CASE("stabilization on small SL2 inputs") {
    auto rd = sl2();
    WPlusElt x(IVec{2}, WeylElt::simple(rd, 0));
    auto st = enumerate_paths_stabilized(x, std::nullopt, SearchBudget{4, 3, 4096});
    CHECK(st.complete);
}
