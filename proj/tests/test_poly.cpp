#include "affrkl/poly.hpp"
#include "affrkl/rational.hpp"

#include <random>

#include <catch2/catch_amalgamated.hpp>

using affrkl::IntPoly;
using affrkl::Rat;

TEST_CASE("rational arithmetic is exact and normalized") {
    Rat a(1, 3), b(1, 6);
    CHECK(a + b == Rat(1, 2));
    CHECK(a - b == Rat(1, 6));
    CHECK(a * b == Rat(1, 18));
    CHECK(a / b == Rat(2));
    CHECK(Rat(-2, -4) == Rat(1, 2));
    CHECK(Rat(2, -4) == Rat(-1, 2));
    CHECK(Rat(7, 2).floor() == 3);
    CHECK(Rat(-7, 2).floor() == -4);
    CHECK(Rat(-7, 2).ceil() == -3);
    CHECK(Rat(5, 1).is_integer());
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(Rat(1, 3).str() == "1/3");
    CHECK_THROWS(Rat(1, 0));
}

TEST_CASE("polynomial ring laws and canonical form") {
    IntPoly x = IntPoly::X();
    IntPoly p = x * x - IntPoly(2) * x + IntPoly(1);
    CHECK(p == IntPoly::X_minus_1() * IntPoly::X_minus_1());
    CHECK(p.degree() == 2);
    CHECK(p.str() == "X^2 - 2*X + 1");
    CHECK((p - p).is_zero());
    CHECK((p - p).degree() == -1);
    CHECK(p.eval(3) == 4);
    CHECK(IntPoly::X_minus_1().pow(3).eval(2) == 1);
    CHECK(IntPoly().str() == "0");
    CHECK(IntPoly(7).str() == "7");
    CHECK((IntPoly(0) + IntPoly()).coeffs().empty());
}

TEST_CASE("evaluation is a ring homomorphism at sampled points") {
    std::mt19937 rng(20240901);
    std::uniform_int_distribution<int> coeff(-4, 4), deg(0, 5);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<long long> ca(deg(rng) + 1), cb(deg(rng) + 1);
        for (auto& c : ca) c = coeff(rng);
        for (auto& c : cb) c = coeff(rng);
        IntPoly a{ca}, b{cb};
        for (long long q : {-2LL, 0LL, 1LL, 2LL, 5LL}) {
            CHECK((a + b).eval(q) == a.eval(q) + b.eval(q));
            CHECK((a * b).eval(q) == a.eval(q) * b.eval(q));
        }
    }
}
