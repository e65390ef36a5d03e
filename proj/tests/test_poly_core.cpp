#include "squareprod/poly_core.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace squareprod;

TEST_CASE("quadratic evaluation") {
    CHECK(QuadraticParams{-4, 2}.eval(4) == 2);
    CHECK(QuadraticParams{-1, 1}.eval(1) == 1);
    CHECK(QuadraticParams{0, 0}.eval(5) == 25);
    CHECK(QuadraticParams{-4, 2}.eval(12) == 98);
}

TEST_CASE("derived accessors f1 and disc") {
    CHECK(QuadraticParams{-1, 1}.f1() == 1);
    CHECK(QuadraticParams{-4, 2}.f1() == -1);
    CHECK(QuadraticParams{3, -4}.f1() == 0);
    CHECK(QuadraticParams{2, 1}.disc() == 0);
    CHECK(QuadraticParams{0, 0}.disc() == 0);
    CHECK(QuadraticParams{-1, 1}.disc() == -3);
}

TEST_CASE("quartic expansion of anchored families") {
    CHECK(quartic_from_quadratic({-1, 1}) == QuarticCoeffs{1, 0, 1, 0, 1});
    CHECK(quartic_from_quadratic({-4, 2}) == QuarticCoeffs{1, -6, 9, 0, -2});
    CHECK(quartic_from_quadratic({0, 0}) == QuarticCoeffs{1, 2, 1, 0, 0});
}

TEST_CASE("quartic Horner evaluation") {
    CHECK(QuarticCoeffs{1, 0, 1, 0, 1}.eval(1) == 3);
    CHECK(QuarticCoeffs{1, -6, 9, 0, -2}.eval(4) == 14);  // (4*1)^2 - 2 = f(4) f(5)
    CHECK(QuarticCoeffs{1, -6, 9, 0, -2}.eval(0) == -2);
    CHECK(QuarticCoeffs{1, 7, -3, 2, 11}.eval(0) == 11);
}

TEST_CASE("composition identity on anchored points") {
    CHECK(identity_check({-4, 2}, 4));
    CHECK(identity_check({7, -3}, -5));
    // at x = 0 both sides equal b * (a + b + 1)
    const QuadraticParams p{5, -9};
    CHECK(identity_check(p, 0));
    CHECK(p.eval(p.eval(0)) == p.b * p.f1());
}

TEST_CASE("composition identity on a desk-scale exhaustive grid") {
    for (long a = -10; a <= 10; ++a) {
        for (long b = -10; b <= 10; ++b) {
            const QuadraticParams p{a, b};
            for (long x = -15; x <= 15; ++x) {
                REQUIRE(identity_check(p, x));
            }
        }
    }
}

TEST_CASE("expansion matches the factored product on random parameters") {
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<long> coeff(-50, 50);
    std::uniform_int_distribution<long> point(-20, 20);
    for (int i = 0; i < 300; ++i) {
        const QuadraticParams p{coeff(rng), coeff(rng)};
        const QuarticCoeffs q = quartic_from_quadratic(p);
        REQUIRE(q.c4 == 1);
        const Int k = point(rng);
        REQUIRE(q.eval(k) == p.eval(k) * p.eval(k + 1));
    }
}

TEST_CASE("identity holds for random large coefficients") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> coeff(-1'000'000'000L, 1'000'000'000L);
    for (int i = 0; i < 100; ++i) {
        const QuadraticParams p{Int(coeff(rng)), Int(coeff(rng))};
        REQUIRE(identity_check(p, Int(coeff(rng))));
    }
}
