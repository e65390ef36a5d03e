#include "squareprod/square_values.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

using namespace squareprod;

namespace {

// scan oracle: every |k| <= bound with f(k) a perfect square, by direct test
std::vector<SquareValue> scan_oracle(const QuadraticParams& p, long bound) {
    std::vector<SquareValue> found;
    for (long k = -bound; k <= bound; ++k) {
        const Int value = p.eval(k);
        if (auto z = is_perfect_square(value)) found.push_back({k, *z});
    }
    return found;
}

}  // namespace

TEST_CASE("anchored solution sets") {
    SECTION("(-1,1): exactly k=0 and k=1") {
        const auto sols = solve_square_values({-1, 1});
        REQUIRE(sols.is_finite());
        REQUIRE(sols.solutions == std::vector<SquareValue>{{0, 1}, {1, 1}});
    }
    SECTION("(2,1): perfect-square polynomial") {
        const auto sols = solve_square_values({2, 1});
        REQUIRE_FALSE(sols.is_finite());
        REQUIRE(sols.half_a == 1);
        REQUIRE(sols.solutions.empty());
    }
    SECTION("(0,9): symmetric finite set") {
        const auto sols = solve_square_values({0, 9});
        REQUIRE(sols.is_finite());
        REQUIRE(sols.solutions == std::vector<SquareValue>{{-4, 5}, {0, 3}, {4, 5}});
    }
    SECTION("(-4,2): no square values at all") {
        const auto sols = solve_square_values({-4, 2});
        REQUIRE(sols.is_finite());
        REQUIRE(sols.solutions.empty());
    }
    SECTION("(0,0): f = x^2 is the degenerate class, not the a=0 divisor case") {
        const auto sols = solve_square_values({0, 0});
        REQUIRE_FALSE(sols.is_finite());
        REQUIRE(sols.half_a == 0);
    }
    SECTION("(1,0): integer roots of f give z = 0 solutions") {
        const auto sols = solve_square_values({1, 0});
        REQUIRE(sols.is_finite());
        REQUIRE(sols.solutions == std::vector<SquareValue>{{-1, 0}, {0, 0}});
    }
    SECTION("(1,-12): zero and nonzero roots mixed") {
        const auto sols = solve_square_values({1, -12});
        REQUIRE(sols.is_finite());
        REQUIRE(sols.solutions ==
                std::vector<SquareValue>{{-13, 12}, {-4, 0}, {3, 0}, {12, 12}});
    }
}

TEST_CASE("degenerate detection is exactly a^2 == 4b") {
    for (long a = -20; a <= 20; ++a) {
        for (long b = -20; b <= 20; ++b) {
            const auto sols = solve_square_values({a, b});
            REQUIRE(sols.is_finite() == (a * a != 4 * b));
        }
    }
}

TEST_CASE("soundness: every reported pair satisfies the equation") {
    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<long> coeff(-30, 30);
    for (int i = 0; i < 200; ++i) {
        const QuadraticParams p{coeff(rng), coeff(rng)};
        if (p.disc() == 0) continue;
        const auto sols = solve_square_values(p);
        REQUIRE(sols.is_finite());
        Int prev_k;
        bool have_prev = false;
        for (const SquareValue& sv : sols.solutions) {
            REQUIRE(p.eval(sv.k) == sv.z * sv.z);
            REQUIRE(sv.z >= 0);
            if (have_prev) REQUIRE(sv.k > prev_k);  // strictly sorted, no duplicates
            prev_k = sv.k;
            have_prev = true;
        }
    }
}

TEST_CASE("completeness against the scan oracle") {
    std::mt19937_64 rng(860602);
    std::uniform_int_distribution<long> coeff(-30, 30);
    int tested = 0;
    while (tested < 60) {
        const QuadraticParams p{coeff(rng), coeff(rng)};
        if (p.disc() == 0) continue;
        ++tested;
        const auto sols = solve_square_values(p);
        REQUIRE(sols.solutions == scan_oracle(p, 10'000));
        // effective bound from the completed-square factorization
        const Int abs_a = abs(p.a);
        const Int abs_target = abs(4 * p.b - p.a * p.a);
        const Int limit = (abs_a > abs_target ? abs_a : abs_target) + 2;
        for (const SquareValue& sv : sols.solutions) {
            REQUIRE(abs(sv.k) <= limit);
        }
    }
}
