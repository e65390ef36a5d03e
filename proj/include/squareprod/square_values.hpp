#pragma once

#include "squareprod/exact_arith.hpp"
#include "squareprod/poly_core.hpp"

#include <algorithm>
#include <vector>

namespace squareprod {

/// One solution of k^2 + a k + b = z^2, with z normalized nonnegative.
struct SquareValue {
    Int k;
    Int z;

    bool operator==(const SquareValue&) const = default;
};

/// Complete classification of the square values of a monic quadratic.
///
/// finite: `solutions` lists every integer k with f(k) a perfect square,
/// sorted by k ascending. infinite_square_poly: a^2 == 4b, f(x) = (x + half_a)^2,
/// every value is a square.
struct SquareValueSolutions {
    enum class Kind { finite, infinite_square_poly };

    Kind kind;
    std::vector<SquareValue> solutions;
    Int half_a;  // meaningful only in the infinite_square_poly case

    bool is_finite() const { return kind == Kind::finite; }
};

/// Solves k^2 + a k + b = z^2 over the integers, completely.
///
/// The substitution u = 2k + a, v = 2z turns the equation into
/// (v - u)(v + u) = 4b - a^2. When that constant is nonzero its divisor
/// pairs enumerate every solution, small k included; when it is zero f is
/// a perfect-square polynomial and every k solves the equation.
inline SquareValueSolutions solve_square_values(const QuadraticParams& p) {
    if (p.disc() == 0) {
        return {SquareValueSolutions::Kind::infinite_square_poly, {}, p.a / 2};
    }
    const Int target = 4 * p.b - p.a * p.a;
    std::vector<SquareValue> sols;
    for (const auto& [d, e] : divisor_pairs(target)) {
        if ((d + e) % 2 != 0) continue;  // v, u must be integers
        const Int v = (d + e) / 2;
        if (v < 0) continue;  // z >= 0 normalization
        const Int u = (e - d) / 2;
        if ((u - p.a) % 2 != 0) continue;  // k must be an integer
        // u == a (mod 2) forces v even: v^2 = u^2 + 4b - a^2 == 0 (mod 4).
        sols.push_back({(u - p.a) / 2, v / 2});
    }
    std::sort(sols.begin(), sols.end(),
              [](const SquareValue& lhs, const SquareValue& rhs) { return lhs.k < rhs.k; });
    sols.erase(std::unique(sols.begin(), sols.end()), sols.end());
    return {SquareValueSolutions::Kind::finite, std::move(sols), Int(0)};
}

}  // namespace squareprod
