#pragma once

#include "squareprod/exact_arith.hpp"
#include "squareprod/poly_core.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace squareprod {

/// A positive solution of X^2 - D Y^2 = -1, with its 1-based position in
/// the ascending solution chain. Solutions strictly increase in both
/// coordinates with the index.
struct PellSolution {
    Int x;
    Int y;
    int index;

    bool operator==(const PellSolution&) const = default;
};

/// The fundamental solution (p, q) of X^2 - D Y^2 = +1.
struct PellUnit {
    Int p;
    Int q;

    bool operator==(const PellUnit&) const = default;
};

namespace detail {

struct CfPeriod {
    unsigned long length;  // period length of the continued fraction of sqrt(D)
    Int h;                 // convergent numerator just before the period closes
    Int k;                 // convergent denominator; h^2 - D k^2 = (-1)^length
};

/// Runs the standard P-Q recurrence for the continued fraction of sqrt(D)
/// through one full period.
inline CfPeriod cf_sqrt_period(const Int& d_value) {
    if (d_value < 2) throw std::domain_error("pell: D must be at least 2");
    if (is_perfect_square(d_value)) {
        throw std::domain_error("pell: D must not be a perfect square");
    }
    const Int a0 = isqrt(d_value);
    Int m = 0, den = 1, a = a0;
    Int h_prev = 1, h = a0;
    Int k_prev = 0, k = 1;
    unsigned long length = 0;
    while (true) {
        m = den * a - m;
        den = (d_value - m * m) / den;
        a = (a0 + m) / den;
        ++length;
        if (a == 2 * a0) break;
        Int h_next = a * h + h_prev;
        Int k_next = a * k + k_prev;
        h_prev = h;
        k_prev = k;
        h = h_next;
        k = k_next;
    }
    return {length, h, k};
}

}  // namespace detail

/// Least positive solution of X^2 - D Y^2 = -1, or empty when none exists.
/// A solution exists exactly when the continued-fraction period of sqrt(D)
/// has odd length.
inline std::optional<PellSolution> negative_pell_fundamental(const Int& d_value) {
    const detail::CfPeriod cf = detail::cf_sqrt_period(d_value);
    if (cf.length % 2 == 0) return std::nullopt;
    return PellSolution{cf.h, cf.k, 1};
}

/// Fundamental solution of X^2 - D Y^2 = +1. For odd period it is the
/// square of the negative-equation fundamental: (h^2 + D k^2, 2 h k).
inline PellUnit pell_unit(const Int& d_value) {
    const detail::CfPeriod cf = detail::cf_sqrt_period(d_value);
    if (cf.length % 2 == 0) return {cf.h, cf.k};
    return {cf.h * cf.h + d_value * cf.k * cf.k, 2 * cf.h * cf.k};
}

/// Steps a negative-equation solution to the next one by multiplying with
/// the fundamental unit: (X, Y) -> (pX + DqY, pY + qX). Integer-only; no
/// radicals involved.
inline PellSolution next_solution(const Int& d_value, const PellSolution& s) {
    if (s.x * s.x - d_value * s.y * s.y != -1) {
        throw std::domain_error("next_solution: input is not on X^2 - D Y^2 = -1");
    }
    const PellUnit u = pell_unit(d_value);
    return {u.p * s.x + d_value * u.q * s.y, u.p * s.y + u.q * s.x, s.index + 1};
}

/// One member of the infinite square-product family of f(x) = x^2 - 4x + 2:
/// prod_{k=4}^{n} f(k) f(k+1) is a perfect square exactly when
/// 2(n-1)^2 - 4 = y^2, which forces y and n-1 even and reduces to
/// (y/2)^2 - 2((n-1)/2)^2 = -1. Each solution (X, Y) of X^2 - 2Y^2 = -1
/// therefore yields n = 2Y + 1 with residual root y = 2X.
struct PellFamilySolution {
    PellSolution pell;
    Int n;              // product end index, n = 2 * pell.y + 1
    Int residual_root;  // 2 * pell.x; its square is f(4) f(n+1)
    Int full_root;      // residual_root * prod_{k=5}^{n} f(k); squares to the product
};

/// First `count` end indices n >= 4 whose product is a perfect square,
/// ascending, each with its exact certificate root. The D=2 fundamental
/// (1, 1) maps to n = 3, below the product start, and is skipped rather
/// than rejected.
inline std::vector<PellFamilySolution> pell_family_solutions(int count) {
    if (count < 1) throw std::domain_error("pell_family_solutions: count must be >= 1");
    const Int d_value = 2;
    const QuadraticParams family{-4, 2};
    std::vector<PellFamilySolution> out;
    out.reserve(static_cast<std::size_t>(count));
    PellSolution s = *negative_pell_fundamental(d_value);
    Int core = 1;      // prod_{k=5}^{core_end} f(k), extended incrementally
    Int core_end = 4;  // invariant: core covers (4, core_end]
    while (out.size() < static_cast<std::size_t>(count)) {
        const Int n = 2 * s.y + 1;
        if (n >= 4) {
            for (Int k = core_end + 1; k <= n; ++k) core *= family.eval(k);
            core_end = n;
            const Int residual_root = 2 * s.x;
            out.push_back({s, n, residual_root, residual_root * core});
        }
        s = next_solution(d_value, s);
    }
    return out;
}

}  // namespace squareprod
