#pragma once

#include "squareprod/exact_arith.hpp"
#include "squareprod/poly_core.hpp"
#include "squareprod/product_square.hpp"
#include "squareprod/square_values.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace squareprod {

enum class FamilyKind {
    finite_solved,            // complete solution set, derived exactly
    trivially_infinite_zero,  // f vanishes at some k >= k0; every later product is 0 = 0^2
    infinite_square_poly,     // a^2 == 4b; every product is a square
    scan_only,                // no exact classification; findings within the scan bound
};

struct FamilyClassification {
    FamilyKind kind;
    std::vector<Int> solution_ns;       // finite_solved: complete; scan_only: within bound
    std::optional<Int> m;               // nonnegative root of a+b+1 when that is a square
    // trivially_infinite_zero: least k >= k0 with f(k) = 0; every product
    // with n >= max(k0, k-1) is then 0 = 0^2
    std::optional<Int> zero_threshold;
    std::optional<Int> scan_bound;      // scan_only: the bound that was searched
};

/// All (a, b) with a + b + 1 = m^2 for 0 <= m <= m_max and a in
/// [a_lo, a_hi], in deterministic (m ascending, a ascending) order.
inline std::vector<QuadraticParams> enumerate_families(const Int& m_max, const Int& a_lo,
                                                       const Int& a_hi) {
    if (m_max < 0) throw std::domain_error("enumerate_families: m_max must be >= 0");
    if (a_lo > a_hi) throw std::domain_error("enumerate_families: empty a range");
    std::vector<QuadraticParams> out;
    for (Int m = 0; m <= m_max; ++m) {
        for (Int a = a_lo; a <= a_hi; ++a) {
            out.push_back({a, m * m - a - 1});
        }
    }
    return out;
}

struct ScanHit {
    Int n;
    Int root;

    bool operator==(const ScanHit&) const = default;
};

/// Every n in [k0, n_max] whose product is a perfect square, with its
/// certificate root. Maintains the running interior product incrementally
/// (one multiplication per n) and square-tests only the small residual.
inline std::vector<ScanHit> scan_products(const QuadraticParams& p, const Int& k0,
                                          const Int& n_max) {
    std::vector<ScanHit> hits;
    const Int f_start = p.eval(k0);
    Int core = 1;  // prod_{k=k0+1}^{n} f(k)
    for (Int n = k0; n <= n_max; ++n) {
        if (n > k0) core *= p.eval(n);
        const Int residual = f_start * p.eval(n + 1);
        const SquareDecision dec = decide_from_reduction(residual, core);
        if (dec.is_square) hits.push_back({n, *dec.root});
    }
    return hits;
}

namespace detail {

/// Least integer k >= k0 with f(k) = 0, if any. Integer roots exist when
/// the discriminant is a perfect square of matching parity.
inline std::optional<Int> least_zero_at_or_after(const QuadraticParams& p, const Int& k0) {
    const Int disc = p.disc();
    if (disc < 0) return std::nullopt;
    const auto s = is_perfect_square(disc);
    if (!s) return std::nullopt;
    if ((p.a + *s) % 2 != 0) return std::nullopt;
    const Int r_small = (-p.a - *s) / 2;
    const Int r_large = (-p.a + *s) / 2;
    if (r_small >= k0) return r_small;
    if (r_large >= k0) return r_large;
    return std::nullopt;
}

}  // namespace detail

/// Decision ladder for the solution set of prod_{k=k0}^{n} P(k) = y^2:
///
///  (i)  a^2 == 4b: every f-value is a square, so every product is.
///  (ii) f vanishes at some reachable k >= k0: every n at or after that
///       zero gives product 0 = 0^2.
///  (iii) k0 == 1 with f(1) a nonzero perfect square: the telescoped
///       residual is f(1) f(n+1), so the product is a square exactly when
///       f(n+1) is; the complete square-value solver turns each solution
///       k >= 2 into n = k - 1. Exact, no scan.
///  (iv) otherwise: honest bounded scan, labeled as such.
inline FamilyClassification classify_family(const QuadraticParams& p, const Int& k0,
                                            const Int& scan_bound) {
    std::optional<Int> m;
    if (auto root = is_perfect_square(p.f1())) m = *root;

    if (p.disc() == 0) {
        return {FamilyKind::infinite_square_poly, {}, m, std::nullopt, std::nullopt};
    }
    if (auto zero = detail::least_zero_at_or_after(p, k0)) {
        return {FamilyKind::trivially_infinite_zero, {}, m, zero, std::nullopt};
    }
    if (k0 == 1 && m && *m != 0) {
        const SquareValueSolutions sols = solve_square_values(p);
        std::vector<Int> ns;
        for (const SquareValue& sv : sols.solutions) {
            if (sv.k >= 2) ns.push_back(sv.k - 1);
        }
        return {FamilyKind::finite_solved, std::move(ns), m, std::nullopt, std::nullopt};
    }
    std::vector<Int> ns;
    for (const ScanHit& hit : scan_products(p, k0, scan_bound)) ns.push_back(hit.n);
    return {FamilyKind::scan_only, std::move(ns), m, std::nullopt, scan_bound};
}

}  // namespace squareprod
