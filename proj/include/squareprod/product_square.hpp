#pragma once

#include "squareprod/exact_arith.hpp"
#include "squareprod/poly_core.hpp"

#include <optional>
#include <stdexcept>

namespace squareprod {

/// The product prod_{k=k0}^{n} P(k) with P(k) = f(k) f(k+1).
/// n < k0 is legal and denotes the empty product (= 1).
struct ProductQuery {
    QuadraticParams params;
    Int k0;
    Int n;
};

/// Telescoped form of the product:
///   prod_{k=k0}^{n} f(k) f(k+1) = residual * core^2
/// with residual = f(k0) f(n+1) and core = prod_{k=k0+1}^{n} f(k).
struct ProductReduction {
    Int residual;
    Int core;
    bool empty;
};

/// Outcome of a square test. root is present iff is_square (normalized
/// nonnegative, root^2 equals the product); residual carries the signed
/// non-square quantity otherwise, for diagnosis.
struct SquareDecision {
    bool is_square;
    std::optional<Int> root;
    std::optional<Int> residual;
};

inline ProductReduction telescope_reduce(const ProductQuery& q) {
    if (q.n < q.k0) return {Int(1), Int(1), true};
    Int residual = q.params.eval(q.k0) * q.params.eval(q.n + 1);
    Int core = 1;
    for (Int k = q.k0 + 1; k <= q.n; ++k) core *= q.params.eval(k);
    return {residual, core, false};
}

/// Square decision for a telescoped (residual, core) pair. A zero factor
/// makes the product 0 = 0^2; a negative residual with nonzero core can
/// never be a square; otherwise the product residual * core^2 is a square
/// exactly when the residual is, with certificate root = r * |core|.
inline SquareDecision decide_from_reduction(const Int& residual, const Int& core) {
    if (residual == 0 || core == 0) return {true, Int(0), std::nullopt};
    if (residual < 0) return {false, std::nullopt, residual};
    if (auto r = is_perfect_square(residual)) {
        return {true, *r * abs(core), std::nullopt};
    }
    return {false, std::nullopt, residual};
}

/// O(1)-sized decision: only the telescoped residual is square-tested.
inline SquareDecision product_is_square(const ProductQuery& q) {
    const ProductReduction red = telescope_reduce(q);
    return decide_from_reduction(red.residual, red.core);
}

inline constexpr long kDefaultBruteLimit = 10'000;

/// Independent oracle: evaluates the quartic P(k) by Horner's rule,
/// multiplies the values outright, and square-tests the full product.
/// Makes no use of the telescoping identity. The range guard is explicit;
/// oversized ranges are an error, never a silent truncation.
inline SquareDecision brute_force_is_square(const ProductQuery& q,
                                            long range_limit = kDefaultBruteLimit) {
    if (q.n >= q.k0 && q.n - q.k0 > range_limit) {
        throw std::domain_error("brute_force_is_square: range exceeds limit of " +
                                std::to_string(range_limit) + " factors");
    }
    const QuarticCoeffs quartic = quartic_from_quadratic(q.params);
    Int product = 1;
    for (Int k = q.k0; k <= q.n; ++k) product *= quartic.eval(k);
    if (auto r = is_perfect_square(product)) return {true, *r, std::nullopt};
    return {false, std::nullopt, product};
}

}  // namespace squareprod
