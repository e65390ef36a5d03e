#pragma once

#include "squareprod/exact_arith.hpp"

namespace squareprod {

/// The monic quadratic f(x) = x^2 + a x + b that generates a product family.
struct QuadraticParams {
    Int a;
    Int b;

    /// f(1) = a + b + 1. The family is "square-friendly" when this is m^2.
    Int f1() const { return a + b + 1; }

    /// a^2 - 4b. Zero exactly when f is the square of a linear polynomial.
    Int disc() const { return a * a - 4 * b; }

    Int eval(const Int& x) const { return x * x + a * x + b; }

    bool operator==(const QuadraticParams&) const = default;
};

/// Coefficients of the quartic P(k) = f(k) f(k+1). Always monic (c4 == 1).
struct QuarticCoeffs {
    Int c4;
    Int c3;
    Int c2;
    Int c1;
    Int c0;

    /// Horner evaluation, exact.
    Int eval(const Int& k) const {
        return (((c4 * k + c3) * k + c2) * k + c1) * k + c0;
    }

    bool operator==(const QuarticCoeffs&) const = default;
};

/// Expands f(k) f(k+1) into its quartic coefficients:
/// k^4 + 2(a+1) k^3 + ((a+1)^2 + 2b + a) k^2 + (a+1)(2b+a) k + (b^2 + ab + b).
inline QuarticCoeffs quartic_from_quadratic(const QuadraticParams& p) {
    const Int a1 = p.a + 1;
    return {Int(1),
            2 * a1,
            a1 * a1 + 2 * p.b + p.a,
            a1 * (2 * p.b + p.a),
            p.b * p.b + p.a * p.b + p.b};
}

/// Executable witness of the composition identity
/// f(f(x) + x) == f(x) f(x+1), which holds for every monic quadratic.
inline bool identity_check(const QuadraticParams& p, const Int& x) {
    const Int fx = p.eval(x);
    return p.eval(fx + x) == fx * p.eval(x + 1);
}

}  // namespace squareprod
