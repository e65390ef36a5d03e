#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace squareprod {

// Every integer quantity in the library is an exact, unbounded integer.
// No rounding and no overflow exist anywhere.
using Int = mpz_class;

/// Floor square root: the unique s >= 0 with s^2 <= n < (s+1)^2.
///
/// Newton/Heron iteration on unbounded integers, started from a power of
/// two at least sqrt(n), followed by a monotone correction that pins the
/// postcondition independently of the start guess.
inline Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt: input must be nonnegative");
    if (n < 2) return n;
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    Int x = Int(1) << ((bits + 1) / 2);  // 2^ceil(bits/2) >= sqrt(n)
    Int y = (x + n / x) / 2;
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    while (x * x > n) --x;
    while ((x + 1) * (x + 1) <= n) ++x;
    return x;
}

/// The nonnegative root s with s^2 == n, when n is a perfect square.
/// Negative n never is; 0 maps to 0.
inline std::optional<Int> is_perfect_square(const Int& n) {
    if (n < 0) return std::nullopt;
    Int s = isqrt(n);
    if (s * s == n) return s;
    return std::nullopt;
}

/// All ordered pairs (d, e) with d * e == n, both signs allowed.
///
/// Enumeration order is deterministic: |d| ascending, and positive d
/// before negative d at equal |d|. Trial division up to isqrt(|n|);
/// intended for coefficient-sized inputs.
inline std::vector<std::pair<Int, Int>> divisor_pairs(const Int& n) {
    if (n == 0) throw std::domain_error("divisor_pairs: n must be nonzero");
    const Int m = abs(n);
    std::vector<Int> small, large;
    for (Int d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            small.push_back(d);
            if (d * d != m) large.push_back(m / d);
        }
    }
    std::vector<std::pair<Int, Int>> pairs;
    pairs.reserve(2 * (small.size() + large.size()));
    auto emit = [&](const Int& d) {
        Int e = n / d;
        pairs.emplace_back(d, e);
        pairs.emplace_back(-d, -e);
    };
    for (const Int& d : small) emit(d);
    for (auto it = large.rbegin(); it != large.rend(); ++it) emit(*it);
    return pairs;
}

}  // namespace squareprod
