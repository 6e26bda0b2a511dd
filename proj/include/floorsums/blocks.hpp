#pragma once

// The sublinear engine. [x/n] takes O(sqrt x) distinct values as n ranges
// over [1, x]; a QuotientBlock is a maximal run of n sharing one value
// q = [x/n]. Every sum of the form sum_n f([x/n]) is evaluated with one f
// call per block.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "floorsums/arith.hpp"
#include "floorsums/prime_log_sum.hpp"
#include "floorsums/rational.hpp"

namespace floorsums {

struct QuotientBlock {
    u64 q;     // common value [x/n]
    u64 n_lo;  // first n of the run
    u64 n_hi;  // last n of the run

    u64 length() const { return n_hi - n_lo + 1; }
    bool operator==(const QuotientBlock& o) const {
        return q == o.q && n_lo == o.n_lo && n_hi == o.n_hi;
    }
};

namespace detail {
inline void check_block_args(u64 x, u64 n_min, u64 n_max) {
    if (x == 0) throw std::domain_error("quotient blocks: x must be positive");
    if (x >= kMaxInput) throw std::out_of_range("quotient blocks: x must be below 2^63");
    if (n_min == 0) throw std::domain_error("quotient blocks: n_min must be positive");
    if (n_max > x) throw std::domain_error("quotient blocks: n_max must not exceed x");
}
}  // namespace detail

// Visits the maximal constant-quotient blocks partitioning [n_min, n_max]
// in increasing n (strictly decreasing q). Empty range visits nothing.
template <class F>
void for_each_quotient_block(u64 x, u64 n_min, u64 n_max, F f) {
    if (n_min > n_max) return;
    detail::check_block_args(x, n_min, n_max);
    u64 n = n_min;
    while (n <= n_max) {
        u64 q = x / n;
        u64 n_hi = std::min(x / q, n_max);  // largest n with [x/n] = q
        f(QuotientBlock{q, n, n_hi});
        if (n_hi == n_max) break;
        n = n_hi + 1;
    }
}

std::vector<QuotientBlock> quotient_blocks(u64 x, u64 n_min, u64 n_max);

// sum_{n_min <= n <= n_max} [pred([x/n])], exact. pred is called once per block.
template <class Pred>
u64 floor_sum_count(u64 x, u64 n_min, u64 n_max, Pred pred) {
    u64 total = 0;
    for_each_quotient_block(x, n_min, n_max, [&](const QuotientBlock& b) {
        if (pred(b.q)) total += b.length();
    });
    return total;
}

// sum_{n_min <= n <= n_max} Lambda-style weight of [x/n], exact. weight maps
// q to a MangoldtValue; the result collects log p coefficients as integers.
template <class W>
PrimeLogSum floor_sum_log(u64 x, u64 n_min, u64 n_max, W weight) {
    PrimeLogSum total;
    for_each_quotient_block(x, n_min, n_max, [&](const QuotientBlock& b) {
        MangoldtValue v = weight(b.q);
        if (!v.is_zero()) total.add_count(v.prime, b.length());
    });
    return total;
}

// #{n in (a, b] : [x/n] = d}, exact (0 when the block misses the window).
inline u64 quotient_count_in_window(u64 x, u64 d, u64 a, u64 b) {
    if (d == 0 || b == 0 || a >= b) return 0;
    u64 hi = std::min(x / d, b);
    u64 lo = std::max(x / (d + 1), a);
    return hi > lo ? hi - lo : 0;
}

// Interchange identity: sum_{D < n <= x} f([x/n]) equals
// sum_{d <= x/D} f(d) * #{n : x/(d+1) < n <= x/d} up to a boundary
// discrepancy. Both sides are computed exactly; the discrepancy is returned
// as a value, not an estimate.
struct HyperbolaReport {
    u64 main = 0;        // interchanged side
    u64 direct = 0;      // block-sum side over (D, x]
    i64 discrepancy = 0; // direct - main
};

template <class Pred>
HyperbolaReport hyperbola_transform(u64 x, u64 D, Pred pred) {
    if (D == 0 || D > x) throw std::domain_error("hyperbola_transform: need 1 <= D <= x");
    detail::check_block_args(x, 1, x);
    HyperbolaReport r;
    u64 d_max = x / D;
    for (u64 d = 1; d <= d_max; ++d) {
        if (pred(d)) r.main += x / d - x / (d + 1);
    }
    r.direct = D < x ? floor_sum_count(x, D + 1, x, pred) : 0;
    r.discrepancy = static_cast<i64>(r.direct) - static_cast<i64>(r.main);
    return r;
}

}  // namespace floorsums
