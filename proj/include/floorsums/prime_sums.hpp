#pragma once

// The headline floor-quotient sums: the number of n <= x (or n <= x^theta)
// with [x/n] prime or a prime power, the Mangoldt-weighted analogue, and
// exact term-by-term reconstructions of their interchange decompositions.

#include <optional>

#include "floorsums/blocks.hpp"
#include "floorsums/prime_log_sum.hpp"
#include "floorsums/rational.hpp"
#include "floorsums/report.hpp"

namespace floorsums {

// theta in (0, 1], always an exact rational; irrational cutoffs are out of
// scope at the API boundary. The cutoff floor(x^theta) is computed by exact
// integer root extraction.
class ThetaParameter {
  public:
    explicit ThetaParameter(Rational value);
    static ThetaParameter parse(const std::string& text) {
        return ThetaParameter(parse_rational(text));
    }

    const Rational& value() const { return value_; }
    u64 cutoff(u64 x) const;  // floor(x^theta), exact

  private:
    Rational value_;
};

enum class QuotientIndicator { Prime, PrimePower };

// S_P(x): #{n <= x : [x/n] prime}. Exact, O(sqrt x) primality tests.
u64 prime_quotient_count(u64 x);

// pi_theta(x): #{n <= floor(x^theta) : [x/n] prime}.
u64 prime_quotient_count(u64 x, const ThetaParameter& theta);

// S_Pw(x): #{n <= x : [x/n] a prime power p^nu, nu >= 1}.
u64 prime_power_quotient_count(u64 x);

u64 prime_power_quotient_count(u64 x, const ThetaParameter& theta);

// Mangoldt-weighted sums sum_{n <= N} Lambda([x/n]), exact multiset plus a
// compensated float view.
struct MangoldtQuotientSum {
    PrimeLogSum exact;
    double value = 0.0;
};

MangoldtQuotientSum mangoldt_quotient_sum(u64 x);                             // N = x
MangoldtQuotientSum mangoldt_quotient_sum(u64 x, const ThetaParameter& th);   // N = floor(x^theta)

// ---------------------------------------------------------------------------
// Decompositions
// ---------------------------------------------------------------------------

struct DecompositionOptions {
    // Exact-rational bookkeeping is used when the prime/divisor window has
    // at most this many terms; beyond it the report falls back to floats
    // and marks the residual as approximate.
    u64 exact_term_limit = 20000;
    // The infinite main-term tails are enclosed by a partial sum up to
    // horizon_factor * (window end) plus the crude 1/(B+1) bound.
    u64 tail_horizon_factor = 8;
};

// Splits pi_theta(x) = S1 + S2 at n = x^{435/923} and rebuilds S2 through
// the interchange identity
//   floor(x/p) - floor(x/(p+1)) = x/(p(p+1)) + rho(x/(p+1)) - rho(x/p)
// summed over primes p in [ceil(x^{1-theta}), floor(x^{488/923})]. Terms:
//   s1, s2                exact counts
//   main_prime_range      x * sum 1/(p(p+1)) over the window, exact rational
//   prime_tail            x * sum_{p beyond window} 1/(p(p+1)), enclosure
//   r1, r0                sawtooth sums rho(x/(p+delta)), exact rationals
//   p_lo, p_hi, n_split, n_cut   window bookkeeping
// The residual is s2 - (main_prime_range + r1 - r0); it is integer-valued
// and equals the boundary discrepancy of the interchange, which the caller
// can recompute independently (see window_discrepancy below).
SumReport pi_theta_decomposition(u64 x, const ThetaParameter& theta,
                                 const DecompositionOptions& opts = {});

// Same reconstruction for S_f(x) = S_f1 + S_f2 split at n = x^{435/923},
// f the prime or prime-power indicator. Extra terms:
//   small_d_rho     sum_{d <= x^{435/923}} f(d) (rho(x/(d+1)) - rho(x/d))
//   r1_f, r0_f      window sawtooth sums over (x^{435/923}, x^{488/923}]
SumReport quotient_sum_decomposition(u64 x, QuotientIndicator f,
                                     const DecompositionOptions& opts = {});

// Independent integer-only route to the decomposition residuals: the
// difference between window-clipped and full interchange counts,
//   sum_d f(d) * #{n in (A, B] : [x/n] = d}  -  sum_{d in [d_lo, d_hi]} f(d) * (floor(x/d) - floor(x/(d+1)))
// computed without any rational bookkeeping.
template <class Pred>
i64 window_discrepancy(u64 x, u64 a, u64 b, u64 d_lo, u64 d_hi, Pred pred) {
    i64 clipped = 0;
    if (a < b) clipped = static_cast<i64>(floor_sum_count(x, a + 1, b, pred));
    i64 full = 0;
    for (u64 d = d_lo; d <= d_hi && d >= 1; ++d)
        if (pred(d)) full += static_cast<i64>(x / d - x / (d + 1));
    return clipped - full;
}

}  // namespace floorsums
