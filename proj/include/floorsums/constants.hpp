#pragma once

// High-precision limit constants with certified enclosures, and the
// closed-form main terms they are compared against.
//
// Every constant is computed along two independent routes:
//   (a) direct summation over primes up to a budget, plus a rigorous
//       tail enclosure;
//   (b) series acceleration through the prime zeta function,
//       1/(q(q+1)) = sum_{k>=2} (-1)^k q^{-k}, with zeta values from
//       Euler-Maclaurin summation carrying exact rational remainders.
// The two enclosures must overlap; a disjoint pair throws, loudly.

#include "floorsums/interval.hpp"
#include "floorsums/rational.hpp"

namespace floorsums {

struct PrecisionContext {
    unsigned target_digits = 30;          // significant decimal digits, <= 50
    u64 prime_budget = 3'000'000'000ull;  // direct-summation horizon

    PrecisionContext() = default;
    PrecisionContext(unsigned digits, u64 budget);

    mpfr_prec_t working_prec() const;  // >= 30 guard digits over target
};

struct CertifiedValue {
    Interval enclosure;
    double value = 0.0;  // representative point inside the enclosure
};

struct ConstantResult {
    CertifiedValue direct;
    CertifiedValue accelerated;
    Interval combined;  // intersection of the two enclosures

    double value() const { return accelerated.value; }
};

// C_P = sum_p 1/(p(p+1)).
ConstantResult prime_reciprocal_constant(const PrecisionContext& ctx = {});

// C_Pw = sum over prime powers q = p^nu, nu >= 1, of 1/(q(q+1)).
ConstantResult prime_power_reciprocal_constant(const PrecisionContext& ctx = {});

// Exact rational partial sums for small budgets (oracle fodder).
Rational prime_reciprocal_partial(u64 budget);         // sum_{p <= budget} 1/(p(p+1))
Rational prime_power_extra_partial(u64 power_budget);  // nu >= 2 part, p^nu <= budget

// sum_n Lambda(n)/(n(n+1)): direct part up to the budget plus a tail
// enclosure from Chebyshev-type bounds c_lo * t <= psi(t) <= c_hi * t
// (constants documented at the definition site).
CertifiedValue mangoldt_series_constant(const PrecisionContext& ctx = {});

// Truncated main-term series
//   sum_{k=1}^{L} (-1)^{k-1} (k-1)! / (1-theta)^k * x^theta / (log x)^k,
// compensated double evaluation. theta in (0, 1); theta = 1 is singular.
double main_term_series(u64 x, const Rational& theta, unsigned terms);

// x * sum_{p >= x^(1-theta)} 1/(p(p+1)): direct over [x^(1-theta), budget]
// plus a crude certified tail.
CertifiedValue prime_tail_sum(u64 x, const Rational& theta, const PrecisionContext& ctx = {});

// x * sum_{d >= x^(1-theta)} Lambda(d)/(d(d+1)), same shape with the
// psi-based tail enclosure.
CertifiedValue mangoldt_tail_sum(u64 x, const Rational& theta, const PrecisionContext& ctx = {});

// Certified enclosures of zeta(s) and the prime zeta P(s) = sum_p p^{-s}
// at integer s >= 2. Exposed for tests and the CLI.
Interval zeta_interval(unsigned s, mpfr_prec_t prec = 320);
Interval prime_zeta_interval(unsigned s, mpfr_prec_t prec = 320);

}  // namespace floorsums
