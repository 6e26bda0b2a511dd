#include "floorsums/constants.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "floorsums/arith.hpp"
#include "floorsums/compensated.hpp"

namespace floorsums {

PrecisionContext::PrecisionContext(unsigned digits, u64 budget)
    : target_digits(digits), prime_budget(budget) {
    if (digits < 2 || digits > 50)
        throw std::domain_error("PrecisionContext: target_digits must lie in [2, 50]");
}

mpfr_prec_t PrecisionContext::working_prec() const {
    // target + 30 guard digits, converted to bits.
    return static_cast<mpfr_prec_t>((target_digits + 30) * 3.33) + 64;
}

// ---------------------------------------------------------------------------
// Bernoulli numbers and certified zeta values
// ---------------------------------------------------------------------------

namespace {

// B_0 .. B_max by the defining recurrence sum_{j<=m} C(m+1,j) B_j = 0.
std::vector<Rational> bernoulli_upto(unsigned max_index) {
    std::vector<Rational> b(max_index + 1);
    b[0] = 1;
    for (unsigned m = 1; m <= max_index; ++m) {
        Rational acc(0);
        mpz_class binom(1);  // C(m+1, 0)
        for (unsigned j = 0; j < m; ++j) {
            acc += Rational(Rational(binom) * b[j]);
            binom = binom * (m + 1 - j) / (j + 1);  // C(m+1, j+1), exact
        }
        b[m] = Rational(-acc / Rational(binom));  // binom = C(m+1, m) here
    }
    return b;
}

Rational pow_rational_ui(u64 base, unsigned long exp) {
    mpz_class t;
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(base), exp);
    return Rational(t);
}

// Euler-Maclaurin evaluation of zeta(s) for integer s >= 2: the partial sum,
// the two boundary terms, and J Bernoulli corrections are all exact
// rationals; the remainder is bounded by the first omitted correction term
// (valid for real s > 0; see e.g. H. Cohen, "Numerical recipes for zeta").
Interval zeta_euler_maclaurin(unsigned s, mpfr_prec_t prec) {
    constexpr unsigned N = 64;
    constexpr unsigned J = 28;
    static const std::vector<Rational> bern = bernoulli_upto(2 * J + 2);

    Rational sum(0);
    for (unsigned n = 1; n < N; ++n) sum += Rational(1) / pow_rational_ui(n, s);
    // integral term N^{1-s}/(s-1) and half-weight boundary term
    sum += Rational(1) / Rational(pow_rational_ui(N, s - 1) * (s - 1));
    sum += Rational(1) / Rational(2 * pow_rational_ui(N, s));

    // correction_j = B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^{1-s-2j}
    mpz_class rising(1);       // s(s+1)...(s+2j-2), updated incrementally
    mpz_class factorial(1);    // (2j)!
    for (unsigned j = 1; j <= J; ++j) {
        unsigned top = s + 2 * j - 2;
        if (j == 1) {
            rising = s;
            factorial = 2;
        } else {
            rising *= (top - 1);
            rising *= top;
            factorial *= (2 * j - 1);
            factorial *= (2 * j);
        }
        Rational term = Rational(bern[2 * j] * Rational(rising)) /
                        Rational(Rational(factorial) * pow_rational_ui(N, s + 2 * j - 1));
        sum += term;
    }

    // First omitted term as the remainder bound.
    mpz_class rising_next = rising * (s + 2 * J - 1) * (s + 2 * J);
    mpz_class fact_next = factorial * (2 * J + 1) * (2 * J + 2);
    Rational rem = Rational(bern[2 * J + 2] * Rational(rising_next)) /
                   Rational(Rational(fact_next) * pow_rational_ui(N, s + 2 * J + 1));
    Rational bound = abs(rem);
    return Interval::from_rational_with_error(sum, bound, prec);
}

// Direct evaluation for large s: a short partial sum plus the integral tail
// sum_{n > N} n^{-s} <= N^{1-s}/(s-1).
Interval zeta_direct(unsigned s, mpfr_prec_t prec) {
    constexpr unsigned N = 32;
    Rational sum(0);
    for (unsigned n = 1; n <= N; ++n) sum += Rational(1) / pow_rational_ui(n, s);
    Rational tail = Rational(1) / Rational(pow_rational_ui(N, s - 1) * (s - 1));
    return Interval::from_bounds(sum, Rational(sum + tail), prec);
}

struct ZetaCacheKey {
    unsigned s;
    mpfr_prec_t prec;
    bool operator<(const ZetaCacheKey& o) const {
        return s != o.s ? s < o.s : prec < o.prec;
    }
};

Interval zeta_cached(unsigned s, mpfr_prec_t prec) {
    static std::map<ZetaCacheKey, Interval> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find({s, prec});
    if (it != cache.end()) return it->second;
    Interval v = s <= 80 ? zeta_euler_maclaurin(s, prec) : zeta_direct(s, prec);
    cache.emplace(ZetaCacheKey{s, prec}, v);
    return v;
}

int mobius(unsigned n) {
    int mu = 1;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

// Arguments above this threshold contribute below 10^{-126}; they are
// enclosed by [0, 6 * 2^{-m}] instead of being evaluated.
constexpr unsigned kLogZetaCutoff = 420;

// log zeta(m) <= zeta(m) - 1 <= 3 * 2^{-m} for m >= 2 (the n >= 3 part of
// zeta(m) - 1 is at most 3^{-m}(1 + 3/(m-1)) <= 2 * 2^{-m}).
Rational log_zeta_crude_bound(unsigned m) {
    return Rational(3) / pow_rational_ui(2, m);
}

}  // namespace

Interval zeta_interval(unsigned s, mpfr_prec_t prec) {
    if (s < 2) throw std::domain_error("zeta_interval: s must be at least 2");
    return zeta_cached(s, prec);
}

// P(s) = sum_{n>=1} mu(n)/n * log zeta(ns), truncated where ns exceeds the
// cutoff; the dropped part is bounded by sum_{n>N} (3/n) 2^{-ns} <=
// (6/(N+1)) 2^{-(N+1)s}.
Interval prime_zeta_interval(unsigned s, mpfr_prec_t prec) {
    if (s < 2) throw std::domain_error("prime_zeta_interval: s must be at least 2");
    Interval acc(prec);
    unsigned n_max = std::max(1u, kLogZetaCutoff / s);
    for (unsigned n = 1; n <= n_max; ++n) {
        int mu = mobius(n);
        if (mu == 0) continue;
        Interval lz = zeta_cached(n * s, prec).log();
        acc += lz.mul_rational(make_rational(mu, static_cast<i64>(n)));
    }
    Rational tail = Rational(make_rational(6, static_cast<i64>(n_max) + 1) /
                             pow_rational_ui(2, (n_max + 1) * s));
    return acc.widen(tail);
}

// ---------------------------------------------------------------------------
// Direct summation with float accumulation and explicit rounding slop
// ---------------------------------------------------------------------------

namespace {

struct DirectSum {
    double value = 0.0;
    u64 terms = 0;
    double slop() const {
        return (static_cast<double>(terms) + 4.0) * 0x1p-52 * std::max(1.0, std::fabs(value));
    }
};

DirectSum prime_reciprocal_direct(u64 budget) {
    CompensatedSum s;
    u64 n = 0;
    if (budget >= 2) {
        visit_primes(2, budget, [&](u64 p) {
            double pd = static_cast<double>(p);
            s.add(1.0 / (pd * (pd + 1.0)));
            ++n;
        });
    }
    return {s.value(), n};
}

// nu >= 2 prime powers up to power_budget.
DirectSum prime_power_extra_direct(u64 power_budget) {
    CompensatedSum s;
    u64 n = 0;
    u64 sq = power_budget >= 4 ? iroot(power_budget, 2) : 0;
    if (sq >= 2) {
        visit_primes(2, sq, [&](u64 p) {
            u128 q = u128(p) * p;
            while (q <= power_budget) {
                double qd = static_cast<double>(static_cast<u64>(q));
                s.add(1.0 / (qd * (qd + 1.0)));
                ++n;
                q *= p;
            }
        });
    }
    return {s.value(), n};
}

Interval interval_from_direct(const DirectSum& d, const Rational& tail_lo, const Rational& tail_hi,
                              mpfr_prec_t prec) {
    Rational lo = Rational(Rational(std::max(0.0, d.value - d.slop())) + tail_lo);
    Rational hi = Rational(Rational(d.value + d.slop()) + tail_hi);
    return Interval::from_bounds(lo, hi, prec);
}

CertifiedValue certify(Interval enclosure, double value) {
    return {std::move(enclosure), value};
}

Interval intersect_or_throw(const Interval& a, const Interval& b, const char* what) {
    if (!a.overlaps(b))
        throw std::logic_error(std::string(what) +
                               ": independent computation routes produced disjoint enclosures");
    // Conservative combination: the tighter of the two (they overlap, and
    // each contains the true value, so either is a valid certificate).
    return a.width() <= b.width() ? a : b;
}

}  // namespace

ConstantResult prime_reciprocal_constant(const PrecisionContext& ctx) {
    const mpfr_prec_t prec = ctx.working_prec();
    const u64 B = ctx.prime_budget;

    DirectSum direct = prime_reciprocal_direct(B);
    // Tail enclosure [0, 1/(B+1)] from sum_{n > B} 1/(n(n+1)) = 1/(B+1).
    Interval direct_iv =
        interval_from_direct(direct, Rational(0), rational_from_u64(1, B + 1), prec);

    // Accelerated: C_P = sum_{k>=2} (-1)^k P(k), tail below 3 * 2^{-K}.
    unsigned K = std::max(64u, static_cast<unsigned>((ctx.target_digits + 12) * 3.33));
    Interval accel(prec);
    for (unsigned k = 2; k <= K; ++k) {
        Interval pk = prime_zeta_interval(k, prec);
        accel += (k % 2 == 0) ? pk : pk.neg();
    }
    accel = accel.widen(log_zeta_crude_bound(K));

    Interval combined = intersect_or_throw(direct_iv, accel, "prime_reciprocal_constant");
    return {certify(direct_iv, direct.value), certify(accel, accel.midpoint()),
            std::move(combined)};
}

ConstantResult prime_power_reciprocal_constant(const PrecisionContext& ctx) {
    const mpfr_prec_t prec = ctx.working_prec();
    const u64 B = ctx.prime_budget;

    // Direct route: the nu = 1 part up to B, the nu >= 2 part up to a
    // geometric horizon B2, tails for both.
    const u64 B2 = std::min<u64>(std::max<u64>(B, 4), 100'000'000ull);
    DirectSum primes_part = prime_reciprocal_direct(B);
    DirectSum powers_part = prime_power_extra_direct(B2);
    DirectSum direct{primes_part.value + powers_part.value,
                     primes_part.terms + powers_part.terms};
    // nu >= 2 tail beyond B2: every term is below q^{-2} over distinct
    // prime powers q > B2, which totals at most 2 * B2^{-3/2}. Using
    // floor(sqrt(B2))^3 <= B2^{3/2} keeps the rational bound on the safe side.
    Rational power_tail = Rational(2) / pow_rational_ui(std::max<u64>(iroot(B2, 2), 1), 3);
    Interval direct_iv = interval_from_direct(
        direct, Rational(0), Rational(rational_from_u64(1, B + 1) + power_tail), prec);

    // Accelerated: C_Pw = sum_{k>=2} (-1)^k sum_{nu>=1} P(nu k).
    unsigned K = std::max(64u, static_cast<unsigned>((ctx.target_digits + 12) * 3.33));
    Interval accel(prec);
    for (unsigned k = 2; k <= K; ++k) {
        Interval qk(prec);
        for (unsigned nu = 1; nu * k <= 2 * K; ++nu) qk += prime_zeta_interval(nu * k, prec);
        // nu-tail: sum_{m > 2K, m multiple of k} P(m) <= 3 * 2^{-2K} * 2
        qk = qk.widen(Rational(2 * log_zeta_crude_bound(2 * K)));
        accel += (k % 2 == 0) ? qk : qk.neg();
    }
    // k-tail: sum_{k > K} Q(k) <= sum_{k > K} 6 * 2^{-k} = 6 * 2^{-K}.
    accel = accel.widen(Rational(2 * log_zeta_crude_bound(K)));

    Interval combined = intersect_or_throw(direct_iv, accel, "prime_power_reciprocal_constant");
    return {certify(direct_iv, direct.value), certify(accel, accel.midpoint()),
            std::move(combined)};
}

Rational prime_reciprocal_partial(u64 budget) {
    if (budget >= 200'000)
        throw std::length_error("prime_reciprocal_partial: exact mode capped at budget 2*10^5");
    Rational sum(0);
    if (budget >= 2) {
        visit_primes(2, budget, [&](u64 p) {
            sum += Rational(rational_from_u64(1, p) * rational_from_u64(1, p + 1));
        });
    }
    return sum;
}

Rational prime_power_extra_partial(u64 power_budget) {
    if (power_budget >= 1'000'000'000ull)
        throw std::length_error("prime_power_extra_partial: budget capped at 10^9");
    Rational sum(0);
    u64 sq = power_budget >= 4 ? iroot(power_budget, 2) : 0;
    if (sq >= 2) {
        visit_primes(2, sq, [&](u64 p) {
            u128 q = u128(p) * p;
            while (q <= power_budget) {
                u64 qq = static_cast<u64>(q);
                sum += Rational(rational_from_u64(1, qq) * rational_from_u64(1, qq + 1));
                q *= p;
            }
        });
    }
    return sum;
}

// ---------------------------------------------------------------------------
// Mangoldt series and tails
// ---------------------------------------------------------------------------

namespace {

// Chebyshev-type bounds used for the psi tails, applied only beyond the
// summation budget (>= 1000, so the validity ranges below are satisfied):
//   psi(t) <  1.03883 t        for all t > 0   (Rosser & Schoenfeld 1962, Thm 12)
//   psi(t) >= theta(t) > 0.84 t  for t >= 101    (Rosser & Schoenfeld 1962)
Rational psi_upper_rational() { return make_rational(103883, 100000); }
Rational psi_lower_rational() { return make_rational(84, 100); }

struct MangoldtDirect {
    double sum = 0.0;       // sum Lambda(n)/(n(n+1)) over n <= B
    double psi = 0.0;       // psi(B)
    u64 terms = 0;
    double slop(double magnitude) const {
        return (static_cast<double>(terms) + 8.0) * 0x1p-52 * std::max(1.0, magnitude);
    }
};

// One pass over primes and prime powers up to B accumulating both the
// weighted series and psi(B).
MangoldtDirect mangoldt_direct(u64 lo, u64 B) {
    MangoldtDirect out;
    CompensatedSum series, psi;
    u64 terms = 0;
    if (B >= 2) {
        visit_primes(2, B, [&](u64 p) {
            double lp = std::log(static_cast<double>(p));
            psi.add(lp);
            if (p >= lo) {
                double pd = static_cast<double>(p);
                series.add(lp / (pd * (pd + 1.0)));
                ++terms;
            }
        });
        u64 sq = iroot(B, 2);
        visit_primes(2, sq, [&](u64 p) {
            double lp = std::log(static_cast<double>(p));
            u128 q = u128(p) * p;
            while (q <= B) {
                psi.add(lp);
                u64 qq = static_cast<u64>(q);
                if (qq >= lo) {
                    double qd = static_cast<double>(qq);
                    series.add(lp / (qd * (qd + 1.0)));
                    ++terms;
                }
                q *= p;
            }
        });
    }
    out.sum = series.value();
    out.psi = psi.value();
    out.terms = terms;
    return out;
}

// Certified enclosure of sum_{n > B} Lambda(n)/(n(n+1)). Integration by
// parts against psi: with g(t) = 1/(t(t+1)),
//   tail = integral_B^inf (-g'(t)) (psi(t) - psi(B)) dt,
//   integral_B^inf t(-g'(t)) dt = log(1 + 1/B) + 1/(B+1),
// so c * [log(1+1/B) + 1/(B+1)] - psi(B)/(B(B+1)) brackets the tail for
// the two Chebyshev constants (clipped below at 0; the integrand is
// nonnegative).
std::pair<Rational, Rational> mangoldt_tail_bounds(u64 B, double psi_B, double psi_slop) {
    double logp1 = std::log1p(1.0 / static_cast<double>(B));
    double i1 = logp1 + 1.0 / (static_cast<double>(B) + 1.0);
    // Direction-safe float slop on the transcendental bits.
    double i1_lo = i1 * (1 - 1e-13);
    double i1_hi = i1 * (1 + 1e-13);
    double gB_hi = (psi_B + psi_slop) / (static_cast<double>(B) * (static_cast<double>(B) + 1.0)) *
                   (1 + 1e-13);
    double gB_lo = std::max(0.0, (psi_B - psi_slop) /
                                     (static_cast<double>(B) * (static_cast<double>(B) + 1.0)) *
                                     (1 - 1e-13));
    Rational lo = Rational(Rational(psi_lower_rational() * Rational(i1_lo)) - Rational(gB_hi));
    Rational hi = Rational(Rational(psi_upper_rational() * Rational(i1_hi)) - Rational(gB_lo));
    if (sgn(lo) < 0) lo = 0;
    if (hi < lo) hi = lo;
    return {lo, hi};
}

}  // namespace

CertifiedValue mangoldt_series_constant(const PrecisionContext& ctx) {
    const mpfr_prec_t prec = ctx.working_prec();
    const u64 B = std::max<u64>(std::min<u64>(ctx.prime_budget, 100'000'000ull), 1000);
    MangoldtDirect d = mangoldt_direct(1, B);
    auto [tail_lo, tail_hi] = mangoldt_tail_bounds(B, d.psi, d.slop(d.psi));
    double slop = d.slop(d.sum);
    Interval iv = Interval::from_bounds(Rational(Rational(d.sum - slop) + tail_lo),
                                        Rational(Rational(d.sum + slop) + tail_hi), prec);
    return {iv, d.sum + rational_to_double(Rational((tail_lo + tail_hi) / 2))};
}

double main_term_series(u64 x, const Rational& theta, unsigned terms) {
    if (x < 2) throw std::domain_error("main_term_series: x must be at least 2");
    if (terms < 1) throw std::domain_error("main_term_series: need at least one term");
    if (theta == 1) throw std::domain_error("main_term_series: theta = 1 is singular");
    if (sgn(theta) <= 0 || theta > 1)
        throw std::domain_error("main_term_series: theta must lie in (0, 1)");

    double th = rational_to_double(theta);
    double logx = std::log(static_cast<double>(x));
    double x_theta = std::exp(th * logx);
    double one_minus = 1.0 - th;

    CompensatedSum s;
    double factorial = 1.0;  // (k-1)!
    for (unsigned k = 1; k <= terms; ++k) {
        if (k > 1) factorial *= (k - 1);
        double sign = (k % 2 == 1) ? 1.0 : -1.0;
        s.add(sign * factorial / std::pow(one_minus, k) * x_theta / std::pow(logx, k));
    }
    return s.value();
}

CertifiedValue prime_tail_sum(u64 x, const Rational& theta, const PrecisionContext& ctx) {
    if (x < 2 || x >= kMaxInput) throw std::domain_error("prime_tail_sum: bad x");
    Rational one_minus = Rational(1 - theta);
    if (sgn(one_minus) < 0 || one_minus > 1)
        throw std::domain_error("prime_tail_sum: theta must lie in (0, 1]");
    u64 lo = ceil_pow(x, one_minus);
    if (lo < 2) throw std::domain_error("prime_tail_sum: x^(1-theta) must be at least 2");

    const u64 B = std::max(2 * lo, std::min<u64>(ctx.prime_budget, 10'000'000ull));
    CompensatedSum s;
    u64 terms = 0;
    visit_primes(lo, B, [&](u64 p) {
        double pd = static_cast<double>(p);
        s.add(static_cast<double>(x) / (pd * (pd + 1.0)));
        ++terms;
    });
    double direct = s.value();
    double slop = (static_cast<double>(terms) + 4.0) * 0x1p-52 * std::max(1.0, direct);
    Rational tail_hi = Rational(rational_from_u64(x) * rational_from_u64(1, B + 1));
    Interval iv = Interval::from_bounds(Rational(std::max(0.0, direct - slop)),
                                        Rational(Rational(direct + slop) + tail_hi),
                                        ctx.working_prec());
    return {iv, iv.midpoint()};
}

CertifiedValue mangoldt_tail_sum(u64 x, const Rational& theta, const PrecisionContext& ctx) {
    if (x < 2 || x >= kMaxInput) throw std::domain_error("mangoldt_tail_sum: bad x");
    Rational one_minus = Rational(1 - theta);
    if (sgn(one_minus) < 0 || one_minus > 1)
        throw std::domain_error("mangoldt_tail_sum: theta must lie in (0, 1]");
    u64 lo = ceil_pow(x, one_minus);

    const u64 B = std::max(std::max<u64>(2 * lo, 1000),
                           std::min<u64>(ctx.prime_budget, 10'000'000ull));
    MangoldtDirect d = mangoldt_direct(lo, B);
    auto [tail_lo, tail_hi] = mangoldt_tail_bounds(B, d.psi, d.slop(d.psi));
    double slop = d.slop(d.sum);
    Rational xr = rational_from_u64(x);
    Interval iv = Interval::from_bounds(Rational(xr * Rational(Rational(d.sum - slop) + tail_lo)),
                                        Rational(xr * Rational(Rational(d.sum + slop) + tail_hi)),
                                        ctx.working_prec());
    return {iv, iv.midpoint()};
}

}  // namespace floorsums
