#include "floorsums/prime_sums.hpp"

#include <algorithm>
#include <stdexcept>

#include "floorsums/compensated.hpp"
#include "floorsums/exponents.hpp"

namespace floorsums {

namespace {

void check_x(u64 x, const char* what) {
    if (x == 0) throw std::domain_error(std::string(what) + ": x must be positive");
    if (x >= kMaxInput) throw std::out_of_range(std::string(what) + ": x must be below 2^63");
}

// Pairwise folding keeps intermediate numerators/denominators small until
// the top of the tree; a left fold over thousands of sawtooth terms would
// repeat full-size gcd work at every step.
Rational balanced_sum(std::vector<Rational> terms) {
    if (terms.empty()) return Rational(0);
    while (terms.size() > 1) {
        std::size_t half = (terms.size() + 1) / 2;
        for (std::size_t i = 0; i + half < terms.size(); ++i) terms[i] += terms[i + half];
        terms.resize(half);
    }
    return terms[0];
}

bool indicator(QuotientIndicator f, u64 d) {
    return f == QuotientIndicator::Prime ? is_prime(d) : is_prime_power(d);
}

// Enclosure of sum over d > cut of f(d)/(d(d+1)): a float partial sum over
// (cut, horizon] with its rounding slop, plus the crude tail bound
// sum_{d > horizon} 1/(d(d+1)) = 1/(horizon+1).
TermValue scaled_tail_enclosure(u64 x, u64 cut, u64 horizon, QuotientIndicator f) {
    CompensatedSum partial;
    u64 n_terms = 0;
    if (f == QuotientIndicator::Prime) {
        visit_primes(cut + 1, horizon, [&](u64 p) {
            partial.add(1.0 / (static_cast<double>(p) * (static_cast<double>(p) + 1.0)));
            ++n_terms;
        });
    } else {
        // Primes by sieve; higher powers p^nu <= horizon enumerated directly.
        visit_primes(cut + 1, horizon, [&](u64 p) {
            partial.add(1.0 / (static_cast<double>(p) * (static_cast<double>(p) + 1.0)));
            ++n_terms;
        });
        u64 sq = iroot(horizon, 2);
        visit_primes(2, sq, [&](u64 p) {
            u128 q = u128(p) * p;
            while (q <= horizon) {
                if (q > cut) {
                    double qd = static_cast<double>(static_cast<u64>(q));
                    partial.add(1.0 / (qd * (qd + 1.0)));
                    ++n_terms;
                }
                q *= p;
            }
        });
    }
    double s = partial.value();
    double slop = (static_cast<double>(n_terms) + 4.0) * 0x1p-52 * std::max(1.0, s);
    Rational lo = Rational(std::max(0.0, s - slop));
    Rational hi = Rational(s + slop) + rational_from_u64(1, horizon + 1);
    Rational xr = rational_from_u64(x);
    return TermValue::from_interval(Rational(lo * xr), Rational(hi * xr));
}

}  // namespace

ThetaParameter::ThetaParameter(Rational value) : value_(std::move(value)) {
    value_.canonicalize();
    if (sgn(value_) <= 0 || value_ > 1)
        throw std::domain_error("theta must lie in (0, 1]");
}

u64 ThetaParameter::cutoff(u64 x) const {
    check_x(x, "theta cutoff");
    return floor_pow(x, value_);
}

u64 prime_quotient_count(u64 x) {
    check_x(x, "prime_quotient_count");
    return floor_sum_count(x, 1, x, [](u64 q) { return is_prime(q); });
}

u64 prime_quotient_count(u64 x, const ThetaParameter& theta) {
    check_x(x, "prime_quotient_count");
    return floor_sum_count(x, 1, theta.cutoff(x), [](u64 q) { return is_prime(q); });
}

u64 prime_power_quotient_count(u64 x) {
    check_x(x, "prime_power_quotient_count");
    return floor_sum_count(x, 1, x, [](u64 q) { return is_prime_power(q); });
}

u64 prime_power_quotient_count(u64 x, const ThetaParameter& theta) {
    check_x(x, "prime_power_quotient_count");
    return floor_sum_count(x, 1, theta.cutoff(x), [](u64 q) { return is_prime_power(q); });
}

MangoldtQuotientSum mangoldt_quotient_sum(u64 x) {
    check_x(x, "mangoldt_quotient_sum");
    MangoldtQuotientSum out;
    out.exact = floor_sum_log(x, 1, x, [](u64 q) { return mangoldt(q); });
    out.value = out.exact.value();
    return out;
}

MangoldtQuotientSum mangoldt_quotient_sum(u64 x, const ThetaParameter& theta) {
    check_x(x, "mangoldt_quotient_sum");
    MangoldtQuotientSum out;
    out.exact = floor_sum_log(x, 1, theta.cutoff(x), [](u64 q) { return mangoldt(q); });
    out.value = out.exact.value();
    return out;
}

// ---------------------------------------------------------------------------
// Decompositions
// ---------------------------------------------------------------------------

namespace {

struct WindowSums {
    bool exact = false;
    Rational main;       // x * sum f(d)/(d(d+1)) over the window
    Rational r1, r0;     // sum f(d) rho(x/(d+delta))
    double main_f = 0, r1_f = 0, r0_f = 0;
    u64 terms = 0;
};

// Exact interchange bookkeeping over an explicit divisor list.
WindowSums window_sums(u64 x, const std::vector<u64>& divisors, u64 exact_limit) {
    WindowSums w;
    w.terms = divisors.size();
    w.exact = divisors.size() <= exact_limit;
    CompensatedSum main_f, r1_f, r0_f;
    std::vector<Rational> main_terms, r1_terms, r0_terms;
    if (w.exact) {
        main_terms.reserve(divisors.size());
        r1_terms.reserve(divisors.size());
        r0_terms.reserve(divisors.size());
    }
    for (u64 d : divisors) {
        double dd = static_cast<double>(d);
        main_f.add(static_cast<double>(x) / (dd * (dd + 1.0)));
        Rational rr0 = rho(x, d);
        Rational rr1 = rho(x, d + 1);
        r0_f.add(rational_to_double(rr0));
        r1_f.add(rational_to_double(rr1));
        if (w.exact) {
            main_terms.push_back(
                Rational(rational_from_u64(x) / (rational_from_u64(d) * rational_from_u64(d + 1))));
            r0_terms.push_back(std::move(rr0));
            r1_terms.push_back(std::move(rr1));
        }
    }
    w.main_f = main_f.value();
    w.r0_f = r0_f.value();
    w.r1_f = r1_f.value();
    if (w.exact) {
        w.main = balanced_sum(std::move(main_terms));
        w.r0 = balanced_sum(std::move(r0_terms));
        w.r1 = balanced_sum(std::move(r1_terms));
    }
    return w;
}

void push_window_terms(SumReport& rep, const WindowSums& w, const char* main_name,
                       const char* r1_name, const char* r0_name) {
    if (w.exact) {
        rep.push(main_name, TermValue::from_exact(w.main));
        rep.push(r1_name, TermValue::from_exact(w.r1));
        rep.push(r0_name, TermValue::from_exact(w.r0));
    } else {
        rep.push(main_name, TermValue::from_double(w.main_f));
        rep.push(r1_name, TermValue::from_double(w.r1_f));
        rep.push(r0_name, TermValue::from_double(w.r0_f));
    }
}

}  // namespace

SumReport pi_theta_decomposition(u64 x, const ThetaParameter& theta,
                                 const DecompositionOptions& opts) {
    check_x(x, "pi_theta_decomposition");
    const Rational crit = critical_exponent();
    if (theta.value() <= crit || theta.value() >= 1)
        throw std::domain_error("pi_theta_decomposition: theta must lie in (435/923, 1)");
    Rational one_minus = Rational(1 - theta.value());
    if (floor_pow(x, one_minus) < 2)
        throw std::domain_error("pi_theta_decomposition: x^(1-theta) must be at least 2");

    const u64 n_split = floor_pow(x, crit);
    const u64 n_cut = theta.cutoff(x);
    const u64 p_lo = ceil_pow(x, one_minus);
    const u64 p_hi = floor_pow(x, envelope_domain_end());

    auto prime_pred = [](u64 q) { return is_prime(q); };
    const u64 s1 = floor_sum_count(x, 1, n_split, prime_pred);
    const u64 s2 = n_split < n_cut ? floor_sum_count(x, n_split + 1, n_cut, prime_pred) : 0;

    std::vector<u64> window_primes;
    if (p_lo <= p_hi) window_primes = primes_in_range(std::max<u64>(p_lo, 2), p_hi);
    WindowSums w = window_sums(x, window_primes, opts.exact_term_limit);

    SumReport rep;
    rep.total = TermValue::from_count(s1 + s2);
    rep.push("s1", TermValue::from_count(s1));
    rep.push("s2", TermValue::from_count(s2));
    push_window_terms(rep, w, "main_prime_range", "r1", "r0");
    rep.push("prime_tail",
             scaled_tail_enclosure(x, p_hi, std::max<u64>(p_hi * opts.tail_horizon_factor, 1000),
                                   QuotientIndicator::Prime));
    rep.push("n_split", TermValue::from_count(n_split));
    rep.push("n_cut", TermValue::from_count(n_cut));
    rep.push("p_lo", TermValue::from_count(p_lo));
    rep.push("p_hi", TermValue::from_count(p_hi));

    if (w.exact) {
        Rational res = rational_from_u64(s2) - (w.main + w.r1 - w.r0);
        rep.residual = TermValue::from_exact(res);
        rep.residual_exact = true;
    } else {
        rep.residual = TermValue::from_double(static_cast<double>(s2) - (w.main_f + w.r1_f - w.r0_f));
        rep.residual_exact = false;
    }
    return rep;
}

SumReport quotient_sum_decomposition(u64 x, QuotientIndicator f, const DecompositionOptions& opts) {
    check_x(x, "quotient_sum_decomposition");
    if (x < 2) throw std::domain_error("quotient_sum_decomposition: x must be at least 2");

    const u64 n_split = floor_pow(x, critical_exponent());
    const u64 d_cap = floor_pow(x, envelope_domain_end());
    auto pred = [f](u64 q) { return indicator(f, q); };

    const u64 s_f1 = floor_sum_count(x, 1, n_split, pred);
    const u64 s_f2 = n_split < x ? floor_sum_count(x, n_split + 1, x, pred) : 0;

    // Window (n_split, d_cap] drives the sawtooth terms; d <= n_split
    // contributes the small-d sawtooth correction; the full main term runs
    // over every indicator value d <= d_cap.
    std::vector<u64> window, small_d;
    for (u64 d = 1; d <= d_cap; ++d) {
        if (!pred(d)) continue;
        (d <= n_split ? small_d : window).push_back(d);
    }

    WindowSums w = window_sums(x, window, opts.exact_term_limit);

    // Main term over all d <= d_cap plus the small-d sawtooth correction.
    bool exact = w.exact && small_d.size() <= opts.exact_term_limit;
    CompensatedSum small_main_f, small_rho_f;
    std::vector<Rational> small_main_terms, small_rho_terms;
    for (u64 d : small_d) {
        double dd = static_cast<double>(d);
        small_main_f.add(static_cast<double>(x) / (dd * (dd + 1.0)));
        Rational delta_rho = Rational(rho(x, d + 1) - rho(x, d));
        small_rho_f.add(rational_to_double(delta_rho));
        if (exact) {
            small_main_terms.push_back(
                Rational(rational_from_u64(x) / (rational_from_u64(d) * rational_from_u64(d + 1))));
            small_rho_terms.push_back(std::move(delta_rho));
        }
    }

    SumReport rep;
    rep.total = TermValue::from_count(s_f1 + s_f2);
    rep.push("s_f1", TermValue::from_count(s_f1));
    rep.push("s_f2", TermValue::from_count(s_f2));

    Rational small_rho, main_all;
    double small_rho_d = small_rho_f.value();
    double main_all_d = w.main_f + small_main_f.value();
    if (exact) {
        small_rho = balanced_sum(std::move(small_rho_terms));
        main_all = Rational(w.main + balanced_sum(std::move(small_main_terms)));
        rep.push("main_d_range", TermValue::from_exact(main_all));
        rep.push("small_d_rho", TermValue::from_exact(small_rho));
    } else {
        rep.push("main_d_range", TermValue::from_double(main_all_d));
        rep.push("small_d_rho", TermValue::from_double(small_rho_d));
    }
    push_window_terms(rep, w, "main_window", "r1_f", "r0_f");
    rep.push("tail", scaled_tail_enclosure(
                         x, d_cap, std::max<u64>(d_cap * opts.tail_horizon_factor, 1000), f));
    rep.push("n_split", TermValue::from_count(n_split));
    rep.push("d_cap", TermValue::from_count(d_cap));

    // Per divisor d, floor(x/d) - floor(x/(d+1)) = x/(d(d+1)) + rho(x/(d+1)) - rho(x/d),
    // so main_d_range + r1_f - r0_f + small_d_rho equals the full interchange
    // count over d <= d_cap. S_f2 clips those blocks to n > n_split; the
    // residual is the exact boundary discrepancy and is integer-valued.
    if (exact) {
        Rational recon = Rational(main_all + w.r1 - w.r0 + small_rho);
        Rational res = rational_from_u64(s_f2) - recon;
        rep.residual = TermValue::from_exact(res);
        rep.residual_exact = true;
    } else {
        rep.residual = TermValue::from_double(static_cast<double>(s_f2) -
                                              (main_all_d + w.r1_f - w.r0_f + small_rho_d));
        rep.residual_exact = false;
    }
    return rep;
}

}  // namespace floorsums
