#include "floorsums/arith.hpp"

#include <gmp.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace floorsums {

namespace {

void check_range(u64 n, const char* what) {
    if (n >= kMaxInput)
        throw std::out_of_range(std::string(what) + ": input must be below 2^63");
}

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// One strong-pseudoprime round for odd n = d * 2^s + 1.
bool witness_passes(u64 n, u64 d, int s, u64 a) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

constexpr u64 kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

bool is_prime(u64 n) {
    check_range(n, "is_prime");
    if (n < 2) return false;
    for (u64 p : kWitnesses) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n < 41 * 41) return true;

    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : kWitnesses)
        if (!witness_passes(n, d, s, a)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Integer roots
// ---------------------------------------------------------------------------

bool pow_fits_u64(u64 r, unsigned k, u64& out) {
    u64 acc = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (r != 0 && acc > ~u64(0) / r) return false;
        acc *= r;
    }
    out = acc;
    return true;
}

u64 iroot(u64 n, unsigned k) {
    if (k == 0) throw std::domain_error("iroot: k must be positive");
    if (k == 1 || n < 2) return n;
    if (k >= 64) return 1;

    // Float guess, then exact fix-up. The long double mantissa leaves the
    // guess within +-1 of the truth; the loop settles it with integer checks.
    u64 r = static_cast<u64>(powl(static_cast<long double>(n), 1.0L / k));
    r = std::max<u64>(r, 1) + 1;
    auto too_big = [&](u64 c) {
        u64 p;
        return !pow_fits_u64(c, k, p) || p > n;
    };
    while (too_big(r)) --r;
    while (!too_big(r + 1)) ++r;
    return r;
}

u64 floor_pow(u64 x, u64 a, u64 b) {
    if (x == 0 || b == 0) throw std::domain_error("floor_pow: x and b must be positive");
    if (a > b) throw std::domain_error("floor_pow: exponent must be at most 1");
    check_range(x, "floor_pow");
    if (a == 0) return 1;
    if (a == b) return x;
    mpz_class t;
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(x), static_cast<unsigned long>(a));
    mpz_root(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(b));
    return mpz_get_ui(t.get_mpz_t());
}

u64 ceil_pow(u64 x, u64 a, u64 b) {
    if (x == 0 || b == 0) throw std::domain_error("ceil_pow: x and b must be positive");
    if (a > b) throw std::domain_error("ceil_pow: exponent must be at most 1");
    check_range(x, "ceil_pow");
    if (a == 0) return 1;
    if (a == b) return x;
    mpz_class t;
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(x), static_cast<unsigned long>(a));
    int exact = mpz_root(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(b));
    u64 m = mpz_get_ui(t.get_mpz_t());
    return exact ? m : m + 1;
}

namespace {
std::pair<u64, u64> reduced_exponent(const Rational& exponent) {
    if (sgn(exponent) <= 0 || exponent > 1)
        throw std::domain_error("exponent must lie in (0, 1]");
    if (!exponent.get_num().fits_ulong_p() || !exponent.get_den().fits_ulong_p())
        throw std::domain_error("exponent numerator/denominator too large");
    return {exponent.get_num().get_ui(), exponent.get_den().get_ui()};
}
}  // namespace

u64 floor_pow(u64 x, const Rational& exponent) {
    auto [a, b] = reduced_exponent(exponent);
    return floor_pow(x, a, b);
}

u64 ceil_pow(u64 x, const Rational& exponent) {
    auto [a, b] = reduced_exponent(exponent);
    return ceil_pow(x, a, b);
}

// ---------------------------------------------------------------------------
// Mangoldt / theta
// ---------------------------------------------------------------------------

MangoldtValue mangoldt(u64 n) {
    check_range(n, "mangoldt");
    if (n == 0) throw std::domain_error("mangoldt: n must be positive");
    if (n < 2) return {};

    // Strip exact prime-indexed roots; n = p^e leaves exactly p. Only prime
    // root indices are needed: a perfect (uv)-th power is a perfect v-th power.
    static constexpr unsigned kRootPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                                               29, 31, 37, 41, 43, 47, 53, 59, 61};
    u64 m = n;
    unsigned e = 1;
    for (unsigned q : kRootPrimes) {
        while (q < 64 && (m >> q) != 0) {
            u64 r = iroot(m, q);
            u64 back;
            if (pow_fits_u64(r, q, back) && back == m) {
                m = r;
                e *= q;
            } else {
                break;
            }
        }
    }
    if (!is_prime(m)) return {};
    return {m, e};
}

MangoldtValue chebyshev_theta_indicator(u64 n) {
    check_range(n, "chebyshev_theta_indicator");
    if (n == 0) throw std::domain_error("chebyshev_theta_indicator: n must be positive");
    if (!is_prime(n)) return {};
    return {n, 1};
}

bool is_prime_power(u64 n) {
    check_range(n, "is_prime_power");
    if (n < 2) return false;
    return !mangoldt(n).is_zero();
}

// ---------------------------------------------------------------------------
// Sawtooth
// ---------------------------------------------------------------------------

Rational rho(u64 num, u64 den) {
    if (den == 0) throw std::domain_error("rho: zero denominator");
    Rational r = rational_from_u64(num % den, den);
    r -= make_rational(1, 2);
    return r;
}

// ---------------------------------------------------------------------------
// Segmented sieve
// ---------------------------------------------------------------------------

namespace {

// Odd-only wouldn't simplify the bitmap contract (bit i <=> lo + i prime),
// so segments carry all residues; even bits start cleared via the word
// pattern and odd composites are struck per seed prime.
void sieve_segment(u64 seg_lo, u64 seg_hi, const std::vector<u64>& seed_primes,
                   std::vector<u64>& words) {
    const u64 n_bits = seg_hi - seg_lo + 1;
    const std::size_t n_words = static_cast<std::size_t>((n_bits + 63) / 64);
    words.assign(n_words, 0);

    // Set bits on odd positions only.
    const u64 odd_pattern = 0xAAAAAAAAAAAAAAAAull;  // bits 1,3,5,...
    const u64 even_pattern = 0x5555555555555555ull;
    u64 pattern = (seg_lo % 2 == 0) ? odd_pattern : even_pattern;
    for (auto& w : words) w = pattern;

    auto clear_bit = [&](u64 n) {
        u64 i = n - seg_lo;
        words[i >> 6] &= ~(u64(1) << (i & 63));
    };
    auto set_bit = [&](u64 n) {
        u64 i = n - seg_lo;
        words[i >> 6] |= u64(1) << (i & 63);
    };

    for (u64 p : seed_primes) {
        if (p == 2) continue;
        u128 p2 = u128(p) * p;
        if (p2 > seg_hi) break;
        u64 start = static_cast<u64>(std::max<u128>(p2, u128((seg_lo + p - 1) / p) * p));
        if (start % 2 == 0) start += p;  // only odd multiples need striking
        for (u64 m = start; m <= seg_hi; m += 2 * p) clear_bit(m);
    }

    if (seg_lo <= 2 && 2 <= seg_hi) set_bit(2);
    if (seg_lo <= 1) clear_bit(1);
    if (seg_lo == 0) clear_bit(0);

    // Mask tail bits beyond the segment.
    unsigned tail = static_cast<unsigned>(n_bits & 63);
    if (tail) words.back() &= (u64(1) << tail) - 1;
}

std::vector<u64> seed_primes_up_to(u64 limit) {
    if (limit > (u64(1) << 31))
        throw std::length_error("sieve: sqrt(hi) exceeds the seed-sieve capacity");
    std::vector<bool> comp(static_cast<std::size_t>(limit) + 1, false);
    std::vector<u64> primes;
    for (u64 i = 2; i <= limit; ++i) {
        if (!comp[static_cast<std::size_t>(i)]) {
            primes.push_back(i);
            for (u64 j = i * i; j <= limit; j += i) comp[static_cast<std::size_t>(j)] = true;
        }
    }
    return primes;
}

void visit_segments(u64 lo, u64 hi, u64 segment_entries,
                    const std::function<void(u64, const std::vector<u64>&, u64)>& visit) {
    if (lo > hi) return;
    check_range(hi, "sieve");
    if (segment_entries == 0) throw std::domain_error("sieve: zero segment size");

    const std::vector<u64> seeds = seed_primes_up_to(iroot(hi, 2));
    std::vector<u64> words;
    for (u64 seg_lo = lo; seg_lo <= hi;) {
        u64 seg_hi = std::min(hi, seg_lo + segment_entries - 1);
        sieve_segment(seg_lo, seg_hi, seeds, words);
        visit(seg_lo, words, seg_hi - seg_lo + 1);
        if (seg_hi == hi) break;
        seg_lo = seg_hi + 1;
    }
}

}  // namespace

bool PrimalityTable::is_prime(u64 n) const {
    if (n < lo_ || n > hi_) throw std::out_of_range("PrimalityTable: n outside [lo, hi]");
    u64 i = n - lo_;
    return (bits_[i >> 6] >> (i & 63)) & 1;
}

u64 PrimalityTable::count() const {
    u64 c = 0;
    for (u64 w : bits_) c += static_cast<u64>(__builtin_popcountll(w));
    return c;
}

std::vector<u64> PrimalityTable::primes() const {
    std::vector<u64> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each_prime([&](u64 p) { out.push_back(p); });
    return out;
}

PrimalityTable sieve_range(u64 lo, u64 hi, u64 max_entries, u64 segment_entries) {
    if (lo < 2 || lo > hi) throw std::invalid_argument("sieve_range: need 2 <= lo <= hi");
    check_range(hi, "sieve_range");
    if (hi - lo + 1 > max_entries)
        throw std::length_error("sieve_range: span exceeds the table budget");

    const u64 n_bits = hi - lo + 1;
    std::vector<u64> bits(static_cast<std::size_t>((n_bits + 63) / 64), 0);
    visit_segments(lo, hi, segment_entries, [&](u64 seg_lo, const std::vector<u64>& words, u64 nb) {
        u64 offset = seg_lo - lo;
        const std::size_t n_words = static_cast<std::size_t>((nb + 63) / 64);
        if (offset % 64 == 0) {
            for (std::size_t w = 0; w < n_words; ++w) bits[offset / 64 + w] |= words[w];
        } else {
            for (u64 j = 0; j < nb; ++j) {
                if ((words[j >> 6] >> (j & 63)) & 1) {
                    u64 i = offset + j;
                    bits[i >> 6] |= u64(1) << (i & 63);
                }
            }
        }
    });
    return PrimalityTable(lo, hi, std::move(bits));
}

void visit_primes(u64 lo, u64 hi, const std::function<void(u64)>& f, u64 segment_entries) {
    if (hi < 2 || lo > hi) return;
    lo = std::max<u64>(lo, 2);
    visit_segments(lo, hi, segment_entries, [&](u64 seg_lo, const std::vector<u64>& words, u64 nb) {
        const std::size_t n_words = static_cast<std::size_t>((nb + 63) / 64);
        for (std::size_t w = 0; w < n_words; ++w) {
            u64 word = words[w];
            while (word) {
                unsigned b = static_cast<unsigned>(__builtin_ctzll(word));
                f(seg_lo + 64 * w + b);
                word &= word - 1;
            }
        }
    });
}

std::vector<u64> primes_in_range(u64 lo, u64 hi) {
    std::vector<u64> out;
    visit_primes(lo, hi, [&](u64 p) { out.push_back(p); });
    return out;
}

}  // namespace floorsums
