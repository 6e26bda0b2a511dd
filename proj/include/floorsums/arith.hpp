#pragma once

// Exact primitive arithmetic for 64-bit inputs: deterministic primality,
// prime-power decomposition, the von Mangoldt / Chebyshev-theta weights,
// the sawtooth rho(t) = t - [t] - 1/2 at rational arguments, integer k-th
// roots, exact floor(x^(a/b)), and a segmented sieve.
//
// Everything here is bit-exact for inputs below 2^63 and safe to call from
// multiple threads (pure functions; tables are write-once).

#include <cstdint>
#include <functional>
#include <vector>

#include "floorsums/rational.hpp"

namespace floorsums {

inline constexpr u64 kMaxInput = (u64(1) << 63);  // exclusive upper bound

// ---------------------------------------------------------------------------
// Primality and prime powers
// ---------------------------------------------------------------------------

// Deterministic Miller-Rabin with the witness set {2,3,...,37} (the first
// twelve primes), proven complete for n < 3.317e24 (Sorenson & Webster,
// "Strong pseudoprimes to twelve prime bases"), which covers the full
// 64-bit range. No probabilistic answers.
bool is_prime(u64 n);

struct MangoldtValue {
    u64 prime = 0;       // 0 encodes the zero value
    unsigned exponent = 0;

    bool is_zero() const { return prime == 0; }
    bool operator==(const MangoldtValue& o) const {
        return prime == o.prime && exponent == o.exponent;
    }
};

// Lambda(n): (p, alpha) iff n = p^alpha, zero otherwise (including n = 1).
MangoldtValue mangoldt(u64 n);

// theta(n): (p, 1) iff n is prime, zero otherwise (vanishes on p^a, a >= 2).
MangoldtValue chebyshev_theta_indicator(u64 n);

bool is_prime_power(u64 n);

// ---------------------------------------------------------------------------
// Exact roots and rational powers of integers
// ---------------------------------------------------------------------------

// floor(n^(1/k)), exact. k >= 1.
u64 iroot(u64 n, unsigned k);

// r^k if it fits in 64 bits, otherwise nullopt-like sentinel via bool.
bool pow_fits_u64(u64 r, unsigned k, u64& out);

// Largest m with m^b <= x^a, for a reduced exponent a/b in (0, 1].
// Computed with exact big-integer powering; never via floating point.
u64 floor_pow(u64 x, u64 a, u64 b);
u64 floor_pow(u64 x, const Rational& exponent);

// Smallest m with m^b >= x^a.
u64 ceil_pow(u64 x, u64 a, u64 b);
u64 ceil_pow(u64 x, const Rational& exponent);

// ---------------------------------------------------------------------------
// Sawtooth
// ---------------------------------------------------------------------------

// rho(num/den) = num/den - [num/den] - 1/2 = (num mod den)/den - 1/2.
// Always computed from integer modular arithmetic; result in [-1/2, 1/2).
Rational rho(u64 num, u64 den);

// ---------------------------------------------------------------------------
// Segmented sieve
// ---------------------------------------------------------------------------

inline constexpr u64 kDefaultSegmentEntries = u64(1) << 22;
inline constexpr u64 kDefaultTableBudget = u64(1) << 26;

// Write-once primality bitmap over [lo, hi]; bit i set iff lo + i is prime.
class PrimalityTable {
  public:
    PrimalityTable(u64 lo, u64 hi, std::vector<u64> bits)
        : lo_(lo), hi_(hi), bits_(std::move(bits)) {}

    u64 lo() const { return lo_; }
    u64 hi() const { return hi_; }

    bool is_prime(u64 n) const;  // n must lie in [lo, hi]
    u64 count() const;

    template <class F>
    void for_each_prime(F f) const {
        for (std::size_t w = 0; w < bits_.size(); ++w) {
            u64 word = bits_[w];
            while (word) {
                unsigned b = static_cast<unsigned>(__builtin_ctzll(word));
                f(lo_ + 64 * w + b);
                word &= word - 1;
            }
        }
    }

    std::vector<u64> primes() const;

  private:
    u64 lo_, hi_;
    std::vector<u64> bits_;
};

// Exact primality bitmap via a segmented sieve seeded by primes up to
// sqrt(hi). Requires 2 <= lo <= hi < 2^63 and hi - lo within the entry
// budget (resource error otherwise).
PrimalityTable sieve_range(u64 lo, u64 hi, u64 max_entries = kDefaultTableBudget,
                           u64 segment_entries = kDefaultSegmentEntries);

// Streaming prime visitor over [lo, hi]; no table-size budget (segments are
// recycled). Visits primes in increasing order.
void visit_primes(u64 lo, u64 hi, const std::function<void(u64)>& f,
                  u64 segment_entries = kDefaultSegmentEntries);

// Collects the primes in [lo, hi] into a vector (small ranges).
std::vector<u64> primes_in_range(u64 lo, u64 hi);

}  // namespace floorsums
