#pragma once

// Minimal directed-rounding interval arithmetic over MPFR. Every constant
// reported by the constants module carries one of these enclosures; two
// independent computation routes must produce overlapping intervals.

#include <mpfr.h>

#include <string>

#include "floorsums/rational.hpp"

namespace floorsums {

// RAII wrapper for a single mpfr_t.
class BigFloat {
  public:
    explicit BigFloat(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  private:
    mpfr_t v_;
};

class Interval {
  public:
    explicit Interval(mpfr_prec_t prec = 320);

    static Interval from_rational(const Rational& r, mpfr_prec_t prec = 320);
    static Interval from_ui(unsigned long n, mpfr_prec_t prec = 320);
    // [r - err, r + err] for an exact center with a rational error bound.
    static Interval from_rational_with_error(const Rational& center, const Rational& err,
                                             mpfr_prec_t prec = 320);
    static Interval from_bounds(const Rational& lo, const Rational& hi, mpfr_prec_t prec = 320);

    mpfr_prec_t precision() const;

    Interval operator+(const Interval& o) const;
    Interval operator-(const Interval& o) const;
    Interval operator*(const Interval& o) const;
    Interval& operator+=(const Interval& o);

    Interval mul_rational(const Rational& r) const;
    Interval neg() const;

    // Natural log; requires a strictly positive lower bound.
    Interval log() const;

    // Widens both ends outward by a nonnegative rational.
    Interval widen(const Rational& eps) const;

    double midpoint() const;
    double width() const;
    double lower() const { return mpfr_get_d(lo_.raw(), MPFR_RNDD); }
    double upper() const { return mpfr_get_d(hi_.raw(), MPFR_RNDU); }

    bool overlaps(const Interval& o) const;
    bool contains(const Rational& r) const;
    bool contains(double v) const;
    bool is_positive() const;  // lower bound > 0

    // Decimal rendering of both endpoints, round-to-nearest at the given
    // number of significant digits.
    std::string lower_string(int digits = 25) const;
    std::string upper_string(int digits = 25) const;

  private:
    BigFloat lo_, hi_;
};

}  // namespace floorsums
