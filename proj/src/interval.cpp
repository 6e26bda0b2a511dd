#include "floorsums/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace floorsums {

Interval::Interval(mpfr_prec_t prec) : lo_(prec), hi_(prec) {
    mpfr_set_zero(lo_.raw(), 0);
    mpfr_set_zero(hi_.raw(), 0);
}

mpfr_prec_t Interval::precision() const { return mpfr_get_prec(lo_.raw()); }

Interval Interval::from_rational(const Rational& r, mpfr_prec_t prec) {
    Interval out(prec);
    mpfr_set_q(out.lo_.raw(), r.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(out.hi_.raw(), r.get_mpq_t(), MPFR_RNDU);
    return out;
}

Interval Interval::from_ui(unsigned long n, mpfr_prec_t prec) {
    Interval out(prec);
    mpfr_set_ui(out.lo_.raw(), n, MPFR_RNDD);
    mpfr_set_ui(out.hi_.raw(), n, MPFR_RNDU);
    return out;
}

Interval Interval::from_rational_with_error(const Rational& center, const Rational& err,
                                            mpfr_prec_t prec) {
    if (sgn(err) < 0) throw std::invalid_argument("interval: negative error bound");
    return from_bounds(Rational(center - err), Rational(center + err), prec);
}

Interval Interval::from_bounds(const Rational& lo, const Rational& hi, mpfr_prec_t prec) {
    if (lo > hi) throw std::invalid_argument("interval: lo > hi");
    Interval out(prec);
    mpfr_set_q(out.lo_.raw(), lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(out.hi_.raw(), hi.get_mpq_t(), MPFR_RNDU);
    return out;
}

Interval Interval::operator+(const Interval& o) const {
    Interval out(precision());
    mpfr_add(out.lo_.raw(), lo_.raw(), o.lo_.raw(), MPFR_RNDD);
    mpfr_add(out.hi_.raw(), hi_.raw(), o.hi_.raw(), MPFR_RNDU);
    return out;
}

Interval& Interval::operator+=(const Interval& o) {
    mpfr_add(lo_.raw(), lo_.raw(), o.lo_.raw(), MPFR_RNDD);
    mpfr_add(hi_.raw(), hi_.raw(), o.hi_.raw(), MPFR_RNDU);
    return *this;
}

Interval Interval::operator-(const Interval& o) const {
    Interval out(precision());
    mpfr_sub(out.lo_.raw(), lo_.raw(), o.hi_.raw(), MPFR_RNDD);
    mpfr_sub(out.hi_.raw(), hi_.raw(), o.lo_.raw(), MPFR_RNDU);
    return out;
}

Interval Interval::operator*(const Interval& o) const {
    // General sign handling: corner products with outward rounding.
    Interval out(precision());
    BigFloat cand(precision());
    bool first = true;
    auto consider = [&](mpfr_srcptr a, mpfr_srcptr b) {
        mpfr_mul(cand.raw(), a, b, MPFR_RNDD);
        if (first || mpfr_cmp(cand.raw(), out.lo_.raw()) < 0) mpfr_set(out.lo_.raw(), cand.raw(), MPFR_RNDD);
        mpfr_mul(cand.raw(), a, b, MPFR_RNDU);
        if (first || mpfr_cmp(cand.raw(), out.hi_.raw()) > 0) mpfr_set(out.hi_.raw(), cand.raw(), MPFR_RNDU);
        first = false;
    };
    consider(lo_.raw(), o.lo_.raw());
    consider(lo_.raw(), o.hi_.raw());
    consider(hi_.raw(), o.lo_.raw());
    consider(hi_.raw(), o.hi_.raw());
    return out;
}

Interval Interval::mul_rational(const Rational& r) const {
    return *this * from_rational(r, precision());
}

Interval Interval::neg() const {
    Interval out(precision());
    mpfr_neg(out.lo_.raw(), hi_.raw(), MPFR_RNDD);
    mpfr_neg(out.hi_.raw(), lo_.raw(), MPFR_RNDU);
    return out;
}

Interval Interval::log() const {
    if (!is_positive()) throw std::domain_error("interval log: lower bound must be positive");
    Interval out(precision());
    mpfr_log(out.lo_.raw(), lo_.raw(), MPFR_RNDD);
    mpfr_log(out.hi_.raw(), hi_.raw(), MPFR_RNDU);
    return out;
}

Interval Interval::widen(const Rational& eps) const {
    if (sgn(eps) < 0) throw std::invalid_argument("interval widen: negative epsilon");
    Interval e = from_rational(eps, precision());
    Interval out(precision());
    mpfr_sub(out.lo_.raw(), lo_.raw(), e.hi_.raw(), MPFR_RNDD);
    mpfr_add(out.hi_.raw(), hi_.raw(), e.hi_.raw(), MPFR_RNDU);
    return out;
}

double Interval::midpoint() const {
    BigFloat m(precision());
    mpfr_add(m.raw(), lo_.raw(), hi_.raw(), MPFR_RNDN);
    mpfr_div_ui(m.raw(), m.raw(), 2, MPFR_RNDN);
    return m.to_double();
}

double Interval::width() const {
    BigFloat w(precision());
    mpfr_sub(w.raw(), hi_.raw(), lo_.raw(), MPFR_RNDU);
    return mpfr_get_d(w.raw(), MPFR_RNDU);
}

bool Interval::overlaps(const Interval& o) const {
    return mpfr_cmp(lo_.raw(), o.hi_.raw()) <= 0 && mpfr_cmp(o.lo_.raw(), hi_.raw()) <= 0;
}

bool Interval::contains(const Rational& r) const {
    return mpfr_cmp_q(lo_.raw(), r.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.raw(), r.get_mpq_t()) >= 0;
}

bool Interval::contains(double v) const {
    return mpfr_cmp_d(lo_.raw(), v) <= 0 && mpfr_cmp_d(hi_.raw(), v) >= 0;
}

bool Interval::is_positive() const { return mpfr_sgn(lo_.raw()) > 0; }

namespace {
std::string format_endpoint(mpfr_srcptr v, int digits) {
    char buf[128];
    if (digits < 2) digits = 2;
    if (digits > 60) digits = 60;
    mpfr_snprintf(buf, sizeof buf, "%.*Rg", digits, v);
    return buf;
}
}  // namespace

std::string Interval::lower_string(int digits) const { return format_endpoint(lo_.raw(), digits); }
std::string Interval::upper_string(int digits) const { return format_endpoint(hi_.raw(), digits); }

}  // namespace floorsums
