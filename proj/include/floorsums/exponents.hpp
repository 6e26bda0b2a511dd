#pragma once

// Exact rational algebra over exponents of x. A bound of the shape
// x^a * D^b with D = x^d is the linear form a + b*d in the exponent of x;
// the dyadic envelope for the Mangoldt-weighted sawtooth sums is a piecewise
// table of such forms. Everything in this module is exact; a float here is
// a defect.

#include <optional>
#include <string>
#include <vector>

#include "floorsums/rational.hpp"

namespace floorsums {

struct LinearExponent {
    Rational a;  // constant part
    Rational b;  // coefficient of d

    Rational eval(const Rational& d) const { return Rational(a + b * d); }
    bool operator==(const LinearExponent& o) const { return a == o.a && b == o.b; }
};

struct ExponentPiece {
    Rational d_lo;  // inclusive
    Rational d_hi;  // exclusive (table convention), except the final endpoint
    LinearExponent form;
};

class PiecewiseExponentBound {
  public:
    explicit PiecewiseExponentBound(std::vector<ExponentPiece> pieces);

    const std::vector<ExponentPiece>& pieces() const { return pieces_; }
    Rational domain_lo() const { return pieces_.front().d_lo; }
    Rational domain_hi() const { return pieces_.back().d_hi; }

    // Exact exponent of x at D = x^d. Throws std::domain_error outside
    // [domain_lo, domain_hi).
    Rational eval(const Rational& d) const;

    // Maximum over the closed range [d_lo, d_hi] (d_hi capped at the domain
    // end), together with an attaining d. Linear pieces attain extrema at
    // endpoints, so only piece corners are inspected.
    std::pair<Rational, Rational> max_over_range(const Rational& d_lo,
                                                 const Rational& d_hi) const;

  private:
    std::vector<ExponentPiece> pieces_;
};

// Intersection of two linear forms.
struct Crossover {
    enum class Kind { Point, Parallel, Identical };
    Kind kind;
    Rational d;  // meaningful only for Kind::Point
};

Crossover crossover(const LinearExponent& f, const LinearExponent& g);

// All pairwise intersection points of a family of forms (parallel pairs
// contribute nothing; identical pairs are rejected as degenerate input).
std::vector<Rational> crossovers(const std::vector<LinearExponent>& forms);

// ---------------------------------------------------------------------------
// The concrete tables for this project
// ---------------------------------------------------------------------------

// Critical exponents of the sub-sqrt error analysis (all exact rationals).
Rational critical_exponent();     // 435/923: the error-term exponent
Rational flat_branch_start();     // 482/923: where the envelope goes flat
Rational envelope_domain_end();   // 488/923: end of the envelope table

// Envelope for the Mangoldt-weighted sawtooth sum over a dyadic range
// (D, t], D = x^d: four branches on [0, 488/923).
PiecewiseExponentBound mangoldt_envelope_table();

// Same envelope with the extra D^{1/2} form merged in (the prime-only sum
// picks up a sqrt term from partial summation); the merge is verified to be
// a no-op on the table domain by verify_envelope_table.
PiecewiseExponentBound prime_envelope_table();

// The four source forms the first three branches are the maximum of:
// x^{1/6} D^{7/12}, D^{5/6}, x^{1/3} D^{2/9}, x^{1/2} D^{-1/6}.
std::vector<LinearExponent> envelope_source_forms();

// Admissible theta window (435/923, 764/923) for the dyadic argument:
// the upper endpoint solves (theta + 2)/6 = 435/923, the lower one makes
// x^{435/923} negligible against x^theta. Both re-derived exactly here.
std::pair<Rational, Rational> admissible_theta_range();

struct TableCheck {
    std::string name;
    bool ok;
    std::string detail;
};

// Internal-consistency report for the envelope table: branch domination,
// continuity at 3/7 and 6/13, the flat-branch entry value, domination of
// the D^{5/6} form, and the theta-range endpoints. Failures are reported,
// not thrown.
std::vector<TableCheck> verify_envelope_table();

}  // namespace floorsums
