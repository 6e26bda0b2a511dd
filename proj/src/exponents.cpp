#include "floorsums/exponents.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace floorsums {

PiecewiseExponentBound::PiecewiseExponentBound(std::vector<ExponentPiece> pieces)
    : pieces_(std::move(pieces)) {
    if (pieces_.empty()) throw std::invalid_argument("piecewise bound: no pieces");
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        if (pieces_[i].d_lo >= pieces_[i].d_hi)
            throw std::invalid_argument("piecewise bound: empty piece range");
        if (i > 0 && pieces_[i].d_lo != pieces_[i - 1].d_hi)
            throw std::invalid_argument("piecewise bound: ranges must be contiguous");
    }
}

Rational PiecewiseExponentBound::eval(const Rational& d) const {
    if (d < domain_lo() || d >= domain_hi())
        throw std::domain_error("piecewise bound: d outside the table domain");
    for (const auto& p : pieces_)
        if (d >= p.d_lo && d < p.d_hi) return p.form.eval(d);
    throw std::logic_error("piecewise bound: unreachable");
}

std::pair<Rational, Rational> PiecewiseExponentBound::max_over_range(const Rational& d_lo,
                                                                     const Rational& d_hi) const {
    if (d_lo > d_hi) throw std::invalid_argument("max_over_range: empty range");
    if (d_lo < domain_lo() || d_lo >= domain_hi())
        throw std::domain_error("max_over_range: range start outside the table domain");
    Rational hi = std::min(d_hi, Rational(domain_hi()));

    // Candidate points: the range ends plus every piece corner inside.
    std::vector<Rational> candidates{d_lo};
    for (const auto& p : pieces_) {
        if (p.d_lo > d_lo && p.d_lo < hi) candidates.push_back(p.d_lo);
    }
    if (d_hi < domain_hi()) candidates.push_back(d_hi);

    std::optional<Rational> best;
    Rational arg = d_lo;
    auto consider = [&](const Rational& d, const Rational& v) {
        if (!best || v > *best) {
            best = v;
            arg = d;
        }
    };
    for (const auto& d : candidates) consider(d, eval(d));
    // Right-open pieces: the supremum of an increasing piece is the limit at
    // its right edge, attained in exact arithmetic by evaluating the form
    // there even though the piece itself is open on that side.
    for (const auto& p : pieces_) {
        if (p.d_hi > d_lo && p.d_hi <= hi && sgn(p.form.b) > 0)
            consider(p.d_hi, p.form.eval(p.d_hi));
    }
    return {*best, arg};
}

Crossover crossover(const LinearExponent& f, const LinearExponent& g) {
    if (f.b == g.b) {
        if (f.a == g.a) return {Crossover::Kind::Identical, Rational(0)};
        return {Crossover::Kind::Parallel, Rational(0)};
    }
    // a1 + b1 d = a2 + b2 d  =>  d = (a2 - a1)/(b1 - b2)
    return {Crossover::Kind::Point, Rational((g.a - f.a) / (f.b - g.b))};
}

std::vector<Rational> crossovers(const std::vector<LinearExponent>& forms) {
    if (forms.size() < 2) throw std::invalid_argument("crossovers: need at least two forms");
    for (std::size_t i = 0; i < forms.size(); ++i)
        for (std::size_t j = i + 1; j < forms.size(); ++j)
            if (forms[i] == forms[j])
                throw std::invalid_argument("crossovers: identical forms are degenerate");
    std::vector<Rational> out;
    for (std::size_t i = 0; i < forms.size(); ++i)
        for (std::size_t j = i + 1; j < forms.size(); ++j) {
            Crossover c = crossover(forms[i], forms[j]);
            if (c.kind == Crossover::Kind::Point) out.push_back(c.d);
        }
    return out;
}

// ---------------------------------------------------------------------------
// Concrete tables
// ---------------------------------------------------------------------------

Rational critical_exponent() { return make_rational(435, 923); }
Rational flat_branch_start() { return make_rational(482, 923); }
Rational envelope_domain_end() { return make_rational(488, 923); }

PiecewiseExponentBound mangoldt_envelope_table() {
    std::vector<ExponentPiece> pieces;
    pieces.push_back({make_rational(0, 1), make_rational(3, 7),
                      {make_rational(1, 2), make_rational(-1, 6)}});
    pieces.push_back({make_rational(3, 7), make_rational(6, 13),
                      {make_rational(1, 3), make_rational(2, 9)}});
    pieces.push_back({make_rational(6, 13), flat_branch_start(),
                      {make_rational(1, 6), make_rational(7, 12)}});
    pieces.push_back({flat_branch_start(), envelope_domain_end(),
                      {critical_exponent(), make_rational(0, 1)}});
    return PiecewiseExponentBound(std::move(pieces));
}

PiecewiseExponentBound prime_envelope_table() {
    // Merge the D^{1/2} form (exponent d/2) into the Mangoldt table by
    // taking the pointwise maximum. On every piece both forms are linear,
    // so comparing piece corners decides domination; if d/2 won anywhere a
    // piece would need splitting at the crossover. On this table d/2 never
    // wins (verified by verify_envelope_table), so the merged table keeps
    // the original forms.
    const LinearExponent sqrt_form{make_rational(0, 1), make_rational(1, 2)};
    PiecewiseExponentBound base = mangoldt_envelope_table();
    std::vector<ExponentPiece> merged;
    for (const auto& p : base.pieces()) {
        Rational at_lo = p.form.eval(p.d_lo);
        Rational at_hi = p.form.eval(p.d_hi);
        Rational sq_lo = sqrt_form.eval(p.d_lo);
        Rational sq_hi = sqrt_form.eval(p.d_hi);
        if (sq_lo > at_lo || sq_hi > at_hi)
            throw std::logic_error("prime envelope: D^{1/2} term dominates unexpectedly");
        merged.push_back(p);
    }
    return PiecewiseExponentBound(std::move(merged));
}

std::vector<LinearExponent> envelope_source_forms() {
    return {
        {make_rational(1, 6), make_rational(7, 12)},   // x^{1/6} D^{7/12}
        {make_rational(0, 1), make_rational(5, 6)},    // D^{5/6}
        {make_rational(1, 3), make_rational(2, 9)},    // x^{1/3} D^{2/9}
        {make_rational(1, 2), make_rational(-1, 6)},   // x^{1/2} D^{-1/6}
    };
}

std::pair<Rational, Rational> admissible_theta_range() {
    // Upper endpoint: the first-branch value at d = 1 - theta equals the
    // flat value when (theta + 2)/6 = 435/923.
    Rational upper = Rational(6 * critical_exponent() - 2);
    Rational lower = critical_exponent();
    return {lower, upper};
}

namespace {
std::string rat(const Rational& r) { return rational_to_string(r); }
}  // namespace

std::vector<TableCheck> verify_envelope_table() {
    std::vector<TableCheck> out;
    PiecewiseExponentBound table = mangoldt_envelope_table();
    const auto& pieces = table.pieces();
    std::vector<LinearExponent> forms = envelope_source_forms();

    // (i) On the first three branches the stated form is the pointwise
    // maximum of all four source forms (endpoint checks suffice: linear).
    for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
        bool ok = true;
        std::ostringstream detail;
        for (const auto& f : forms) {
            if (f == pieces[i].form) continue;
            Rational lo_gap = pieces[i].form.eval(pieces[i].d_lo) - f.eval(pieces[i].d_lo);
            Rational hi_gap = pieces[i].form.eval(pieces[i].d_hi) - f.eval(pieces[i].d_hi);
            if (sgn(lo_gap) < 0 || sgn(hi_gap) < 0) {
                ok = false;
                detail << "form (" << rat(f.a) << "," << rat(f.b) << ") exceeds branch " << i << "; ";
            }
        }
        out.push_back({"branch_" + std::to_string(i) + "_dominates", ok, detail.str()});
    }

    // (ii) Adjacent branches meet continuously.
    {
        Rational d1 = make_rational(3, 7);
        Rational v_left = pieces[0].form.eval(d1);
        Rational v_right = pieces[1].form.eval(d1);
        out.push_back({"continuity_at_3_7", v_left == v_right && v_left == d1,
                       "both sides " + rat(v_left)});
        Rational d2 = make_rational(6, 13);
        Rational w_left = pieces[1].form.eval(d2);
        Rational w_right = pieces[2].form.eval(d2);
        out.push_back({"continuity_at_6_13", w_left == w_right && w_left == make_rational(17, 39),
                       "both sides " + rat(w_left)});
    }

    // (iii) The flat branch enters at the third branch's value:
    // 1/6 + (7/12)(482/923) = 435/923.
    {
        Rational entry = pieces[2].form.eval(flat_branch_start());
        out.push_back({"flat_entry_value", entry == critical_exponent(),
                       "third branch at 482/923 is " + rat(entry)});
    }

    // (iv) D^{5/6} is dominated on the whole table domain [0, 488/923):
    // endpoint checks per piece, including the flat branch.
    {
        LinearExponent five_sixths{make_rational(0, 1), make_rational(5, 6)};
        bool ok = true;
        std::ostringstream detail;
        for (const auto& p : pieces) {
            if (p.form.eval(p.d_lo) < five_sixths.eval(p.d_lo) ||
                p.form.eval(p.d_hi) < five_sixths.eval(p.d_hi)) {
                ok = false;
                detail << "D^{5/6} exceeds the table on [" << rat(p.d_lo) << "," << rat(p.d_hi)
                       << "); ";
            }
        }
        out.push_back({"d_5_6_dominated", ok, detail.str()});
    }

    // The sqrt form of the prime-sum table never dominates either.
    {
        bool ok = true;
        try {
            prime_envelope_table();
        } catch (const std::logic_error&) {
            ok = false;
        }
        out.push_back({"sqrt_term_absorbed", ok, ""});
    }

    // Global extrema: max 1/2 at d = 0; the branch-boundary minimum is the
    // flat value 435/923 at d = 482/923.
    {
        auto [mx, arg] = table.max_over_range(make_rational(0, 1), envelope_domain_end());
        out.push_back({"global_max_half_at_zero", mx == make_rational(1, 2) && arg == 0,
                       "max " + rat(mx) + " at d = " + rat(arg)});
        Rational boundary_min = std::min({table.eval(make_rational(3, 7)),
                                          table.eval(make_rational(6, 13)),
                                          table.eval(flat_branch_start())});
        out.push_back({"boundary_min_is_flat_value", boundary_min == critical_exponent(),
                       "min over boundaries " + rat(boundary_min)});
    }

    // Theta-range endpoints re-derived from the table.
    {
        auto [lo, hi] = admissible_theta_range();
        bool ok = lo == critical_exponent() && Rational((hi + 2) / 6) == critical_exponent() &&
                  lo < hi && hi < 1;
        out.push_back({"theta_range_endpoints", ok, rat(lo) + " .. " + rat(hi)});
    }

    return out;
}

}  // namespace floorsums
