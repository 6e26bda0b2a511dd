#pragma once

// Exact linear combinations sum_i c_i * log(p_i) with rational coefficients
// and prime bases. Mangoldt-weighted sums are kept in this form so that two
// computation routes can be compared exactly as multisets before any float
// rounding enters.

#include <cmath>
#include <map>

#include "floorsums/compensated.hpp"
#include "floorsums/rational.hpp"

namespace floorsums {

class PrimeLogSum {
  public:
    PrimeLogSum() = default;
    PrimeLogSum(std::initializer_list<std::pair<u64, Rational>> terms) {
        for (const auto& [p, c] : terms) add(p, c);
    }

    void add(u64 prime, const Rational& coeff) {
        if (sgn(coeff) == 0) return;
        auto [it, inserted] = coeff_.try_emplace(prime, coeff);
        if (!inserted) {
            it->second += coeff;
            if (sgn(it->second) == 0) coeff_.erase(it);
        }
    }

    void add_count(u64 prime, u64 count) { add(prime, rational_from_u64(count)); }

    PrimeLogSum& operator+=(const PrimeLogSum& o) {
        for (const auto& [p, c] : o.coeff_) add(p, c);
        return *this;
    }

    PrimeLogSum& operator-=(const PrimeLogSum& o) {
        for (const auto& [p, c] : o.coeff_) add(p, Rational(-c));
        return *this;
    }

    bool operator==(const PrimeLogSum& o) const { return coeff_ == o.coeff_; }

    bool empty() const { return coeff_.empty(); }
    std::size_t size() const { return coeff_.size(); }
    const std::map<u64, Rational>& terms() const { return coeff_; }

    // Compensated float evaluation of sum c_i * log p_i.
    double value() const {
        CompensatedSum s;
        for (const auto& [p, c] : coeff_)
            s.add(rational_to_double(c) * std::log(static_cast<double>(p)));
        return s.value();
    }

  private:
    std::map<u64, Rational> coeff_;
};

}  // namespace floorsums
