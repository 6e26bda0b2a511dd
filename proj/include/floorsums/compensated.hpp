#pragma once

#include <cmath>

namespace floorsums {

// Neumaier variant of Kahan summation. Used wherever a float accumulation
// can exceed ~1e3 terms, to keep the rounding budget near 1 ulp of the total.
class CompensatedSum {
  public:
    void add(double term) {
        double t = sum_ + term;
        if (std::fabs(sum_) >= std::fabs(term))
            comp_ += (sum_ - t) + term;
        else
            comp_ += (term - t) + sum_;
        sum_ = t;
    }

    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace floorsums
