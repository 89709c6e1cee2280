#pragma once

#include <cmath>
#include <cstddef>

// Compensated summation. Spectral sums run over 1e2..1e6 terms spanning many
// orders of magnitude; Neumaier's variant of Kahan summation keeps the
// accumulated roundoff at a few ulps of the true sum independent of length.

namespace qcurv {

class neumaier_sum {
 public:
  void add(double x) {
    const double t = s_ + x;
    if (std::abs(s_) >= std::abs(x))
      c_ += (s_ - t) + x;  // low-order bits of x lost in t
    else
      c_ += (x - t) + s_;  // low-order bits of s_ lost in t
    s_ = t;
  }
  void operator+=(double x) { add(x); }
  double value() const { return s_ + c_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

// Sum of a callable over [0, count) with compensation.
template <class F>
double compensated_sum(std::size_t count, F&& term) {
  neumaier_sum acc;
  for (std::size_t i = 0; i < count; ++i) acc.add(term(i));
  return acc.value();
}

}  // namespace qcurv
