#pragma once

#include <algorithm>

#include "ifscdf/system.hpp"

namespace ifscdf::detail {

// One greedy expansion step: select the half-open cell containing y, then
// pull y back through the exact inverse. Shared by digit_expand and the
// general CDF evaluator.
inline int greedy_step(const IfsSystem& system, double& y) {
  const int n = system.cell_index(y);
  y = std::clamp(system.map(n).inverse(y), 0.0, 1.0);
  return n;
}

// One base-(N+1) integer-recurrence step for equal-width systems:
// digit = floor(base * y), y <- base * y - digit. y >= 1 yields the top
// digit forever, which is the expansion used for x = 1.
inline int base_step(int base, double& y) {
  if (y >= 1.0) {
    y = 1.0;
    return base - 1;
  }
  int d = static_cast<int>(static_cast<double>(base) * y);
  d = std::min(d, base - 1);
  y = static_cast<double>(base) * y - static_cast<double>(d);
  y = std::clamp(y, 0.0, 1.0);
  return d;
}

// Compensated (Kahan) accumulator; keeps long gap-series and quadrature sums
// within a couple of ulp so the enclosure invariants survive in binary64.
class CompensatedSum {
 public:
  void add(double term) {
    const double y = term - carry_;
    const double t = sum_ + y;
    carry_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

}  // namespace ifscdf::detail
