#pragma once

#include <cstddef>
#include <vector>

#include "ifscdf/system.hpp"

namespace ifscdf {

/// Finite prefix (x_1, ..., x_k) of a symbolic expansion; digits in {0..N}.
class DigitString {
 public:
  DigitString() = default;
  explicit DigitString(std::vector<int> digits);

  int depth() const { return static_cast<int>(digits_.size()); }
  bool empty() const { return digits_.empty(); }
  int operator[](int i) const { return digits_[static_cast<size_t>(i)]; }
  const std::vector<int>& digits() const { return digits_; }

  void push_back(int digit);

  auto begin() const { return digits_.begin(); }
  auto end() const { return digits_.end(); }

  bool operator==(const DigitString&) const = default;

 private:
  std::vector<int> digits_;
};

struct Cell {
  double low = 0.0;
  double high = 1.0;
};

/// The nested interval [f_{x_1...x_k}(0), f_{x_1...x_k}(1)]; depth 0 gives
/// [0,1]. Successive prefixes nest and the width is at most c^k.
Cell compose_cell(const IfsSystem& system, const DigitString& digits);

/// Expands x in [0,1] to the requested depth under the half-open cell rule:
/// pick n with f_n(0) <= y < f_n(1) (y = 1 selects N), then y <- f_n^{-1}(y).
/// Equal-width similitude systems use the base-(N+1) integer recurrence
/// directly. The resulting cell contains x at every depth.
DigitString digit_expand(const IfsSystem& system, double x, int depth);

}  // namespace ifscdf
