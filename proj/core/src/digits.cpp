#include "ifscdf/digits.hpp"

#include <string>
#include <utility>

#include "expansion_detail.hpp"
#include "ifscdf/errors.hpp"

namespace ifscdf {

namespace {

void check_digits(const IfsSystem& system, const DigitString& digits) {
  for (int d : digits) {
    if (d < 0 || d > system.last_index()) {
      throw DomainError("digit " + std::to_string(d) + " outside {0..N}");
    }
  }
}

}  // namespace

DigitString::DigitString(std::vector<int> digits) : digits_(std::move(digits)) {
  for (int d : digits_) {
    if (d < 0) throw DomainError("digit " + std::to_string(d) + " is negative");
  }
}

void DigitString::push_back(int digit) {
  if (digit < 0) throw DomainError("digit " + std::to_string(digit) + " is negative");
  digits_.push_back(digit);
}

Cell compose_cell(const IfsSystem& system, const DigitString& digits) {
  check_digits(system, digits);
  // f_{x_1} is applied last, so walk the digits innermost-first.
  Cell cell{0.0, 1.0};
  for (int i = digits.depth() - 1; i >= 0; --i) {
    const ContractionMap& f = system.map(digits[i]);
    cell.low = f(cell.low);
    cell.high = f(cell.high);
  }
  return cell;
}

DigitString digit_expand(const IfsSystem& system, double x, int depth) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("expansion argument " + std::to_string(x) + " outside [0,1]");
  }
  if (depth < 0) throw DomainError("expansion depth must be nonnegative");

  DigitString out;
  double y = x;
  if (system.equal_width()) {
    const int base = system.map_count();
    for (int k = 0; k < depth; ++k) out.push_back(detail::base_step(base, y));
  } else {
    for (int k = 0; k < depth; ++k) out.push_back(detail::greedy_step(system, y));
  }
  return out;
}

}  // namespace ifscdf
