#include "ifscdf/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "expansion_detail.hpp"
#include "ifscdf/errors.hpp"

namespace ifscdf {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxDepthCeiling = 1'000'000;

void check_unit_interval(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("argument " + std::to_string(x) + " outside [0,1]");
  }
}

void check_options(const EvalOptions& options) {
  if (!(options.tol > 0.0) || !std::isfinite(options.tol)) {
    throw DomainError("tolerance must be positive");
  }
  if (options.max_depth < 0) {
    throw DomainError("depth cap must be nonnegative");
  }
}

std::vector<double> checked_weights(std::span<const double> weights) {
  if (weights.size() < 2) {
    throw WeightError("need at least two weights");
  }
  double sum = 0.0;
  for (size_t n = 0; n < weights.size(); ++n) {
    if (!(std::isfinite(weights[n]) && weights[n] > 0.0)) {
      throw WeightError("weight " + std::to_string(n) + " = " + std::to_string(weights[n]) +
                        " must be positive");
    }
    sum += weights[n];
  }
  if (std::abs(sum - 1.0) > 4.0 * kEps) {
    throw WeightError("weights sum to " + std::to_string(sum) + ", expected 1 within 4 ulp");
  }
  return {weights.begin(), weights.end()};
}

// Gap series along the digit stream produced by next_digit. Each step adds
// the mass of the gap between the previous cell's left edge and the current
// one, so the partial sum is exactly the measure of [0, left edge] and the
// running product is the mass of the containing cell. That pair is the
// one-sided enclosure CdfValue carries.
template <typename NextDigit>
CdfValue gap_series(std::span<const double> weights, std::span<const double> cumulative,
                    const EvalOptions& options, NextDigit&& next_digit) {
  detail::CompensatedSum sum;
  double mass = 1.0;
  int depth = 0;
  bool reached = false;
  while (depth < options.max_depth) {
    const int d = next_digit();
    ++depth;
    if (d > 0) sum.add(mass * cumulative[static_cast<size_t>(d)]);
    mass *= weights[static_cast<size_t>(d)];
    if (mass <= options.tol) {
      reached = true;
      break;
    }
  }
  const double value = std::clamp(sum.value(), 0.0, 1.0);
  return CdfValue{value, mass, depth, reached};
}

}  // namespace

EvalOptions options_for_tolerance(double max_weight, double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) throw DomainError("tolerance must be positive");
  if (!(max_weight > 0.0 && max_weight < 1.0)) {
    throw DomainError("max weight must lie in (0,1)");
  }
  const double steps = std::ceil(std::log(tol) / std::log(max_weight)) + 8.0;
  const int depth = steps >= static_cast<double>(kMaxDepthCeiling)
                        ? kMaxDepthCeiling
                        : std::max(64, static_cast<int>(steps));
  return EvalOptions{tol, depth};
}

EvalOptions options_for_tolerance(const IfsSystem& system, double tol) {
  return options_for_tolerance(system.max_weight(), tol);
}

double cell_mass(const IfsSystem& system, const DigitString& digits) {
  double mass = 1.0;
  for (int d : digits) {
    if (d < 0 || d > system.last_index()) {
      throw DomainError("digit " + std::to_string(d) + " outside {0..N}");
    }
    mass *= system.weights()[static_cast<size_t>(d)];
  }
  return mass;
}

double gap_mass(const IfsSystem& system, const DigitString& digits) {
  if (digits.empty()) throw DomainError("gap mass needs at least one digit");
  const int last = digits[digits.depth() - 1];
  if (last < 0 || last > system.last_index()) {
    throw DomainError("digit " + std::to_string(last) + " outside {0..N}");
  }
  if (last == 0) return 0.0;
  double prefix = 1.0;
  for (int i = 0; i < digits.depth() - 1; ++i) {
    const int d = digits[i];
    if (d < 0 || d > system.last_index()) {
      throw DomainError("digit " + std::to_string(d) + " outside {0..N}");
    }
    prefix *= system.weights()[static_cast<size_t>(d)];
  }
  return prefix * system.cumulative_weights()[static_cast<size_t>(last)];
}

CdfValue cdf_eval(const IfsSystem& system, double x, EvalOptions options) {
  check_unit_interval(x);
  check_options(options);
  double y = x;
  return gap_series(system.weights(), system.cumulative_weights(), options,
                    [&] { return detail::greedy_step(system, y); });
}

CdfValue cdf_binary(double p, double x, EvalOptions options) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("parameter " + std::to_string(p) + " outside (0,1)");
  }
  check_unit_interval(x);
  check_options(options);
  const double weights[2] = {p, 1.0 - p};
  const double cumulative[3] = {0.0, p, 1.0};
  double y = x;
  return gap_series(weights, cumulative, options, [&] { return detail::base_step(2, y); });
}

CdfValue cdf_equal_width(std::span<const double> weights, double x, EvalOptions options) {
  check_unit_interval(x);
  check_options(options);
  const std::vector<double> w = checked_weights(weights);
  std::vector<double> cumulative(w.size() + 1, 0.0);
  for (size_t n = 0; n < w.size(); ++n) cumulative[n + 1] = cumulative[n] + w[n];
  const int base = static_cast<int>(w.size());
  double y = x;
  return gap_series(w, cumulative, options, [&] { return detail::base_step(base, y); });
}

MassValue interval_mass(const IfsSystem& system, double a, double b, EvalOptions options) {
  if (!(a >= 0.0 && a <= b && b <= 1.0)) {
    throw DomainError("endpoints must satisfy 0 <= a <= b <= 1");
  }
  const CdfValue at_b = cdf_eval(system, b, options);
  const CdfValue at_a = cdf_eval(system, a, options);
  const double raw = at_b.value - at_a.value;
  return MassValue{std::max(raw, 0.0), at_a.error_bound + at_b.error_bound,
                   at_a.tolerance_reached && at_b.tolerance_reached};
}

}  // namespace ifscdf
