#pragma once

#include <span>

#include "ifscdf/digits.hpp"
#include "ifscdf/system.hpp"

namespace ifscdf {

/// Truncation controls for the series evaluators. Expansion stops as soon as
/// the mass of the containing cell drops to tol, or at max_depth digits,
/// whichever comes first. The default depth cap of 64 need not reach tol
/// when the largest weight is close to 1; use options_for_tolerance() to
/// size the cap from the target tolerance.
struct EvalOptions {
  double tol = 1e-12;
  int max_depth = 64;
};

/// Options whose depth cap guarantees tol is reachable for any digit path:
/// mass shrinks by at least max_weight per digit. Throws DomainError for
/// tol <= 0 or max_weight outside (0,1).
EvalOptions options_for_tolerance(double max_weight, double tol);
EvalOptions options_for_tolerance(const IfsSystem& system, double tol);

/// One CDF evaluation with a rigorous one-sided enclosure:
///
///   value <= true CDF(x) <= value + error_bound.
///
/// value is exactly the measure of [0, f_{x_1..x_K}(0)] for the depth-K
/// expansion of x, and error_bound is the mass of the depth-K cell containing
/// x. tolerance_reached is false when the depth cap bound before the mass
/// dropped to tol (the enclosure still holds, it is just wider than asked).
struct CdfValue {
  double value = 0.0;
  double error_bound = 1.0;
  int depth = 0;
  bool tolerance_reached = false;
};

/// Mass of the cylinder cell [f_{x_1..x_k}(0), f_{x_1..x_k}(1)]: the product
/// of the weights selected by the digits. Depth 0 gives 1.
double cell_mass(const IfsSystem& system, const DigitString& digits);

/// Mass of the gap [f_{x_1..x_{k-1}}(0), f_{x_1..x_k}(0)]: zero when the last
/// digit is 0, otherwise the depth-(k-1) prefix mass times p_0 + .. + p_{x_k - 1}.
/// Requires depth >= 1.
double gap_mass(const IfsSystem& system, const DigitString& digits);

/// Invariant-measure CDF at x via the telescoping gap series along the greedy
/// digit expansion. This always walks the general contraction path (cell
/// lookup plus exact map inverses), independent of the base-(N+1) fast paths
/// below, so the two routes cross-check each other.
CdfValue cdf_eval(const IfsSystem& system, double x, EvalOptions options = {});

/// CDF of the two-map half-interval system with weights (p, 1-p), evaluated
/// on the binary digits of x. Throws DomainError for p outside (0,1).
CdfValue cdf_binary(double p, double x, EvalOptions options = {});

/// CDF of the equal-width similitude system with the given weights, evaluated
/// on the base-(N+1) digits of x.
CdfValue cdf_equal_width(std::span<const double> weights, double x, EvalOptions options = {});

struct MassValue {
  double value = 0.0;
  double error_bound = 0.0;
  bool tolerance_reached = false;
};

/// Measure of [a, b] as CDF(b) - CDF(a), clamped to be nonnegative; the bound
/// is the sum of the two evaluation bounds. Throws DomainError unless
/// 0 <= a <= b <= 1.
MassValue interval_mass(const IfsSystem& system, double a, double b, EvalOptions options = {});

}  // namespace ifscdf
