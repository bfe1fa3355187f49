#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ifscdf/measure.hpp"
#include "ifscdf/system.hpp"

namespace ifscdf {

struct ResidualValue {
  double residual = 0.0;
  double bound = 0.0;
  bool tolerance_reached = false;
};

/// Residual of the balance identity the invariant CDF satisfies,
///
///   r(x) = F(x) - sum_n F(f_n(x)) + sum_{n>=1} F(f_n(0)),
///
/// with every CDF value computed to tolerance tol. The returned bound is the
/// sum of the actual evaluation bounds, at most (2N+2)*tol once the
/// tolerance is reached (the depth cap is sized internally from tol).
ResidualValue equation_residual(const IfsSystem& system, double x, double tol);

/// Checks sum_n (f_n(x) - f_n(0)) = x on a uniform grid to within 8 ulp,
/// which is exactly the condition for the identity to solve the balance
/// identity. True for every similitude system. Interior grid points are what
/// discriminate; the endpoints hold for any valid family.
bool identity_criterion(std::span<const ContractionMap> maps, int grid_size);
bool identity_criterion(const IfsSystem& system, int grid_size);

enum class Verdict { AbsolutelyContinuousIdentity, Singular, Unknown };

struct ClassificationResult {
  Verdict verdict = Verdict::Unknown;
  std::optional<int> witness;  ///< first index with p_n != ratio_n, when Singular
  bool applicable = false;     ///< true when the similitude-only criterion applies
};

/// For similitude systems: AbsolutelyContinuousIdentity when p_n equals
/// ratio_n for every n (8 ulp per component), Singular otherwise. Systems
/// containing warped maps get Unknown; the criterion is a similitudes-only
/// result and no heuristic verdict is guessed.
ClassificationResult classify_similitude(const IfsSystem& system);

struct DerivativeBounds {
  double lambda = 0.0;  ///< max over maps and grid of f'(x)
  double c = 0.0;       ///< smallest c >= 0 with f''(x) <= c * f'(x) on the grid
  bool pass = false;    ///< lambda < 1
};

/// Grid maxima of the closed-form derivatives; the C^2 smoothness and
/// derivative-ratio bounds that guarantee a unique absolutely continuous
/// solution. Callable on raw map families so rejected candidates can be
/// probed too. Grid includes both endpoints.
DerivativeBounds derivative_bounds(std::span<const ContractionMap> maps, int grid_size);
DerivativeBounds derivative_bounds(const IfsSystem& system, int grid_size);

/// Closed-form integral of the equal-width CDF over [0,1]:
/// (1/N) * sum_{n=1..N} n * p_{N-n}. Requires N >= 1 and valid weights.
double integral_equal_width(std::span<const double> weights);

/// Same, reading the weights off an equal-width similitude system; throws
/// ApplicabilityError for any other system.
double integral_equal_width(const IfsSystem& system);

struct IntegralValue {
  double value = 0.0;
  double error_bound = 0.0;
};

/// Composite midpoint rule on cdf_eval values. The CDF is monotone with total
/// variation 1, so the quadrature error is at most 1/(2*grid_size); the
/// returned bound adds the evaluation tolerance.
IntegralValue integral_quadrature(const IfsSystem& system, int grid_size, double tol);

/// CDF extended to the real line by F(x) = floor(x) + F(x - floor(x)), split
/// into its exact integer part and the fractional CDF evaluation so that
/// F(x+1) = F(x) + 1 holds bit-exactly componentwise.
struct ExtendedValue {
  double whole = 0.0;
  CdfValue fractional;
  double value() const { return whole + fractional.value; }
  double error_bound() const { return fractional.error_bound; }
};

/// Equal-width extension at any real x with |x| <= 2^52.
ExtendedValue extend_cdf(std::span<const double> weights, double x, double tol);

/// Residual of the balance identity for the extended CDF at real x.
ResidualValue extension_residual(std::span<const double> weights, double x, double tol);

/// A finite linear combination sum_i alpha_i * F_{p_i} + beta * 1 of binary
/// half-interval CDFs and the constant function.
struct ComboTerm {
  double alpha = 0.0;
  double p = 0.5;
};

struct ComboSpec {
  std::vector<ComboTerm> terms;
  double beta = 0.0;

  /// Throws ParameterError unless the p_i are pairwise distinct, lie in
  /// (0,1), and there is at least one term or a nonzero beta.
  void validate() const;
};

struct ComboValue {
  double value = 0.0;
  double error_bound = 0.0;
};

ComboValue combo_eval(const ComboSpec& combo, double x, double tol);

/// Residual of value(x) - value(x/2) - value((x+1)/2) + value(1/2); bounded
/// by 4 * sum|alpha_i| * tol. Every member of the combination space solves
/// the half-interval balance identity, so this should vanish to the bound.
ResidualValue combo_residual(const ComboSpec& combo, double x, double tol);

enum class MonotoneVerdict { NonDecreasing, NonIncreasing, NonMonotone };

struct MonotoneReport {
  bool sign_condition = false;  ///< all alpha_i share one sign (prediction: monotone)
  MonotoneVerdict empirical = MonotoneVerdict::NonMonotone;
  bool monotone() const { return empirical != MonotoneVerdict::NonMonotone; }
};

/// Empirical monotonicity of the combination on a uniform grid, judged within
/// the combined evaluation bounds, reported next to the same-sign prediction.
MonotoneReport combo_monotone_check(const ComboSpec& combo, int grid_size, double tol = 1e-10);

/// Determinant of the matrix M[i][k] = F_{p_i}(2^{-k}), k = 1..n, which
/// equals the generalized Vandermonde matrix (p_i^k). A nonzero determinant
/// certifies linear independence of the evaluated family on the dyadic
/// points. Requires 2 <= n <= 8 and pairwise distinct p_i in (0,1).
double independence_probe(std::span<const double> params);

}  // namespace ifscdf
