#pragma once

namespace ifscdf {

/// One strictly increasing map of [0,1] onto an anchor interval [lower, upper].
///
/// Two closed-form families are supported:
///   - Similitude: f(x) = lower + (upper - lower) * x
///   - Warped:     f(x) = lower + (upper - lower) * g(x),
///                 g(x) = (1 + beta) * x / (1 + beta * x),  beta > -1
///
/// Both families hit the anchor endpoints exactly: f(0) == lower and
/// f(1) == upper as binary64 values, which is what makes exact partition
/// chains possible at the system level. Inverses are closed-form.
///
/// A map may have Lipschitz constant >= 1 (it is then not a contraction);
/// the contraction requirement is enforced when a system is validated, so
/// that hypothesis checkers can still probe rejected families.
class ContractionMap {
 public:
  enum class Kind { Similitude, Warped };

  /// Affine map onto [lower, upper]. Requires 0 <= lower < upper <= 1 and
  /// upper - lower < 1.
  static ContractionMap similitude(double lower, double upper);

  /// Moebius-warped map onto [lower, upper] with warp parameter beta > -1.
  static ContractionMap warped(double lower, double upper, double beta);

  /// Evaluates f(x). Expects x in [0,1].
  double operator()(double x) const;

  /// Evaluates f^{-1}(y). Throws DomainError unless y in [lower, upper].
  double inverse(double y) const;

  double lower() const { return lower_; }  ///< f(0)
  double upper() const { return upper_; }  ///< f(1)
  double ratio() const { return upper_ - lower_; }
  double offset() const { return lower_; }
  double beta() const { return beta_; }
  Kind kind() const { return kind_; }

  /// Lipschitz constant: ratio for similitudes,
  /// ratio * max(1 + beta, 1 / (1 + beta)) for warped maps.
  double lipschitz() const;

  /// Closed-form f'(x), positive on [0,1].
  double derivative(double x) const;

  /// Closed-form f''(x); identically zero for similitudes.
  double second_derivative(double x) const;

 private:
  ContractionMap(Kind kind, double lower, double upper, double beta)
      : kind_(kind), lower_(lower), upper_(upper), beta_(beta) {}

  Kind kind_;
  double lower_;
  double upper_;
  double beta_;
};

}  // namespace ifscdf
