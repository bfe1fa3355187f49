#pragma once

#include <span>
#include <vector>

#include "ifscdf/contraction.hpp"

namespace ifscdf {

/// A validated probabilistic iterated function system on [0,1]:
/// strictly increasing contractions f_0 < ... < f_N whose images tile the
/// unit interval with exactly shared endpoints,
///
///   0 = f_0(0),  f_n(1) = f_{n+1}(0),  f_N(1) = 1   (equalities bit-exact),
///
/// together with positive weights p_0..p_N summing to one.
///
/// Construction goes through validate_system() or one of the builders; every
/// instance satisfies the invariants above and max_n L(f_n) in (0,1).
class IfsSystem {
 public:
  int map_count() const { return static_cast<int>(maps_.size()); }  ///< N + 1
  int last_index() const { return map_count() - 1; }                ///< N

  const ContractionMap& map(int n) const { return maps_[static_cast<size_t>(n)]; }
  std::span<const ContractionMap> maps() const { return maps_; }
  std::span<const double> weights() const { return weights_; }

  /// Prefix sums of the weights; element n is p_0 + ... + p_{n-1}, size N+2.
  std::span<const double> cumulative_weights() const { return cumulative_weights_; }

  /// Cell boundaries f_0(0), f_1(0), ..., f_N(0), 1; size N+2.
  std::span<const double> breakpoints() const { return breakpoints_; }

  double lipschitz_max() const { return lipschitz_max_; }  ///< c = max_n L(f_n)
  double max_weight() const { return max_weight_; }

  bool all_similitudes() const { return all_similitudes_; }

  /// True when the system is a similitude family with identical ratios, in
  /// which case base-(N+1) digit fast paths apply. Detected from bit-equal
  /// input ratios by the builders.
  bool equal_width() const { return equal_width_; }

  /// Index n of the half-open cell [f_n(0), f_n(1)) containing y; y >= 1
  /// selects N. The shared boundary f_n(1) = f_{n+1}(0) belongs to the right
  /// cell.
  int cell_index(double y) const;

 private:
  friend IfsSystem validate_system(std::vector<ContractionMap>, std::vector<double>);
  friend IfsSystem make_similitude_system(std::span<const double>, std::span<const double>);
  friend IfsSystem make_warped_system(std::span<const double>, std::span<const double>,
                                      std::span<const double>);
  static IfsSystem validate_impl(std::vector<ContractionMap> maps, std::vector<double> weights,
                                 bool equal_width_hint);

  IfsSystem() = default;

  std::vector<ContractionMap> maps_;
  std::vector<double> weights_;
  std::vector<double> cumulative_weights_;
  std::vector<double> breakpoints_;
  double lipschitz_max_ = 0.0;
  double max_weight_ = 0.0;
  bool all_similitudes_ = false;
  bool equal_width_ = false;
};

/// Validates an explicit map family against the partition, contraction and
/// weight invariants. Throws PartitionError, ContractionError or WeightError.
IfsSystem validate_system(std::vector<ContractionMap> maps, std::vector<double> weights);

/// Builds the similitude system with the given ratios: map n spans
/// [r_0 + ... + r_{n-1}, r_0 + ... + r_n]. The final breakpoint is snapped to
/// exactly 1 when the ratio sum is within 16 ulp of 1; otherwise the chain is
/// rejected. Equal-width detection compares the input ratios bit for bit.
IfsSystem make_similitude_system(std::span<const double> ratios, std::span<const double> weights);

/// Builds a warped system from explicit breakpoints 0 = t_0 < ... < t_{N+1} = 1
/// (endpoints must be exact) and one warp parameter per cell.
IfsSystem make_warped_system(std::span<const double> partition, std::span<const double> betas,
                             std::span<const double> weights);

/// f_n(x) with argument checking (n in range, x in [0,1]).
double map_eval(const IfsSystem& system, int n, double x);

/// f_n^{-1}(y) with argument checking; y must lie in [f_n(0), f_n(1)].
double map_inverse(const IfsSystem& system, int n, double y);

}  // namespace ifscdf
