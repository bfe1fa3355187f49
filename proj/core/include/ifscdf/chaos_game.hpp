#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ifscdf/measure.hpp"
#include "ifscdf/system.hpp"

namespace ifscdf {

/// Parameters for one chaos-game run. Runs are bit-reproducible: the engine
/// is std::mt19937_64 (algorithm fixed by the standard) seeded with a
/// splitmix64 hash of (seed, stream), and map indices are drawn by inverse
/// CDF over the weights from 53-bit uniforms. Distinct streams give
/// independent runs for the same seed.
struct ChaosGameParams {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  int burn_in = 128;
  int count = 1;
};

struct SampleRun {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  int burn_in = 0;
  std::vector<double> samples;  ///< sorted ascending, all in [0,1]
  std::string generator;        ///< algorithm tag recorded for reproducibility

  int count() const { return static_cast<int>(samples.size()); }
};

/// Runs the Markov chain x <- f_n(x) with n drawn from the weights, starting
/// at x = 0, discarding burn_in steps and retaining count orbit points.
SampleRun chaos_game(const IfsSystem& system, const ChaosGameParams& params);

/// Sup over the sorted points of the gap between the empirical CDF and a
/// continuous CDF, evaluated at both one-sided limits per point:
/// max_i max(i/M - F(x_i), F(x_i) - (i-1)/M).
double ks_statistic(std::span<const double> sorted_samples,
                    const std::function<double(double)>& cdf);

/// Same for a CDF with jumps: cdf_left supplies the left limits.
double ks_statistic(std::span<const double> sorted_samples,
                    const std::function<double(double)>& cdf,
                    const std::function<double(double)>& cdf_left);

struct KsResult {
  double distance = 0.0;   ///< sup gap against the truncated CDF values
  double cdf_bound = 0.0;  ///< largest truncation bound among the evaluations
  double total() const { return distance + cdf_bound; }
};

/// KS distance between a sample run and the analytic CDF of the system.
KsResult ks_distance(const SampleRun& run, const IfsSystem& system, EvalOptions options = {});

}  // namespace ifscdf
