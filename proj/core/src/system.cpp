#include "ifscdf/system.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ifscdf/errors.hpp"

namespace ifscdf {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

bool all_ratios_bit_equal(std::span<const double> ratios) {
  for (double r : ratios) {
    if (r != ratios[0]) return false;
  }
  return true;
}

}  // namespace

IfsSystem IfsSystem::validate_impl(std::vector<ContractionMap> maps, std::vector<double> weights,
                                   bool equal_width_hint) {
  const auto count = maps.size();
  if (count < 2) {
    throw PartitionError("need at least two maps: the partition chain requires N >= 1");
  }
  if (weights.size() != count) {
    throw WeightError("weight count " + std::to_string(weights.size()) +
                      " does not match map count " + std::to_string(count));
  }

  if (maps.front().lower() != 0.0) {
    throw PartitionError("f_0(0) = " + std::to_string(maps.front().lower()) + ", expected 0");
  }
  if (maps.back().upper() != 1.0) {
    throw PartitionError("f_N(1) = " + std::to_string(maps.back().upper()) + ", expected 1");
  }
  for (size_t n = 0; n + 1 < count; ++n) {
    if (maps[n].upper() != maps[n + 1].lower()) {
      throw PartitionError("cells " + std::to_string(n) + " and " + std::to_string(n + 1) +
                           " do not share an endpoint: f_" + std::to_string(n) + "(1) = " +
                           std::to_string(maps[n].upper()) + " vs f_" + std::to_string(n + 1) +
                           "(0) = " + std::to_string(maps[n + 1].lower()));
    }
  }

  double c = 0.0;
  for (size_t n = 0; n < count; ++n) {
    const double lip = maps[n].lipschitz();
    if (!(lip < 1.0)) {
      throw ContractionError("map " + std::to_string(n) + " has Lipschitz constant " +
                             std::to_string(lip) + " >= 1");
    }
    c = std::max(c, lip);
  }

  double sum = 0.0;
  double max_w = 0.0;
  for (size_t n = 0; n < count; ++n) {
    const double p = weights[n];
    if (!(std::isfinite(p) && p > 0.0)) {
      throw WeightError("weight " + std::to_string(n) + " = " + std::to_string(p) +
                        " must be positive");
    }
    sum += p;
    max_w = std::max(max_w, p);
  }
  if (std::abs(sum - 1.0) > 4.0 * kEps) {
    throw WeightError("weights sum to " + std::to_string(sum) + ", expected 1 within 4 ulp");
  }

  IfsSystem sys;
  sys.maps_ = std::move(maps);
  sys.weights_ = std::move(weights);

  sys.cumulative_weights_.resize(count + 1);
  sys.cumulative_weights_[0] = 0.0;
  for (size_t n = 0; n < count; ++n) {
    sys.cumulative_weights_[n + 1] = sys.cumulative_weights_[n] + sys.weights_[n];
  }

  sys.breakpoints_.resize(count + 1);
  for (size_t n = 0; n < count; ++n) sys.breakpoints_[n] = sys.maps_[n].lower();
  sys.breakpoints_[count] = 1.0;

  sys.lipschitz_max_ = c;
  sys.max_weight_ = max_w;
  sys.all_similitudes_ = std::all_of(sys.maps_.begin(), sys.maps_.end(), [](const auto& m) {
    return m.kind() == ContractionMap::Kind::Similitude;
  });

  bool widths_equal = sys.all_similitudes_;
  for (size_t n = 0; widths_equal && n < count; ++n) {
    widths_equal = sys.maps_[n].ratio() == sys.maps_[0].ratio();
  }
  sys.equal_width_ = widths_equal || (equal_width_hint && sys.all_similitudes_);
  return sys;
}

IfsSystem validate_system(std::vector<ContractionMap> maps, std::vector<double> weights) {
  return IfsSystem::validate_impl(std::move(maps), std::move(weights), false);
}

IfsSystem make_similitude_system(std::span<const double> ratios, std::span<const double> weights) {
  if (ratios.size() < 2) {
    throw PartitionError("need at least two ratios: the partition chain requires N >= 1");
  }
  for (size_t n = 0; n < ratios.size(); ++n) {
    if (!(std::isfinite(ratios[n]) && ratios[n] > 0.0 && ratios[n] < 1.0)) {
      throw ContractionError("ratio " + std::to_string(n) + " = " + std::to_string(ratios[n]) +
                             " must lie in (0,1)");
    }
  }

  std::vector<double> breaks(ratios.size() + 1);
  breaks[0] = 0.0;
  for (size_t n = 0; n < ratios.size(); ++n) breaks[n + 1] = breaks[n] + ratios[n];
  if (std::abs(breaks.back() - 1.0) > 16.0 * kEps) {
    throw PartitionError("ratios sum to " + std::to_string(breaks.back()) +
                         ", so f_N(1) != 1: the images do not tile [0,1]");
  }
  breaks.back() = 1.0;

  std::vector<ContractionMap> maps;
  maps.reserve(ratios.size());
  for (size_t n = 0; n < ratios.size(); ++n) {
    maps.push_back(ContractionMap::similitude(breaks[n], breaks[n + 1]));
  }
  return IfsSystem::validate_impl(std::move(maps), {weights.begin(), weights.end()},
                                  all_ratios_bit_equal(ratios));
}

IfsSystem make_warped_system(std::span<const double> partition, std::span<const double> betas,
                             std::span<const double> weights) {
  if (partition.size() < 3) {
    throw PartitionError("need at least three breakpoints: the partition chain requires N >= 1");
  }
  if (betas.size() + 1 != partition.size()) {
    throw PartitionError("expected one warp parameter per cell: " +
                         std::to_string(partition.size() - 1) + " cells vs " +
                         std::to_string(betas.size()) + " parameters");
  }
  if (partition.front() != 0.0 || partition.back() != 1.0) {
    throw PartitionError("breakpoints must start at exactly 0 and end at exactly 1");
  }
  for (size_t n = 0; n + 1 < partition.size(); ++n) {
    if (!(partition[n] < partition[n + 1])) {
      throw PartitionError("breakpoints must be strictly increasing");
    }
  }

  std::vector<ContractionMap> maps;
  maps.reserve(betas.size());
  for (size_t n = 0; n < betas.size(); ++n) {
    maps.push_back(ContractionMap::warped(partition[n], partition[n + 1], betas[n]));
  }
  return IfsSystem::validate_impl(std::move(maps), {weights.begin(), weights.end()}, false);
}

int IfsSystem::cell_index(double y) const {
  if (y >= 1.0) return last_index();
  if (y <= 0.0) return 0;
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), y);
  const int n = static_cast<int>(it - breakpoints_.begin()) - 1;
  return std::clamp(n, 0, last_index());
}

double map_eval(const IfsSystem& system, int n, double x) {
  if (n < 0 || n > system.last_index()) {
    throw DomainError("map index " + std::to_string(n) + " out of range");
  }
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("map argument " + std::to_string(x) + " outside [0,1]");
  }
  return system.map(n)(x);
}

double map_inverse(const IfsSystem& system, int n, double y) {
  if (n < 0 || n > system.last_index()) {
    throw DomainError("map index " + std::to_string(n) + " out of range");
  }
  return system.map(n).inverse(y);
}

}  // namespace ifscdf
