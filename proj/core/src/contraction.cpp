#include "ifscdf/contraction.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ifscdf/errors.hpp"

namespace ifscdf {

namespace {

void check_anchor(double lower, double upper) {
  if (!std::isfinite(lower) || !std::isfinite(upper)) {
    throw ContractionError("anchor interval must be finite");
  }
  if (!(0.0 <= lower && lower < upper && upper <= 1.0)) {
    throw ContractionError("anchor interval must satisfy 0 <= lower < upper <= 1, got [" +
                           std::to_string(lower) + ", " + std::to_string(upper) + "]");
  }
  if (!(upper - lower < 1.0)) {
    throw ContractionError("anchor interval must be a proper subinterval of [0,1]");
  }
}

}  // namespace

ContractionMap ContractionMap::similitude(double lower, double upper) {
  check_anchor(lower, upper);
  return ContractionMap(Kind::Similitude, lower, upper, 0.0);
}

ContractionMap ContractionMap::warped(double lower, double upper, double beta) {
  check_anchor(lower, upper);
  if (!std::isfinite(beta) || !(beta > -1.0)) {
    throw ContractionError("warp parameter must be finite and > -1, got " + std::to_string(beta));
  }
  return ContractionMap(Kind::Warped, lower, upper, beta);
}

double ContractionMap::operator()(double x) const {
  double t = x;
  if (kind_ == Kind::Warped) {
    // g(0) = 0 and g(1) = 1 exactly, so f hits the anchors bit-exactly.
    t = (1.0 + beta_) * x / (1.0 + beta_ * x);
  }
  return std::lerp(lower_, upper_, t);
}

double ContractionMap::inverse(double y) const {
  if (!(y >= lower_ && y <= upper_)) {
    throw DomainError("inverse argument " + std::to_string(y) + " outside image [" +
                      std::to_string(lower_) + ", " + std::to_string(upper_) + "]");
  }
  double u = (y - lower_) / (upper_ - lower_);
  u = std::clamp(u, 0.0, 1.0);
  if (kind_ == Kind::Warped) {
    u = u / ((1.0 + beta_) - beta_ * u);
    u = std::clamp(u, 0.0, 1.0);
  }
  return u;
}

double ContractionMap::lipschitz() const {
  const double r = ratio();
  if (kind_ == Kind::Similitude) return r;
  const double grow = 1.0 + beta_;
  return r * std::max(grow, 1.0 / grow);
}

double ContractionMap::derivative(double x) const {
  const double r = ratio();
  if (kind_ == Kind::Similitude) return r;
  const double d = 1.0 + beta_ * x;
  return r * (1.0 + beta_) / (d * d);
}

double ContractionMap::second_derivative(double x) const {
  if (kind_ == Kind::Similitude) return 0.0;
  const double d = 1.0 + beta_ * x;
  return -2.0 * beta_ * ratio() * (1.0 + beta_) / (d * d * d);
}

}  // namespace ifscdf
