#include "numerics.hpp"

#include <algorithm>

namespace gic::num {

std::vector<double> monotone_slopes(std::span<const double> values, double dx) {
  const std::size_t n = values.size();
  std::vector<double> slopes(n, 0.0);
  if (n < 2) return slopes;
  std::vector<double> delta(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) delta[i] = (values[i + 1] - values[i]) / dx;
  slopes[0] = delta[0];
  slopes[n - 1] = delta[n - 2];
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (delta[i - 1] <= 0.0 || delta[i] <= 0.0)
      slopes[i] = 0.0;  // flat or non-increasing neighborhood
    else
      slopes[i] = 2.0 * delta[i - 1] * delta[i] / (delta[i - 1] + delta[i]);
  }
  return slopes;
}

MonotoneCubic::MonotoneCubic(double x0, double dx, std::vector<double> values)
    : x0_(x0), dx_(dx), values_(std::move(values)) {
  slopes_ = monotone_slopes(values_, dx_);
}

double MonotoneCubic::operator()(double x) const {
  const std::size_t n = values_.size();
  double pos = (x - x0_) / dx_;
  if (pos <= 0.0) return values_.front() + slopes_.front() * (x - x0_);
  if (pos >= static_cast<double>(n - 1))
    return values_.back() + slopes_.back() * (x - (x0_ + dx_ * static_cast<double>(n - 1)));
  auto i = static_cast<std::size_t>(pos);
  i = std::min(i, n - 2);
  double t = pos - static_cast<double>(i);
  double h00 = (1.0 + 2.0 * t) * (1.0 - t) * (1.0 - t);
  double h10 = t * (1.0 - t) * (1.0 - t);
  double h01 = t * t * (3.0 - 2.0 * t);
  double h11 = t * t * (t - 1.0);
  return h00 * values_[i] + h10 * dx_ * slopes_[i] + h01 * values_[i + 1] + h11 * dx_ * slopes_[i + 1];
}

}  // namespace gic::num
