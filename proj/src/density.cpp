#include "gic/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gic/errors.hpp"
#include "numerics.hpp"

namespace gic {

using num::norm_cdf;
using num::norm_cdf_integral;
using num::norm_pdf;

double AxisFactor::pdf(double x) const {
  double z = x - shift;
  if (has_box() && has_gauss()) {
    double sigma = std::sqrt(var);
    double za = (z + half_width) / sigma;
    double zb = (z - half_width) / sigma;
    return (norm_cdf(za) - norm_cdf(zb)) / (2.0 * half_width);
  }
  if (has_box()) return (std::abs(z) <= half_width) ? 1.0 / (2.0 * half_width) : 0.0;
  if (has_gauss()) {
    double sigma = std::sqrt(var);
    return norm_pdf(z / sigma) / sigma;
  }
  return std::numeric_limits<double>::quiet_NaN();  // bare point mass
}

double AxisFactor::cdf(double x) const {
  double z = x - shift;
  if (has_box() && has_gauss()) {
    double sigma = std::sqrt(var);
    double za = (z + half_width) / sigma;
    double zb = (z - half_width) / sigma;
    return sigma * (norm_cdf_integral(za) - norm_cdf_integral(zb)) / (2.0 * half_width);
  }
  if (has_box()) return std::clamp((z + half_width) / (2.0 * half_width), 0.0, 1.0);
  if (has_gauss()) return norm_cdf(z / std::sqrt(var));
  return z < 0.0 ? 0.0 : 1.0;
}

double AxisFactor::lo(double tail_sigmas) const {
  return shift - half_width - tail_sigmas * std::sqrt(var);
}

double AxisFactor::hi(double tail_sigmas) const {
  return shift + half_width + tail_sigmas * std::sqrt(var);
}

Density::Density(int dim, std::vector<ProductComponent> components)
    : dim_(dim), components_(std::move(components)) {
  for (const auto& c : components_)
    if (static_cast<int>(c.axes.size()) != dim_)
      throw DomainError("density component dimension mismatch");
}

Density Density::from_spec(const DistributionSpec& spec) {
  const int d = spec.dim();
  std::vector<ProductComponent> comps;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GaussianSpec>) {
          ProductComponent c;
          c.weight = 1.0;
          for (int k = 0; k < d; ++k) c.axes.push_back({s.mean[k], 0.0, s.variance[k]});
          comps.push_back(std::move(c));
        } else if constexpr (std::is_same_v<T, UniformSpec>) {
          ProductComponent c;
          c.weight = 1.0;
          for (int k = 0; k < d; ++k)
            c.axes.push_back({0.5 * (s.low[k] + s.high[k]), 0.5 * (s.high[k] - s.low[k]), 0.0});
          comps.push_back(std::move(c));
        } else if constexpr (std::is_same_v<T, AtomsSpec>) {
          for (std::size_t i = 0; i < s.points.size(); ++i) {
            ProductComponent c;
            c.weight = s.weights[i];
            for (int k = 0; k < d; ++k) c.axes.push_back({s.points[i][k], 0.0, 0.0});
            comps.push_back(std::move(c));
          }
        } else if constexpr (std::is_same_v<T, MixtureSpec>) {
          for (const auto& m : s.components) {
            ProductComponent c;
            c.weight = m.weight;
            for (int k = 0; k < d; ++k) c.axes.push_back({m.mean[k], 0.0, m.variance[k]});
            comps.push_back(std::move(c));
          }
        } else if constexpr (std::is_same_v<T, AtomsGaussianSpec>) {
          for (std::size_t i = 0; i < s.atoms.points.size(); ++i) {
            ProductComponent c;
            c.weight = s.atoms.weights[i];
            for (int k = 0; k < d; ++k) c.axes.push_back({s.atoms.points[i][k], 0.0, s.noise_variance});
            comps.push_back(std::move(c));
          }
        }
      },
      spec.payload());
  return Density(d, std::move(comps));
}

bool Density::continuous() const {
  for (const auto& c : components_)
    for (const auto& f : c.axes)
      if (f.is_atom()) return false;
  return true;
}

Density Density::convolve(const Density& other) const {
  if (dim_ != other.dim_) throw DomainError("convolve: dimension mismatch");
  std::vector<ProductComponent> comps;
  comps.reserve(components_.size() * other.components_.size());
  for (const auto& a : components_) {
    for (const auto& b : other.components_) {
      ProductComponent c;
      c.weight = a.weight * b.weight;
      c.axes.resize(dim_);
      for (int k = 0; k < dim_; ++k) {
        const AxisFactor& fa = a.axes[k];
        const AxisFactor& fb = b.axes[k];
        if (fa.has_box() && fb.has_box())
          throw DomainError(
              "convolve: sum of two uniform components on one axis is not supported "
              "(no closed-form density in this representation)");
        c.axes[k] = {fa.shift + fb.shift, fa.half_width + fb.half_width, fa.var + fb.var};
      }
      comps.push_back(std::move(c));
    }
  }
  return Density(dim_, std::move(comps));
}

Density Density::convolve_white_gaussian(double noise_variance) const {
  if (!(noise_variance > 0.0)) throw DomainError("convolve_white_gaussian: variance must be positive");
  std::vector<ProductComponent> comps = components_;
  for (auto& c : comps)
    for (auto& f : c.axes) f.var += noise_variance;
  return Density(dim_, std::move(comps));
}

Density Density::scaled(double s) const {
  if (s == 0.0) throw DomainError("scaled: scale must be nonzero");
  std::vector<ProductComponent> comps = components_;
  for (auto& c : comps)
    for (auto& f : c.axes) f = {f.shift * s, f.half_width * std::abs(s), f.var * s * s};
  return Density(dim_, std::move(comps));
}

double Density::pdf(std::span<const double> x) const {
  double total = 0.0;
  for (const auto& c : components_) {
    double p = c.weight;
    for (int k = 0; k < dim_ && p > 0.0; ++k) p *= c.axes[k].pdf(x[k]);
    total += p;
  }
  return total;
}

double Density::axis_mean(int axis) const {
  double m = 0.0;
  for (const auto& c : components_) m += c.weight * c.axes[axis].mean();
  return m;
}

double Density::axis_variance(int axis) const {
  double m = axis_mean(axis);
  double s = 0.0;
  for (const auto& c : components_) {
    const AxisFactor& f = c.axes[axis];
    s += c.weight * (f.variance() + f.mean() * f.mean());
  }
  return s - m * m;
}

double Density::avg_variance() const {
  double s = 0.0;
  for (int k = 0; k < dim_; ++k) s += axis_variance(k);
  return s / static_cast<double>(dim_);
}

double Density::avg_second_moment() const {
  double s = 0.0;
  for (int k = 0; k < dim_; ++k) {
    double m = axis_mean(k);
    s += axis_variance(k) + m * m;
  }
  return s / static_cast<double>(dim_);
}

double Density::marginal_pdf(int axis, double x) const {
  double total = 0.0;
  for (const auto& c : components_) total += c.weight * c.axes[axis].pdf(x);
  return total;
}

double Density::marginal_cdf(int axis, double x) const {
  double total = 0.0;
  for (const auto& c : components_) total += c.weight * c.axes[axis].cdf(x);
  return total;
}

double Density::Conditional::pdf(double x) const {
  double total = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (weights[i] > 0.0) total += weights[i] * base->components()[i].axes[axis].pdf(x);
  return total;
}

double Density::Conditional::cdf(double x) const {
  double total = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (weights[i] > 0.0) total += weights[i] * base->components()[i].axes[axis].cdf(x);
  return total;
}

std::pair<double, double> Density::Conditional::domain(double tail_sigmas) const {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0.0) continue;
    const AxisFactor& f = base->components()[i].axes[axis];
    lo = std::min(lo, f.lo(tail_sigmas));
    hi = std::max(hi, f.hi(tail_sigmas));
  }
  return {lo, hi};
}

Density::Conditional Density::conditional(int axis, std::span<const double> given) const {
  if (axis < 0 || axis >= dim_) throw DomainError("conditional: axis out of range");
  if (static_cast<int>(given.size()) != axis) throw DomainError("conditional: need exactly `axis` given coordinates");
  Conditional cond;
  cond.base = this;
  cond.axis = axis;
  cond.weights.resize(components_.size());
  double total = 0.0;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    double w = components_[i].weight;
    for (int j = 0; j < axis && w > 0.0; ++j) w *= components_[i].axes[j].pdf(given[j]);
    cond.weights[i] = w;
    total += w;
  }
  if (!(total > 1e-300))
    throw QuadratureError("conditional density underflow at the conditioning point");
  for (auto& w : cond.weights) w /= total;
  return cond;
}

std::pair<double, double> Density::axis_domain(int axis, double tail_sigmas) const {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (const auto& c : components_) {
    lo = std::min(lo, c.axes[axis].lo(tail_sigmas));
    hi = std::max(hi, c.axes[axis].hi(tail_sigmas));
  }
  return {lo, hi};
}

}  // namespace gic
