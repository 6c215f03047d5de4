#pragma once

#include <span>
#include <utility>
#include <vector>

#include "gic/distribution.hpp"

namespace gic {

/// One independent 1-D summand on one axis: a point shift, convolved with an
/// optional centered box of half-width `half_width` and an optional Gaussian
/// of variance `var`. All four combinations have closed-form pdf and cdf
/// (except the bare point, which is singular).
struct AxisFactor {
  double shift = 0.0;
  double half_width = 0.0;
  double var = 0.0;

  bool has_box() const { return half_width > 0.0; }
  bool has_gauss() const { return var > 0.0; }
  bool is_atom() const { return !has_box() && !has_gauss(); }

  double pdf(double x) const;
  double cdf(double x) const;
  double mean() const { return shift; }
  double variance() const { return var + half_width * half_width / 3.0; }

  /// Effective support bounds; Gaussian tails truncated at `tail_sigmas`.
  double lo(double tail_sigmas) const;
  double hi(double tail_sigmas) const;
};

/// Product of independent per-axis factors with a mixture weight.
struct ProductComponent {
  double weight = 1.0;
  std::vector<AxisFactor> axes;
};

/// Analytic density of a mixture of product components. Closed under sums of
/// independent vectors (component-wise convolution), scaling, and adding
/// white Gaussian noise, which covers every distribution combination the
/// verification suites need. Densities stay exact: no FFT, no gridding.
class Density {
 public:
  Density() = default;
  explicit Density(int dim, std::vector<ProductComponent> components);

  static Density from_spec(const DistributionSpec& spec);

  int dim() const { return dim_; }
  const std::vector<ProductComponent>& components() const { return components_; }

  /// True iff no component has a bare point factor on any axis.
  bool continuous() const;

  /// Distribution of X + Y for independent X ~ *this, Y ~ other.
  Density convolve(const Density& other) const;
  Density convolve_white_gaussian(double noise_variance) const;

  /// Distribution of s * X.
  Density scaled(double s) const;

  double pdf(std::span<const double> x) const;

  double axis_mean(int axis) const;
  double axis_variance(int axis) const;
  double avg_variance() const;
  double avg_second_moment() const;

  double marginal_pdf(int axis, double x) const;
  double marginal_cdf(int axis, double x) const;

  /// Conditional law of coordinate `axis` given coordinates 0..axis-1 fixed
  /// at `given`; it is a reweighting of the per-component axis factors.
  struct Conditional {
    const Density* base = nullptr;
    int axis = 0;
    std::vector<double> weights;
    double pdf(double x) const;
    double cdf(double x) const;
    std::pair<double, double> domain(double tail_sigmas) const;
  };
  Conditional conditional(int axis, std::span<const double> given) const;

  /// Effective integration bounds for one axis.
  std::pair<double, double> axis_domain(int axis, double tail_sigmas) const;

 private:
  int dim_ = 0;
  std::vector<ProductComponent> components_;
};

}  // namespace gic
