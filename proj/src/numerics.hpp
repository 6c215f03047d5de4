#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace gic::num {

inline constexpr double kInvSqrt2Pi = 0.39894228040143267794;
inline constexpr double kSqrt1_2 = 0.70710678118654752440;
inline constexpr double kLog2PiE = 2.8378770664093454836;  // log(2*pi*e)

inline double norm_pdf(double z) { return kInvSqrt2Pi * std::exp(-0.5 * z * z); }

inline double norm_cdf(double z) { return 0.5 * std::erfc(-z * kSqrt1_2); }

/// Antiderivative of the standard normal cdf: psi(z) = z*Phi(z) + phi(z).
inline double norm_cdf_integral(double z) { return z * norm_cdf(z) + norm_pdf(z); }

/// Kahan-Neumaier compensated accumulator with a fixed summation order.
class KahanSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Monotone cubic interpolant (Fritsch-Carlson) on a uniform grid.
/// Node values must be nondecreasing; the interpolant is then monotone.
class MonotoneCubic {
 public:
  MonotoneCubic() = default;
  MonotoneCubic(double x0, double dx, std::vector<double> values);

  double operator()(double x) const;
  double lo() const { return x0_; }
  double hi() const { return x0_ + dx_ * static_cast<double>(values_.size() - 1); }
  double dx() const { return dx_; }
  const std::vector<double>& values() const { return values_; }

 private:
  double x0_ = 0.0;
  double dx_ = 1.0;
  std::vector<double> values_;
  std::vector<double> slopes_;
};

/// Computes Fritsch-Carlson node slopes for nondecreasing values on a
/// uniform grid (harmonic-mean limiter; zero at flat segments).
std::vector<double> monotone_slopes(std::span<const double> values, double dx);

/// Solves cdf(x) = u for a strictly increasing cdf with derivative pdf on
/// [lo, hi] by safeguarded Newton with a warm start.
template <class Cdf, class Pdf>
double invert_cdf(const Cdf& cdf, const Pdf& pdf, double u, double lo, double hi, double warm_start) {
  double a = lo, b = hi;
  double x = warm_start;
  if (!(x > a) || !(x < b)) x = 0.5 * (a + b);
  for (int iter = 0; iter < 100; ++iter) {
    double f = cdf(x) - u;
    if (f > 0.0)
      b = x;
    else
      a = x;
    double d = pdf(x);
    double step = (d > 1e-300) ? f / d : 0.0;
    double xn = x - step;
    if (!(xn > a) || !(xn < b) || step == 0.0) xn = 0.5 * (a + b);
    double scale = std::max({std::abs(x), std::abs(xn), 1e-12});
    if (std::abs(xn - x) <= 1e-15 * scale) return xn;
    x = xn;
    if (b - a <= 1e-15 * std::max(std::abs(a), std::abs(b)) + 1e-300) return x;
  }
  return x;
}

}  // namespace gic::num
