#include "gic/quadrature.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "gic/errors.hpp"
#include "numerics.hpp"

namespace gic {

namespace {

struct Axis {
  double lo = 0.0;
  double h = 0.0;
  int nodes = 0;
};

Axis make_axis(const Density& d, int axis, int intervals, double tail_sigmas) {
  auto [lo, hi] = d.axis_domain(axis, tail_sigmas);
  Axis a;
  a.lo = lo;
  a.h = (hi - lo) / static_cast<double>(intervals);
  a.nodes = intervals + 1;
  return a;
}

// Simpson node weight (pre-h/3 scaling): 1,4,2,...,2,4,1.
inline double simpson_w(int i, int nodes) {
  if (i == 0 || i == nodes - 1) return 1.0;
  return (i % 2 == 1) ? 4.0 : 2.0;
}

}  // namespace

double integrate_once(const Density& domain, const Integrand& f, int intervals, double tail_sigmas) {
  const int dim = domain.dim();
  std::vector<Axis> axes;
  axes.reserve(dim);
  for (int k = 0; k < dim; ++k) axes.push_back(make_axis(domain, k, intervals, tail_sigmas));

  num::KahanSum total;
  std::array<double, 3> x{0.0, 0.0, 0.0};
  std::span<const double> xs(x.data(), static_cast<std::size_t>(dim));

  if (dim == 1) {
    for (int i = 0; i < axes[0].nodes; ++i) {
      x[0] = axes[0].lo + axes[0].h * i;
      double p = domain.pdf(xs);
      total.add(simpson_w(i, axes[0].nodes) * f(xs, p));
    }
    return total.value() * axes[0].h / 3.0;
  }
  if (dim == 2) {
    for (int i = 0; i < axes[0].nodes; ++i) {
      x[0] = axes[0].lo + axes[0].h * i;
      double wi = simpson_w(i, axes[0].nodes);
      num::KahanSum row;
      for (int j = 0; j < axes[1].nodes; ++j) {
        x[1] = axes[1].lo + axes[1].h * j;
        double p = domain.pdf(xs);
        row.add(simpson_w(j, axes[1].nodes) * f(xs, p));
      }
      total.add(wi * row.value());
    }
    return total.value() * axes[0].h * axes[1].h / 9.0;
  }
  for (int i = 0; i < axes[0].nodes; ++i) {
    x[0] = axes[0].lo + axes[0].h * i;
    double wi = simpson_w(i, axes[0].nodes);
    num::KahanSum plane;
    for (int j = 0; j < axes[1].nodes; ++j) {
      x[1] = axes[1].lo + axes[1].h * j;
      double wj = simpson_w(j, axes[1].nodes);
      num::KahanSum row;
      for (int l = 0; l < axes[2].nodes; ++l) {
        x[2] = axes[2].lo + axes[2].h * l;
        double p = domain.pdf(xs);
        row.add(simpson_w(l, axes[2].nodes) * f(xs, p));
      }
      plane.add(wj * row.value());
    }
    total.add(wi * plane.value());
  }
  return total.value() * axes[0].h * axes[1].h * axes[2].h / 27.0;
}

IntegrationResult integrate_adaptive(const Density& domain, const Integrand& f,
                                     const QuadratureSpec& spec, double tol) {
  const int dim = domain.dim();
  if (dim < 1 || dim > 3) throw DomainError("integrate_adaptive: dimension must be 1..3");
  if (tol < 0.0) tol = spec.tolerance(dim);
  const int base = spec.base_intervals(dim);

  IntegrationResult res;
  res.coarse = integrate_once(domain, f, base, spec.tail_sigmas);
  res.intervals = base * 2;
  res.value = integrate_once(domain, f, res.intervals, spec.tail_sigmas);
  res.discrepancy = std::abs(res.value - res.coarse);
  if (!(res.discrepancy <= tol) || !std::isfinite(res.value)) {
    std::ostringstream msg;
    msg << "quadrature did not converge: base=" << base << " intervals gave " << res.coarse
        << ", refined=" << res.intervals << " gave " << res.value << " (discrepancy "
        << res.discrepancy << " > tol " << tol << ")";
    throw QuadratureError(msg.str());
  }
  return res;
}

}  // namespace gic
