#pragma once

#include <array>
#include <functional>
#include <span>

#include "gic/density.hpp"

namespace gic {

/// Grid parameters for the deterministic Simpson integrator. Domains are
/// truncated at `tail_sigmas` standard deviations past every component's
/// support, which covers all but ~1e-23 of the mass for the densities in
/// this library. Base resolutions follow the dimension; every integral is
/// evaluated once more at doubled resolution and the two results must agree
/// within the requested tolerance.
struct QuadratureSpec {
  int intervals_1d = 1 << 14;
  int intervals_2d = 1 << 9;
  int intervals_3d = 1 << 6;
  double tail_sigmas = 10.0;
  double tol_1d = 1e-6;
  double tol_23d = 1e-4;

  int base_intervals(int dim) const {
    return dim == 1 ? intervals_1d : (dim == 2 ? intervals_2d : intervals_3d);
  }
  double tolerance(int dim) const { return dim == 1 ? tol_1d : tol_23d; }
};

struct IntegrationResult {
  double value = 0.0;        // refined evaluation
  double coarse = 0.0;       // base-resolution evaluation
  double discrepancy = 0.0;  // |value - coarse|
  int intervals = 0;         // refined per-axis interval count
};

/// Integrand: f(x, p) where p is the density of `domain` at x. Summation
/// order is fixed, so results do not depend on scheduling.
using Integrand = std::function<double(std::span<const double>, double)>;

/// Composite Simpson over the effective support of `domain`, with one
/// refinement and an agreement check against `tol` (defaults to the
/// dimension-appropriate tolerance in `spec`). Throws QuadratureError when
/// the two resolutions disagree.
IntegrationResult integrate_adaptive(const Density& domain, const Integrand& f,
                                     const QuadratureSpec& spec = {}, double tol = -1.0);

/// Single fixed-resolution Simpson pass (no refinement, no check).
double integrate_once(const Density& domain, const Integrand& f, int intervals, double tail_sigmas);

}  // namespace gic
