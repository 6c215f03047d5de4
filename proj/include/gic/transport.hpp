#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <vector>

#include "gic/density.hpp"
#include "gic/distribution.hpp"
#include "gic/quadrature.hpp"
#include "gic/report.hpp"

namespace gic {

/// Grid resolutions for the tabulated triangular map. Conditioning grids
/// subsample the last-axis grid, so their nodes coincide with table nodes.
struct TransportOptions {
  int table_intervals = 4096;     // last-axis resolution, dims 1 and 2
  int cond_intervals = 256;       // conditioning grid on g1, dim 2
  int table_intervals_3d = 1024;  // last-axis resolution, dim 3
  int cond_intervals_3d = 64;     // conditioning grid per axis, dim 3
  double tail_sigmas = 10.0;
};

/// Coordinatewise-monotone triangular transport from the white Gaussian
/// source Y^G (zero mean, per-axis variance Q = E||Y||^2/dim of the target)
/// to the target law: Y = F(Y^G), where F_k matches the conditional cdf of
/// coordinate k given the previously mapped coordinates. Components are
/// stored as monotone-cubic tables over [-tail_sigmas, +tail_sigmas]
/// standard deviations of the source.
class TriangularMap {
 public:
  int dim() const;
  double source_variance() const;  // Q
  double source_sigma() const;
  const Density& target() const;
  const TransportOptions& options() const;
  double grid_lo() const;
  double grid_hi() const;
  double table_step(int axis) const;

  /// F_k as a function of the first k source coordinates (axis is 0-based;
  /// g must provide axis+1 values). Throws MapRangeError outside the grid.
  double component(int axis, std::span<const double> g) const;

  /// Full map; `out` must have size dim.
  void evaluate(std::span<const double> g, std::span<double> out) const;

  /// dF_k/dg_k by centered differences with step = table spacing.
  double diag_derivative(int axis, std::span<const double> g) const;

  /// Table dump: one row per node, columns axis,i,j,g,value (j = -1 where a
  /// component has no second conditioning index).
  void write_table_csv(std::ostream& out, bool header = false) const;

  struct Impl;
  explicit TriangularMap(std::shared_ptr<const Impl> impl);

 private:
  std::shared_ptr<const Impl> impl_;
};

TriangularMap build_knothe_map(const DistributionSpec& target, const TransportOptions& options = {});
TriangularMap build_knothe_map(const Density& target, const TransportOptions& options = {});

/// Monte Carlo summary of the map's Jacobian over the source distribution.
struct JacobianDiagnostics {
  double mean_trace_over_n = 0.0;   // (1/n) E Tr J
  double mean_log_det = 0.0;        // (1/n) E log det J
  double mean_nth_root_det = 0.0;   // E (det J)^{1/n}
  double rho_empirical = 0.0;       // correlation_coefficient of (Y^G, F(Y^G))
  double stein_diff = 0.0;          // rho_empirical - mean_trace_over_n
  double stein_se = 0.0;            // standard error of stein_diff
  double min_amgm_slack = 0.0;      // min over samples of Tr J / n - (det J)^{1/n}
  double min_diag = 0.0;            // smallest diagonal entry seen
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

JacobianDiagnostics jacobian_diagnostics(const TriangularMap& map, std::size_t mc_samples,
                                         std::uint64_t seed);

/// Verifies rho(Y, Y^G) = (1/n) E Tr J on coupled Monte Carlo samples;
/// passes iff |difference| <= tol + 3 standard errors.
VerificationReport stein_identity_check(const TriangularMap& map, double tol,
                                        std::size_t mc_samples = 1000000, std::uint64_t seed = 1);

/// Verifies h(target) - h(source) = E log det J, with the right-hand side
/// integrated deterministically over the source law.
VerificationReport entropy_change_of_variables_check(const TriangularMap& map, double tol,
                                                     const QuadratureSpec& quad = {});

/// rho(Y, Y^G) for the coupled pair, by deterministic quadrature (dim <= 2).
double rho_quadrature(const TriangularMap& map);

/// (1/n) E log det J by deterministic quadrature over the source law.
double mean_log_det_quadrature(const TriangularMap& map);

/// Kolmogorov-Smirnov distance between mapped source samples and the target
/// marginal on one axis.
double pushforward_ks(const TriangularMap& map, int axis, std::size_t samples, std::uint64_t seed);

}  // namespace gic
