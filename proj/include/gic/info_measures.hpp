#pragma once

#include <cstdint>
#include <string>

#include "gic/density.hpp"
#include "gic/distribution.hpp"
#include "gic/quadrature.hpp"
#include "gic/samples.hpp"

namespace gic {

/// Differential entropy value with the method and accuracy metadata the CLI
/// reports alongside it.
struct EntropyResult {
  double value_nats = 0.0;
  std::string method;         // "quadrature", "piecewise_exact", "separable"
  double tolerance = 0.0;     // agreement requirement that was enforced
  double discrepancy = 0.0;   // measured base-vs-refined disagreement
  int intervals = 0;          // per-axis intervals of the refined pass
};

/// h(X) = -int p log p for a continuous spec. Smooth densities integrate by
/// Simpson with one refinement; 1-D uniform mixtures evaluate exactly piece
/// by piece; a single product component splits into per-axis terms.
EntropyResult entropy(const DistributionSpec& spec, const QuadratureSpec& quad = {});
EntropyResult entropy(const Density& density, const QuadratureSpec& quad = {});
double entropy_value(const DistributionSpec& spec, const QuadratureSpec& quad = {});

struct KnnOptions {
  int k = 4;
  bool jitter_duplicates = false;  // default: fail on duplicate points
  double jitter_scale = 1e-9;      // relative to the sample standard deviation
  std::uint64_t jitter_seed = 0;
};

struct KnnResult {
  double value_nats = 0.0;
  int k = 0;
  std::size_t samples = 0;
  /// Statistical error proxy; the estimator's fluctuation is O(1/sqrt(m)).
  double std_error = 0.0;
};

/// Kozachenko-Leonenko nearest-neighbor entropy estimate.
KnnResult entropy_knn(const SampleSet& samples, const KnnOptions& options = {});

/// N(h) = e^{2h/dim} / (2 pi e).
double entropy_power(double h_nats, int dim);

/// I(X; X+Z) for white Gaussian Z of the given per-axis variance,
/// independent of X: h(X (+) Z) - h(Z) with the convolution done
/// analytically.
double mutual_info_additive(const DistributionSpec& x, double noise_variance,
                            const QuadratureSpec& quad = {});
double mutual_info_additive(const Density& x, double noise_variance, const QuadratureSpec& quad = {});

/// D(p || q) >= 0 by quadrature over p's support; requires supp(p) within
/// supp(q).
double divergence(const DistributionSpec& p, const DistributionSpec& q, const QuadratureSpec& quad = {});
double divergence(const Density& p, const Density& q, const QuadratureSpec& quad = {});

/// Vector correlation coefficient of paired samples:
///   rho(U, V) = sum u_i . v_i / sqrt(sum ||u_i||^2 * sum ||v_i||^2),
/// always in [-1, 1].
double correlation_coefficient(const SampleSet& u, const SampleSet& v);

}  // namespace gic
