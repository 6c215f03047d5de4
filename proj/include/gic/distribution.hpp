#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "gic/rng.hpp"

namespace gic {

/// Diagonal Gaussian, one mean/variance per coordinate.
struct GaussianSpec {
  std::vector<double> mean;
  std::vector<double> variance;
};

/// Uniform distribution on an axis-aligned box.
struct UniformSpec {
  std::vector<double> low;
  std::vector<double> high;
};

/// Finite set of point masses. Has no density; differential quantities
/// reject it unless it is convolved with Gaussian noise first.
struct AtomsSpec {
  std::vector<std::vector<double>> points;
  std::vector<double> weights;
};

struct MixtureComponent {
  double weight = 0.0;
  std::vector<double> mean;
  std::vector<double> variance;
};

/// Mixture of diagonal Gaussians.
struct MixtureSpec {
  std::vector<MixtureComponent> components;
};

/// Point masses convolved with white Gaussian noise; a smooth code-like
/// input with an analytic density.
struct AtomsGaussianSpec {
  AtomsSpec atoms;
  double noise_variance = 0.0;
};

/// Analytic low-dimensional (dim <= 3) distribution supporting density
/// evaluation, exact moments, sampling, and JSON (de)serialization.
class DistributionSpec {
 public:
  using Payload = std::variant<GaussianSpec, UniformSpec, AtomsSpec, MixtureSpec, AtomsGaussianSpec>;

  static DistributionSpec gaussian(std::vector<double> mean, std::vector<double> variance);
  static DistributionSpec gaussian1(double mean, double variance);
  static DistributionSpec uniform(std::vector<double> low, std::vector<double> high);
  static DistributionSpec uniform1(double low, double high);
  static DistributionSpec atoms(std::vector<std::vector<double>> points, std::vector<double> weights);
  static DistributionSpec atoms1(std::vector<double> points, std::vector<double> weights);
  static DistributionSpec mixture(std::vector<MixtureComponent> components);
  static DistributionSpec atoms_gaussian(std::vector<std::vector<double>> points,
                                         std::vector<double> weights, double noise_variance);
  static DistributionSpec atoms_gaussian1(std::vector<double> points, std::vector<double> weights,
                                          double noise_variance);

  int dim() const { return dim_; }
  const Payload& payload() const { return payload_; }
  std::string kind_name() const;

  /// False only for bare atoms.
  bool has_density() const;

  std::vector<double> mean() const;
  std::vector<double> variance() const;  // centered, per coordinate
  double avg_variance() const;
  double avg_second_moment() const;  // E||X||^2 / dim

  /// Zero-mean white Gaussian with the same E||X||^2 / dim.
  DistributionSpec gaussian_surrogate() const;

  /// Draws one sample into `out` (size dim).
  void sample(Rng& rng, std::span<double> out) const;

  nlohmann::ordered_json to_json() const;
  static DistributionSpec from_json(const nlohmann::json& j);

 private:
  DistributionSpec(int dim, Payload payload) : dim_(dim), payload_(std::move(payload)) {}
  int dim_ = 1;
  Payload payload_;
};

}  // namespace gic
