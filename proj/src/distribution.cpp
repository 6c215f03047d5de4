#include "gic/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <nlohmann/json.hpp>

#include "gic/density.hpp"
#include "gic/errors.hpp"

namespace gic {

namespace {

constexpr int kMaxDim = 3;
constexpr double kWeightTol = 1e-12;

void check_dim(std::size_t d, const char* what) {
  if (d < 1 || d > kMaxDim)
    throw DomainError(std::string(what) + ": dimension must be between 1 and 3");
}

void check_finite(const std::vector<double>& v, const char* what) {
  for (double x : v)
    if (!std::isfinite(x)) throw DomainError(std::string(what) + ": values must be finite");
}

void check_weights(const std::vector<double>& w, const char* what) {
  if (w.empty()) throw DomainError(std::string(what) + ": weights must be non-empty");
  double sum = 0.0;
  for (double x : w) {
    if (!(x >= 0.0) || !std::isfinite(x))
      throw DomainError(std::string(what) + ": weights must be non-negative and finite");
    sum += x;
  }
  if (std::abs(sum - 1.0) > kWeightTol)
    throw DomainError(std::string(what) + ": weights must sum to 1 within 1e-12");
}

std::vector<std::vector<double>> wrap_1d(const std::vector<double>& points) {
  std::vector<std::vector<double>> out;
  out.reserve(points.size());
  for (double p : points) out.push_back({p});
  return out;
}

}  // namespace

DistributionSpec DistributionSpec::gaussian(std::vector<double> mean, std::vector<double> variance) {
  check_dim(mean.size(), "gaussian");
  if (mean.size() != variance.size()) throw DomainError("gaussian: mean/variance size mismatch");
  check_finite(mean, "gaussian");
  for (double v : variance)
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("gaussian: variances must be positive");
  int d = static_cast<int>(mean.size());
  return DistributionSpec(d, GaussianSpec{std::move(mean), std::move(variance)});
}

DistributionSpec DistributionSpec::gaussian1(double mean, double variance) {
  return gaussian({mean}, {variance});
}

DistributionSpec DistributionSpec::uniform(std::vector<double> low, std::vector<double> high) {
  check_dim(low.size(), "uniform");
  if (low.size() != high.size()) throw DomainError("uniform: low/high size mismatch");
  check_finite(low, "uniform");
  check_finite(high, "uniform");
  for (std::size_t k = 0; k < low.size(); ++k)
    if (!(high[k] > low[k])) throw DomainError("uniform: need high > low on every axis");
  int d = static_cast<int>(low.size());
  return DistributionSpec(d, UniformSpec{std::move(low), std::move(high)});
}

DistributionSpec DistributionSpec::uniform1(double low, double high) {
  return uniform({low}, {high});
}

DistributionSpec DistributionSpec::atoms(std::vector<std::vector<double>> points,
                                         std::vector<double> weights) {
  if (points.empty()) throw DomainError("atoms: need at least one point");
  check_dim(points.front().size(), "atoms");
  if (points.size() != weights.size()) throw DomainError("atoms: points/weights size mismatch");
  for (const auto& p : points) {
    if (p.size() != points.front().size()) throw DomainError("atoms: inconsistent point dimensions");
    check_finite(p, "atoms");
  }
  check_weights(weights, "atoms");
  int d = static_cast<int>(points.front().size());
  return DistributionSpec(d, AtomsSpec{std::move(points), std::move(weights)});
}

DistributionSpec DistributionSpec::atoms1(std::vector<double> points, std::vector<double> weights) {
  return atoms(wrap_1d(points), std::move(weights));
}

DistributionSpec DistributionSpec::mixture(std::vector<MixtureComponent> components) {
  if (components.empty()) throw DomainError("mixture: need at least one component");
  std::size_t d = components.front().mean.size();
  check_dim(d, "mixture");
  std::vector<double> weights;
  for (const auto& c : components) {
    if (c.mean.size() != d || c.variance.size() != d)
      throw DomainError("mixture: inconsistent component dimensions");
    check_finite(c.mean, "mixture");
    for (double v : c.variance)
      if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("mixture: variances must be positive");
    weights.push_back(c.weight);
  }
  check_weights(weights, "mixture");
  return DistributionSpec(static_cast<int>(d), MixtureSpec{std::move(components)});
}

DistributionSpec DistributionSpec::atoms_gaussian(std::vector<std::vector<double>> points,
                                                  std::vector<double> weights, double noise_variance) {
  if (!(noise_variance > 0.0) || !std::isfinite(noise_variance))
    throw DomainError("atoms_gaussian: noise variance must be positive");
  DistributionSpec base = atoms(std::move(points), std::move(weights));
  auto& payload = std::get<AtomsSpec>(base.payload_);
  return DistributionSpec(base.dim(), AtomsGaussianSpec{std::move(payload), noise_variance});
}

DistributionSpec DistributionSpec::atoms_gaussian1(std::vector<double> points,
                                                   std::vector<double> weights, double noise_variance) {
  return atoms_gaussian(wrap_1d(points), std::move(weights), noise_variance);
}

std::string DistributionSpec::kind_name() const {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GaussianSpec>) return "gaussian";
        if constexpr (std::is_same_v<T, UniformSpec>) return "uniform";
        if constexpr (std::is_same_v<T, AtomsSpec>) return "atoms";
        if constexpr (std::is_same_v<T, MixtureSpec>) return "mixture";
        if constexpr (std::is_same_v<T, AtomsGaussianSpec>) return "atoms_gaussian";
      },
      payload_);
}

bool DistributionSpec::has_density() const {
  return !std::holds_alternative<AtomsSpec>(payload_);
}

std::vector<double> DistributionSpec::mean() const {
  Density d = Density::from_spec(*this);
  std::vector<double> out(dim_);
  for (int k = 0; k < dim_; ++k) out[k] = d.axis_mean(k);
  return out;
}

std::vector<double> DistributionSpec::variance() const {
  Density d = Density::from_spec(*this);
  std::vector<double> out(dim_);
  for (int k = 0; k < dim_; ++k) out[k] = d.axis_variance(k);
  return out;
}

double DistributionSpec::avg_variance() const {
  return Density::from_spec(*this).avg_variance();
}

double DistributionSpec::avg_second_moment() const {
  return Density::from_spec(*this).avg_second_moment();
}

DistributionSpec DistributionSpec::gaussian_surrogate() const {
  double q = avg_second_moment();
  if (!(q > 0.0)) throw DomainError("gaussian_surrogate: distribution has zero power");
  return gaussian(std::vector<double>(dim_, 0.0), std::vector<double>(dim_, q));
}

void DistributionSpec::sample(Rng& rng, std::span<double> out) const {
  if (static_cast<int>(out.size()) != dim_) throw DomainError("sample: output size mismatch");
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GaussianSpec>) {
          for (int k = 0; k < dim_; ++k) out[k] = s.mean[k] + std::sqrt(s.variance[k]) * rng.normal();
        } else if constexpr (std::is_same_v<T, UniformSpec>) {
          for (int k = 0; k < dim_; ++k) out[k] = s.low[k] + (s.high[k] - s.low[k]) * rng.uniform();
        } else if constexpr (std::is_same_v<T, AtomsSpec>) {
          double u = rng.uniform();
          std::size_t pick = 0;
          double acc = 0.0;
          for (std::size_t i = 0; i < s.weights.size(); ++i) {
            acc += s.weights[i];
            if (u < acc) {
              pick = i;
              break;
            }
            pick = i;
          }
          for (int k = 0; k < dim_; ++k) out[k] = s.points[pick][k];
        } else if constexpr (std::is_same_v<T, MixtureSpec>) {
          double u = rng.uniform();
          std::size_t pick = 0;
          double acc = 0.0;
          for (std::size_t i = 0; i < s.components.size(); ++i) {
            acc += s.components[i].weight;
            if (u < acc) {
              pick = i;
              break;
            }
            pick = i;
          }
          const auto& c = s.components[pick];
          for (int k = 0; k < dim_; ++k) out[k] = c.mean[k] + std::sqrt(c.variance[k]) * rng.normal();
        } else if constexpr (std::is_same_v<T, AtomsGaussianSpec>) {
          double u = rng.uniform();
          std::size_t pick = 0;
          double acc = 0.0;
          for (std::size_t i = 0; i < s.atoms.weights.size(); ++i) {
            acc += s.atoms.weights[i];
            if (u < acc) {
              pick = i;
              break;
            }
            pick = i;
          }
          double sigma = std::sqrt(s.noise_variance);
          for (int k = 0; k < dim_; ++k) out[k] = s.atoms.points[pick][k] + sigma * rng.normal();
        }
      },
      payload_);
}

nlohmann::ordered_json DistributionSpec::to_json() const {
  nlohmann::ordered_json j;
  j["kind"] = kind_name();
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GaussianSpec>) {
          j["mean"] = s.mean;
          j["variance"] = s.variance;
        } else if constexpr (std::is_same_v<T, UniformSpec>) {
          j["low"] = s.low;
          j["high"] = s.high;
        } else if constexpr (std::is_same_v<T, AtomsSpec>) {
          j["points"] = s.points;
          j["weights"] = s.weights;
        } else if constexpr (std::is_same_v<T, MixtureSpec>) {
          auto arr = nlohmann::ordered_json::array();
          for (const auto& c : s.components) {
            nlohmann::ordered_json jc;
            jc["weight"] = c.weight;
            jc["mean"] = c.mean;
            jc["variance"] = c.variance;
            arr.push_back(jc);
          }
          j["components"] = arr;
        } else if constexpr (std::is_same_v<T, AtomsGaussianSpec>) {
          j["points"] = s.atoms.points;
          j["weights"] = s.atoms.weights;
          j["noise_variance"] = s.noise_variance;
        }
      },
      payload_);
  return j;
}

DistributionSpec DistributionSpec::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw DomainError("distribution JSON must be an object with a \"kind\" field");
  const std::string kind = j.at("kind").get<std::string>();
  try {
    if (kind == "gaussian")
      return gaussian(j.at("mean").get<std::vector<double>>(),
                      j.at("variance").get<std::vector<double>>());
    if (kind == "uniform")
      return uniform(j.at("low").get<std::vector<double>>(), j.at("high").get<std::vector<double>>());
    if (kind == "atoms")
      return atoms(j.at("points").get<std::vector<std::vector<double>>>(),
                   j.at("weights").get<std::vector<double>>());
    if (kind == "mixture") {
      std::vector<MixtureComponent> comps;
      for (const auto& jc : j.at("components")) {
        MixtureComponent c;
        c.weight = jc.at("weight").get<double>();
        c.mean = jc.at("mean").get<std::vector<double>>();
        c.variance = jc.at("variance").get<std::vector<double>>();
        comps.push_back(std::move(c));
      }
      return mixture(std::move(comps));
    }
    if (kind == "atoms_gaussian")
      return atoms_gaussian(j.at("points").get<std::vector<std::vector<double>>>(),
                            j.at("weights").get<std::vector<double>>(),
                            j.at("noise_variance").get<double>());
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed distribution JSON: ") + e.what());
  }
  throw DomainError("unknown distribution kind: " + kind);
}

}  // namespace gic
