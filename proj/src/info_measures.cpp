#include "gic/info_measures.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <boost/math/special_functions/digamma.hpp>

#include "gic/errors.hpp"
#include "numerics.hpp"

namespace gic {

namespace {

double neg_p_log_p(double p) { return (p > 1e-300) ? -p * std::log(p) : 0.0; }

/// Exact entropy of a 1-D mixture of pure boxes (piecewise-constant density).
double entropy_piecewise_boxes(const Density& d) {
  std::vector<double> edges;
  for (const auto& c : d.components()) {
    const AxisFactor& f = c.axes[0];
    edges.push_back(f.shift - f.half_width);
    edges.push_back(f.shift + f.half_width);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  num::KahanSum h;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    double len = edges[i + 1] - edges[i];
    if (!(len > 0.0)) continue;
    double mid = 0.5 * (edges[i] + edges[i + 1]);
    double level = d.pdf(std::span<const double>(&mid, 1));
    h.add(len * neg_p_log_p(level));
  }
  return h.value();
}

bool all_smooth(const Density& d) {
  for (const auto& c : d.components())
    for (const auto& f : c.axes)
      if (!f.has_gauss()) return false;
  return true;
}

bool all_boxes_1d(const Density& d) {
  if (d.dim() != 1) return false;
  for (const auto& c : d.components()) {
    const AxisFactor& f = c.axes[0];
    if (!f.has_box() || f.has_gauss()) return false;
  }
  return true;
}

/// Entropy of a single AxisFactor (1-D), exact where closed forms exist.
double axis_factor_entropy(const AxisFactor& f, const QuadratureSpec& quad, double tol,
                           EntropyResult* meta) {
  if (f.has_box() && !f.has_gauss()) return std::log(2.0 * f.half_width);
  if (!f.has_box() && f.has_gauss()) return 0.5 * (num::kLog2PiE + std::log(f.var));
  // smoothed box: 1-D quadrature
  Density one(1, {ProductComponent{1.0, {f}}});
  auto r = integrate_adaptive(one, [](std::span<const double>, double p) { return neg_p_log_p(p); },
                              quad, tol);
  if (meta) {
    meta->discrepancy = std::max(meta->discrepancy, r.discrepancy);
    meta->intervals = std::max(meta->intervals, r.intervals);
  }
  return r.value;
}

}  // namespace

EntropyResult entropy(const Density& density, const QuadratureSpec& quad) {
  if (!density.continuous())
    throw DiscreteInputError("entropy: distribution has a point-mass part, no differential entropy");
  const int dim = density.dim();
  EntropyResult res;
  res.tolerance = quad.tolerance(dim);

  if (all_boxes_1d(density)) {
    res.value_nats = entropy_piecewise_boxes(density);
    res.method = "piecewise_exact";
    return res;
  }
  if (density.components().size() == 1 && !all_smooth(density)) {
    // Single product component with at least one hard box edge: split per
    // axis; independence makes entropy additive.
    num::KahanSum h;
    for (const auto& f : density.components()[0].axes)
      h.add(axis_factor_entropy(f, quad, quad.tol_1d, &res));
    res.value_nats = h.value();
    res.method = "separable";
    res.tolerance = quad.tol_1d;
    return res;
  }
  if (!all_smooth(density))
    throw QuadratureError(
        "entropy: mixture with hard uniform edges in dimension >= 2 is not integrable on this grid");

  auto r = integrate_adaptive(
      density, [](std::span<const double>, double p) { return neg_p_log_p(p); }, quad);
  res.value_nats = r.value;
  res.method = "quadrature";
  res.discrepancy = r.discrepancy;
  res.intervals = r.intervals;
  return res;
}

EntropyResult entropy(const DistributionSpec& spec, const QuadratureSpec& quad) {
  if (!spec.has_density())
    throw DiscreteInputError("entropy: finite atoms have no differential entropy");
  return entropy(Density::from_spec(spec), quad);
}

double entropy_value(const DistributionSpec& spec, const QuadratureSpec& quad) {
  return entropy(spec, quad).value_nats;
}

double entropy_power(double h_nats, int dim) {
  if (!std::isfinite(h_nats)) throw DomainError("entropy_power: entropy must be finite");
  if (dim < 1) throw DomainError("entropy_power: dimension must be positive");
  return std::exp(2.0 * h_nats / static_cast<double>(dim)) / (2.0 * 3.14159265358979323846 * 2.71828182845904523536);
}

double mutual_info_additive(const Density& x, double noise_variance, const QuadratureSpec& quad) {
  if (!(noise_variance > 0.0)) throw DomainError("mutual_info_additive: noise variance must be positive");
  Density sum = x.convolve_white_gaussian(noise_variance);
  double h_sum = entropy(sum, quad).value_nats;
  double h_noise = 0.5 * static_cast<double>(x.dim()) * (num::kLog2PiE + std::log(noise_variance));
  return h_sum - h_noise;
}

double mutual_info_additive(const DistributionSpec& x, double noise_variance,
                            const QuadratureSpec& quad) {
  return mutual_info_additive(Density::from_spec(x), noise_variance, quad);
}

double divergence(const Density& p, const Density& q, const QuadratureSpec& quad) {
  if (p.dim() != q.dim()) throw DomainError("divergence: dimension mismatch");
  if (!p.continuous() || !q.continuous())
    throw DiscreteInputError("divergence: both distributions must be continuous");
  if (!all_smooth(p) || !all_smooth(q))
    throw QuadratureError("divergence: only smooth (Gaussian-smoothed) densities are supported");
  bool support_violated = false;
  auto integrand = [&](std::span<const double> x, double pv) -> double {
    if (pv <= 1e-300) return 0.0;
    double qv = q.pdf(x);
    if (qv <= 1e-300) {
      if (pv > 1e-15) support_violated = true;
      return 0.0;
    }
    return pv * std::log(pv / qv);
  };
  auto r = integrate_adaptive(p, integrand, quad);
  if (support_violated)
    throw SupportError("divergence: supp(p) is not contained in supp(q)");
  return r.value;
}

double divergence(const DistributionSpec& p, const DistributionSpec& q, const QuadratureSpec& quad) {
  return divergence(Density::from_spec(p), Density::from_spec(q), quad);
}

double correlation_coefficient(const SampleSet& u, const SampleSet& v) {
  if (u.dim() != v.dim() || u.size() != v.size())
    throw DomainError("correlation_coefficient: samples must be paired (same count and dimension)");
  if (u.empty()) throw DomainError("correlation_coefficient: empty sample sets");
  num::KahanSum dot, uu, vv;
  const std::size_t n = u.size();
  for (std::size_t i = 0; i < n; ++i) {
    auto a = u.row(i);
    auto b = v.row(i);
    double d = 0.0, sa = 0.0, sb = 0.0;
    for (int k = 0; k < u.dim(); ++k) {
      d += a[k] * b[k];
      sa += a[k] * a[k];
      sb += b[k] * b[k];
    }
    dot.add(d);
    uu.add(sa);
    vv.add(sb);
  }
  double denom = std::sqrt(uu.value() * vv.value());
  if (!(denom > 0.0)) throw DomainError("correlation_coefficient: zero-power input");
  return dot.value() / denom;
}

namespace {

/// Minimal k-d tree for k-th nearest neighbor queries in dim <= 3.
class KdTree {
 public:
  KdTree(const std::vector<double>& data, int dim, std::size_t n) : data_(data), dim_(dim) {
    index_.resize(n);
    std::iota(index_.begin(), index_.end(), std::size_t{0});
    nodes_.reserve(2 * n);
    root_ = build(0, n, 0);
  }

  /// Distance to the k-th nearest neighbor of point `qi`, excluding itself.
  double knn_distance(std::size_t qi, int k) const {
    // bounded max-heap of the k best squared distances
    best_.assign(static_cast<std::size_t>(k), std::numeric_limits<double>::infinity());
    query(root_, qi, k, 0);
    return std::sqrt(best_.front());
  }

 private:
  struct Node {
    std::size_t point = 0;
    int left = -1;
    int right = -1;
  };

  const double* pt(std::size_t i) const { return data_.data() + i * static_cast<std::size_t>(dim_); }

  int build(std::size_t lo, std::size_t hi, int depth) {
    if (lo >= hi) return -1;
    std::size_t mid = (lo + hi) / 2;
    int axis = depth % dim_;
    std::nth_element(index_.begin() + lo, index_.begin() + mid, index_.begin() + hi,
                     [&](std::size_t a, std::size_t b) { return pt(a)[axis] < pt(b)[axis]; });
    Node node;
    node.point = index_[mid];
    int id = static_cast<int>(nodes_.size());
    nodes_.push_back(node);
    int left = build(lo, mid, depth + 1);
    int right = build(mid + 1, hi, depth + 1);
    nodes_[id].left = left;
    nodes_[id].right = right;
    return id;
  }

  void heap_push(double d2) const {
    std::pop_heap(best_.begin(), best_.end());
    best_.back() = d2;
    std::push_heap(best_.begin(), best_.end());
  }

  void query(int id, std::size_t qi, int k, int depth) const {
    if (id < 0) return;
    const Node& node = nodes_[static_cast<std::size_t>(id)];
    const double* q = pt(qi);
    if (node.point != qi) {
      const double* p = pt(node.point);
      double d2 = 0.0;
      for (int c = 0; c < dim_; ++c) {
        double diff = q[c] - p[c];
        d2 += diff * diff;
      }
      if (d2 < best_.front()) heap_push(d2);
    }
    int axis = depth % dim_;
    double delta = q[axis] - pt(node.point)[axis];
    int near = delta < 0.0 ? node.left : node.right;
    int far = delta < 0.0 ? node.right : node.left;
    query(near, qi, k, depth + 1);
    if (delta * delta < best_.front()) query(far, qi, k, depth + 1);
  }

  const std::vector<double>& data_;
  int dim_;
  std::vector<std::size_t> index_;
  std::vector<Node> nodes_;
  int root_ = -1;
  mutable std::vector<double> best_;
};

double unit_ball_volume(int dim) {
  switch (dim) {
    case 1: return 2.0;
    case 2: return 3.14159265358979323846;
    default: return 4.18879020478639098462;  // 4*pi/3
  }
}

}  // namespace

KnnResult entropy_knn(const SampleSet& samples, const KnnOptions& options) {
  const std::size_t m = samples.size();
  const int d = samples.dim();
  const int k = options.k;
  if (k < 1) throw DomainError("entropy_knn: k must be >= 1");
  if (m < static_cast<std::size_t>(10 * k))
    throw DomainError("entropy_knn: need at least 10*k samples");

  std::vector<double> data = samples.data();
  double scale = 0.0;
  {
    // per-axis standard deviation, for the jitter scale and degeneracy check
    for (int c = 0; c < d; ++c) {
      double mean = 0.0, sq = 0.0;
      for (std::size_t i = 0; i < m; ++i) mean += data[i * d + c];
      mean /= static_cast<double>(m);
      for (std::size_t i = 0; i < m; ++i) {
        double t = data[i * d + c] - mean;
        sq += t * t;
      }
      scale = std::max(scale, std::sqrt(sq / static_cast<double>(m)));
    }
  }
  if (!(scale > 0.0)) throw DomainError("entropy_knn: degenerate (constant) sample set");

  for (int attempt = 0;; ++attempt) {
    KdTree tree(data, d, m);
    num::KahanSum sum_log;
    double sq_sum = 0.0;
    bool degenerate = false;
    std::vector<double> logs(m);
    for (std::size_t i = 0; i < m; ++i) {
      double dist = tree.knn_distance(i, k);
      if (!(dist > 0.0)) {
        degenerate = true;
        break;
      }
      logs[i] = static_cast<double>(d) * std::log(dist);
      sum_log.add(logs[i]);
    }
    if (degenerate) {
      if (!options.jitter_duplicates || attempt >= 1)
        throw DomainError("entropy_knn: duplicate points (zero nearest-neighbor distance)");
      Rng rng(options.jitter_seed);
      double eps = options.jitter_scale * scale;
      for (auto& x : data) x += eps * (2.0 * rng.uniform() - 1.0);
      continue;
    }
    double mean_log = sum_log.value() / static_cast<double>(m);
    for (std::size_t i = 0; i < m; ++i) {
      double t = logs[i] - mean_log;
      sq_sum += t * t;
    }
    KnnResult res;
    res.k = k;
    res.samples = m;
    res.value_nats = boost::math::digamma(static_cast<double>(m)) -
                     boost::math::digamma(static_cast<double>(k)) + std::log(unit_ball_volume(d)) +
                     mean_log;
    res.std_error = std::sqrt(sq_sum / static_cast<double>(m)) / std::sqrt(static_cast<double>(m));
    return res;
  }
}

}  // namespace gic
