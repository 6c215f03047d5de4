#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "gic/distribution.hpp"
#include "gic/rng.hpp"

namespace gic {

/// A set of dim-dimensional sample vectors in row-major storage.
class SampleSet {
 public:
  explicit SampleSet(int dim);

  static SampleSet draw(const DistributionSpec& spec, std::size_t n, Rng& rng);

  /// CSV: one row per vector, one column per coordinate.
  static SampleSet read_csv(std::istream& in, bool header = false);
  void write_csv(std::ostream& out, bool header = false) const;

  int dim() const { return dim_; }
  std::size_t size() const { return data_.size() / static_cast<std::size_t>(dim_); }
  bool empty() const { return data_.empty(); }

  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_)};
  }
  void push(std::span<const double> v);

  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

 private:
  int dim_ = 1;
  std::vector<double> data_;
};

}  // namespace gic
