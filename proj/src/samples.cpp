#include "gic/samples.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "gic/errors.hpp"

namespace gic {

namespace {

void format_double(std::ostream& out, double v) {
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  out.write(buf.data(), ptr - buf.data());
  (void)ec;
}

}  // namespace

SampleSet::SampleSet(int dim) : dim_(dim) {
  if (dim < 1 || dim > 3) throw DomainError("SampleSet: dimension must be 1..3");
}

SampleSet SampleSet::draw(const DistributionSpec& spec, std::size_t n, Rng& rng) {
  SampleSet s(spec.dim());
  s.data_.resize(n * static_cast<std::size_t>(spec.dim()));
  for (std::size_t i = 0; i < n; ++i)
    spec.sample(rng, {s.data_.data() + i * static_cast<std::size_t>(spec.dim()),
                      static_cast<std::size_t>(spec.dim())});
  return s;
}

void SampleSet::push(std::span<const double> v) {
  if (static_cast<int>(v.size()) != dim_) throw DomainError("SampleSet::push: dimension mismatch");
  for (double x : v) {
    if (!std::isfinite(x)) throw DomainError("SampleSet::push: values must be finite");
    data_.push_back(x);
  }
}

SampleSet SampleSet::read_csv(std::istream& in, bool header) {
  std::string line;
  int dim = -1;
  std::vector<double> values;
  std::size_t rows = 0;
  bool skipped_header = !header;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (!skipped_header) {
      skipped_header = true;
      continue;
    }
    std::stringstream row(line);
    std::string cell;
    int cols = 0;
    while (std::getline(row, cell, ',')) {
      try {
        values.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw DomainError("sample CSV: could not parse value '" + cell + "'");
      }
      ++cols;
    }
    if (dim < 0) dim = cols;
    if (cols != dim) throw DomainError("sample CSV: inconsistent column count");
    ++rows;
  }
  if (rows == 0) throw DomainError("sample CSV: no data rows");
  SampleSet s(dim);
  for (double x : values)
    if (!std::isfinite(x)) throw DomainError("sample CSV: values must be finite");
  s.data_ = std::move(values);
  return s;
}

void SampleSet::write_csv(std::ostream& out, bool header) const {
  if (header) {
    for (int k = 0; k < dim_; ++k) {
      if (k) out << ',';
      out << 'x' << k;
    }
    out << '\n';
  }
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    auto r = row(i);
    for (int k = 0; k < dim_; ++k) {
      if (k) out << ',';
      format_double(out, r[k]);
    }
    out << '\n';
  }
}

}  // namespace gic
