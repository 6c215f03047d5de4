#pragma once

#include <optional>
#include <vector>

#include "gic/channel.hpp"

namespace gic {

/// Corner points of the capacity region: single-user bounds c1, c2 and the
/// interference-limited rates c1_prime, c2_prime of the two corners
/// (c1, c2_prime) and (c1_prime, c2). All rates in nats. sum_rate is set
/// for Strong and VeryStrong only.
struct CornerPoints {
  double c1 = 0.0;
  double c2 = 0.0;
  double c1_prime = 0.0;
  double c2_prime = 0.0;
  Regime regime = Regime::NoInterference;
  std::optional<double> sum_rate;
};

/// Outer-bound boundary polyline from (0, c2) to (c1, 0). segment_certified
/// has one flag per segment between consecutive vertices; in the Weak regime
/// the chord between the two corner points is emitted for plotting but is
/// not an established part of the region boundary.
struct RegionBoundary {
  Regime regime = Regime::NoInterference;
  std::vector<RatePair> vertices;
  std::vector<bool> segment_certified;
};

/// (1/2) log(1 + p/noise) in nats.
double single_user_capacity(double p, double noise);

/// Closed forms for the corner rates, without regime guards. These are the
/// raw expressions, usable at and across regime boundaries (continuity
/// checks evaluate them outside their nominal regime).
namespace formulas {
double strong_c1_prime(const ChannelParams& params);
double strong_c2_prime(const ChannelParams& params);
double strong_sum_rate(const ChannelParams& params);
double sato_c2_prime(const ChannelParams& params);
double costa_c1_prime(const ChannelParams& params);
}  // namespace formulas

/// Corner points under strong interference. Requires Regime::Strong.
CornerPoints strong_corners(const ChannelParams& params);

/// c2_prime under weak interference. Requires Regime::Weak.
double sato_corner(const ChannelParams& params);

/// c1_prime under weak interference. Requires Regime::Weak and a > 0.
double costa_corner(const ChannelParams& params);

/// Regime dispatcher. VeryStrong and NoInterference return primed rates
/// equal to the single-user bounds.
CornerPoints corner_points(const ChannelParams& params);

/// Boundary polyline for the regime of `params` (Z-channel only).
RegionBoundary region_boundary(const ChannelParams& params);

}  // namespace gic
