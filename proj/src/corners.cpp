#include "gic/corners.hpp"

#include <cmath>
#include <string>

#include "gic/errors.hpp"

namespace gic {

namespace {

void require_regime(const ChannelParams& params, Regime wanted, const char* op) {
  require_z_channel(params);
  Regime got = classify_regime(params);
  if (got != wanted)
    throw RegimeMismatchError(std::string(op) + " requires the " + std::string(regime_name(wanted)) +
                              " regime, but parameters classify as " + std::string(regime_name(got)));
}

}  // namespace

double single_user_capacity(double p, double noise) {
  if (!(p > 0.0) || !std::isfinite(p)) throw DomainError("single_user_capacity: power must be positive");
  if (!(noise > 0.0) || !std::isfinite(noise))
    throw DomainError("single_user_capacity: noise must be positive");
  return 0.5 * std::log1p(p / noise);
}

namespace formulas {

double strong_c1_prime(const ChannelParams& p) {
  return 0.5 * std::log1p(p.a * p.p1 / (p.p2 + p.noise));
}

double strong_c2_prime(const ChannelParams& p) {
  return 0.5 * std::log1p(((p.a - 1.0) * p.p1 + p.p2) / (p.p1 + p.noise));
}

double strong_sum_rate(const ChannelParams& p) {
  return 0.5 * std::log1p((p.a * p.p1 + p.p2) / p.noise);
}

double sato_c2_prime(const ChannelParams& p) {
  return 0.5 * std::log1p(p.p2 / (p.a * p.p1 + p.noise));
}

double costa_c1_prime(const ChannelParams& p) {
  return 0.5 * std::log1p(p.a * p.p1 / (p.p2 + p.noise));
}

}  // namespace formulas

CornerPoints strong_corners(const ChannelParams& params) {
  require_regime(params, Regime::Strong, "strong_corners");
  CornerPoints c;
  c.regime = Regime::Strong;
  c.c1 = single_user_capacity(params.p1, params.noise);
  c.c2 = single_user_capacity(params.p2, params.noise);
  c.c1_prime = formulas::strong_c1_prime(params);
  c.c2_prime = formulas::strong_c2_prime(params);
  c.sum_rate = formulas::strong_sum_rate(params);
  return c;
}

double sato_corner(const ChannelParams& params) {
  require_regime(params, Regime::Weak, "sato_corner");
  return formulas::sato_c2_prime(params);
}

double costa_corner(const ChannelParams& params) {
  require_regime(params, Regime::Weak, "costa_corner");
  if (params.a == 0.0) throw DomainError("costa_corner: undefined for a = 0 (no interference)");
  return formulas::costa_c1_prime(params);
}

CornerPoints corner_points(const ChannelParams& params) {
  require_z_channel(params);
  Regime regime = classify_regime(params);
  CornerPoints c;
  c.regime = regime;
  c.c1 = single_user_capacity(params.p1, params.noise);
  c.c2 = single_user_capacity(params.p2, params.noise);
  switch (regime) {
    case Regime::VeryStrong:
      c.c1_prime = c.c1;
      c.c2_prime = c.c2;
      c.sum_rate = c.c1 + c.c2;
      break;
    case Regime::Strong:
      return strong_corners(params);
    case Regime::Weak:
      c.c1_prime = costa_corner(params);
      c.c2_prime = sato_corner(params);
      break;
    case Regime::NoInterference:
      // Two parallel point-to-point channels; both users reach capacity.
      c.c1_prime = c.c1;
      c.c2_prime = c.c2;
      break;
  }
  return c;
}

RegionBoundary region_boundary(const ChannelParams& params) {
  CornerPoints c = corner_points(params);
  RegionBoundary rb;
  rb.regime = c.regime;
  rb.vertices = {{0.0, c.c2}, {c.c1_prime, c.c2}, {c.c1, c.c2_prime}, {c.c1, 0.0}};
  bool chord_certified = (c.regime != Regime::Weak);
  rb.segment_certified = {true, chord_certified, true};
  return rb;
}

}  // namespace gic
