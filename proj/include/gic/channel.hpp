#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace gic {

/// Physical constants of the two-user interference channel in standard form:
///   Y1 = X1 + sqrt(b) X2 + Z,   Y2 = sqrt(a) X1 + X2 + Z,
/// with transmit powers p1, p2, common noise power `noise`, and cross gains
/// a, b. All powers are linear. The Z-channel sets b = 0.
struct ChannelParams {
  double p1 = 1.0;
  double p2 = 1.0;
  double noise = 1.0;
  double a = 0.0;
  double b = 0.0;
};

/// Interference regime of the cross link a, partitioning a >= 0:
///   VeryStrong       a >= 1 + p2/noise
///   Strong           1 <= a < 1 + p2/noise
///   Weak             0 < a < 1
///   NoInterference   a == 0
enum class Regime { VeryStrong, Strong, Weak, NoInterference };

/// A point (r1, r2) in rate space, in nats per channel use.
struct RatePair {
  double r1 = 0.0;
  double r2 = 0.0;
};

/// One violated parameter invariant, reported field by field.
struct ParamViolation {
  std::string field;
  double value = 0.0;
  std::string message;
};

/// Checks every ChannelParams invariant and returns the violations
/// (empty means the parameters are valid).
std::vector<ParamViolation> validate_params(const ChannelParams& params);

/// Throws DomainError with all violations listed if params are invalid.
void require_valid(const ChannelParams& params);

/// Additionally requires b == 0 (Z-channel); corner computations need it.
void require_z_channel(const ChannelParams& params);

/// Classifies valid params into their regime. Boundaries use the half-open
/// convention: a == 1 + p2/noise is VeryStrong, a == 1 is Strong.
Regime classify_regime(const ChannelParams& params);

std::string_view regime_name(Regime regime);
Regime regime_from_name(std::string_view name);

constexpr double nats_to_bits(double nats) { return nats / 0.6931471805599453094; }

void to_json(nlohmann::json& j, const ChannelParams& params);
void from_json(const nlohmann::json& j, ChannelParams& params);

}  // namespace gic
