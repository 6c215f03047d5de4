#include "gic/channel.hpp"

#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gic/errors.hpp"

namespace gic {

std::vector<ParamViolation> validate_params(const ChannelParams& params) {
  std::vector<ParamViolation> out;
  auto flag = [&out](const char* field, double value, const char* message) {
    out.push_back({field, value, message});
  };
  if (!(params.p1 > 0.0) || !std::isfinite(params.p1))
    flag("p1", params.p1, "transmit power p1 must be positive and finite");
  if (!(params.p2 > 0.0) || !std::isfinite(params.p2))
    flag("p2", params.p2, "transmit power p2 must be positive and finite");
  if (!(params.noise > 0.0) || !std::isfinite(params.noise))
    flag("noise", params.noise, "noise power must be positive and finite");
  if (!(params.a >= 0.0) || !std::isfinite(params.a))
    flag("a", params.a, "interference gain a must be >= 0 and finite");
  if (!(params.b >= 0.0) || !std::isfinite(params.b))
    flag("b", params.b, "interference gain b must be >= 0 and finite");
  return out;
}

void require_valid(const ChannelParams& params) {
  auto violations = validate_params(params);
  if (violations.empty()) return;
  std::ostringstream msg;
  msg << "invalid channel parameters:";
  for (const auto& v : violations) msg << " [" << v.field << "=" << v.value << ": " << v.message << "]";
  throw DomainError(msg.str());
}

void require_z_channel(const ChannelParams& params) {
  require_valid(params);
  if (params.b != 0.0)
    throw DomainError("corner computations require the Z-channel (b = 0); got b = " +
                      std::to_string(params.b));
}

Regime classify_regime(const ChannelParams& params) {
  require_valid(params);
  if (params.a == 0.0) return Regime::NoInterference;
  if (params.a >= 1.0 + params.p2 / params.noise) return Regime::VeryStrong;
  if (params.a >= 1.0) return Regime::Strong;
  return Regime::Weak;
}

std::string_view regime_name(Regime regime) {
  switch (regime) {
    case Regime::VeryStrong: return "very_strong";
    case Regime::Strong: return "strong";
    case Regime::Weak: return "weak";
    case Regime::NoInterference: return "no_interference";
  }
  return "unknown";
}

Regime regime_from_name(std::string_view name) {
  if (name == "very_strong") return Regime::VeryStrong;
  if (name == "strong") return Regime::Strong;
  if (name == "weak") return Regime::Weak;
  if (name == "no_interference") return Regime::NoInterference;
  throw DomainError("unknown regime name: " + std::string(name));
}

void to_json(nlohmann::json& j, const ChannelParams& params) {
  j = nlohmann::json{{"p1", params.p1},
                     {"p2", params.p2},
                     {"noise", params.noise},
                     {"a", params.a},
                     {"b", params.b}};
}

void from_json(const nlohmann::json& j, ChannelParams& params) {
  j.at("p1").get_to(params.p1);
  j.at("p2").get_to(params.p2);
  j.at("noise").get_to(params.noise);
  j.at("a").get_to(params.a);
  params.b = j.value("b", 0.0);
}

}  // namespace gic
