#pragma once

// JSON round-tripping of systems, states, effects and channels.

#include <string_view>

#include <nlohmann/json.hpp>

#include "opinfo/opt_core.hpp"

namespace opinfo {

/// Inverse of SystemLabel::to_string: factors like "classical:3", "quantum:2"
/// or "squit" joined by '*'; "trivial" for the trivial system.
SystemLabel parse_system(std::string_view text);

nlohmann::json to_json(const StateVec& s);
nlohmann::json to_json(const EffectVec& e);
nlohmann::json to_json(const ChannelMat& c);

StateVec state_from_json(const nlohmann::json& j);
EffectVec effect_from_json(const nlohmann::json& j);
ChannelMat channel_from_json(const nlohmann::json& j);

}  // namespace opinfo
