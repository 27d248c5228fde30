#include "rtsrl/rewards.hpp"

#include <cmath>
#include <string>

#include "rtsrl/errors.hpp"

namespace rtsrl {

void RewardConfig::validate() const {
    if (!(std::isfinite(reward) && reward > 0.0)) throw ConfigError("reward must be finite and > 0");
    if (!(std::isfinite(penalty) && penalty > 0.0)) throw ConfigError("penalty must be finite and > 0");
}

std::string_view shaping_name(Shaping s) {
    return s == Shaping::Generalized ? "generalized" : "conditional";
}

Shaping parse_shaping(std::string_view name) {
    if (name == "generalized" || name == "on") return Shaping::Generalized;
    if (name == "conditional" || name == "off") return Shaping::Conditional;
    throw ConfigError("unknown shaping '" + std::string(name) + "'");
}

namespace bc {

double calc_reward_battlecity(const BcState& state, const BcSensors& sensors, const RewardConfig& cfg,
                              Shaping shaping) {
    double reward = 0.0;
    if (!state.running()) {
        return *state.winner == Winner::Player ? cfg.reward : -cfg.penalty;
    }
    if (sensors.enemy_inline == 2) reward -= cfg.penalty;
    if (shaping == Shaping::Conditional) return reward;

    double distance = 0.0;
    if (sensors.enemy_base_inline == 2) {
        distance = euclidean(state.player.pos, state.map.enemy_base);
        reward += 2.0 * cfg.reward - distance;
    }
    // distance is still zero here unless the base was inline.
    reward -= 4.0 * distance;
    distance = euclidean(state.player.pos, state.enemy.pos);
    reward += 4.0 * distance;
    return reward;
}

}  // namespace bc

namespace s3 {

double calc_reward_s3(const S3State& state, const RewardConfig& cfg) {
    if (!state.running()) {
        return *state.winner == Winner::Me ? cfg.reward : -cfg.penalty;
    }
    double reward = 0.0;
    reward += state.me.gold > state.opponent.gold ? cfg.reward : -cfg.penalty;
    reward += state.me.wood > state.opponent.wood ? cfg.reward : -cfg.penalty;
    reward += state.me.footmen > state.opponent.footmen ? 2.0 * cfg.reward : -2.0 * cfg.penalty;
    return reward;
}

}  // namespace s3

}  // namespace rtsrl
