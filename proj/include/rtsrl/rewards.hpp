#pragma once

// Sensor-driven reward functions for both games.

#include <string_view>

#include "rtsrl/battlecity.hpp"
#include "rtsrl/s3.hpp"

namespace rtsrl {

struct RewardConfig {
    double reward = 100.0;
    double penalty = 100.0;

    // Both units must be finite and strictly positive; throws ConfigError.
    void validate() const;
};

// Generalized: terminal outcome plus the distance-shaped terms.
// Conditional: terminal outcome plus the enemy-inline penalty only.
enum class Shaping { Generalized, Conditional };

std::string_view shaping_name(Shaping s);
Shaping parse_shaping(std::string_view name);

namespace bc {

// Ended: +reward on a player win, -penalty otherwise.
// Running: -penalty if the enemy is in clear line; if the enemy base is in
// clear line, + (2*reward - d_base); then - 4*d_base (d_base is 0 unless the
// base was inline) and + 4*d_enemy.
double calc_reward_battlecity(const BcState& state, const BcSensors& sensors, const RewardConfig& cfg,
                              Shaping shaping = Shaping::Generalized);

}  // namespace bc

namespace s3 {

// Ended: +reward on a win for `me`, -penalty otherwise. Running: +reward /
// -penalty for strictly more gold, the same for wood, and +2*reward /
// -2*penalty for strictly more footmen.
double calc_reward_s3(const S3State& state, const RewardConfig& cfg);

}  // namespace s3

}  // namespace rtsrl
