#pragma once

// Oracle sweeps shared by the unit tests and the acceptance runner. Each
// returns the largest disagreement (or mismatch count) it found.

#include <algorithm>
#include <cmath>

#include "generators.hpp"
#include "oracles.hpp"
#include "rtsrl/rewards.hpp"

namespace checks {

inline oracle::BcRewardInput bc_reward_input(const rtsrl::bc::BcState& s, const rtsrl::bc::BcSensors& sensors,
                                    const rtsrl::RewardConfig& cfg, rtsrl::Shaping shaping) {
    oracle::BcRewardInput in;
    in.game_over = !s.running();
    in.winner_is_player = s.winner == rtsrl::bc::Winner::Player;
    in.enemy_inline = sensors.enemy_inline;
    in.enemy_base_inline = sensors.enemy_base_inline;
    in.px = s.player.pos.col;
    in.py = s.player.pos.row;
    in.ex = s.enemy.pos.col;
    in.ey = s.enemy.pos.row;
    in.bx = s.map.enemy_base.col;
    in.by = s.map.enemy_base.row;
    in.reward = cfg.reward;
    in.penalty = cfg.penalty;
    in.shaping = shaping == rtsrl::Shaping::Generalized;
    return in;
}

inline rtsrl::RewardConfig random_config(rtsrl::Rng& rng) {
    if (gen::coin(rng)) return {};
    std::uniform_real_distribution<double> unit(0.5, 500.0);
    return {unit(rng), unit(rng)};
}

// Production BattleCity reward vs the pseudocode transcription. Half the
// cases use sensors read from the state, half use arbitrary sensor values so
// every branch is reached.
inline double battlecity_reward_max_error(int cases, std::uint64_t seed) {
    rtsrl::Rng rng(seed);
    double worst = 0.0;
    for (int i = 0; i < cases; ++i) {
        const auto s = gen::battlecity_state(rng);
        rtsrl::bc::BcSensors sensors;
        if (s.running() && gen::coin(rng)) {
            sensors = rtsrl::bc::compute_sensors(s);
        } else {
            sensors = {gen::uniform(rng, 0, 2), gen::uniform(rng, 0, 2)};
        }
        const auto cfg = random_config(rng);
        const auto shaping = gen::coin(rng, 0.8) ? rtsrl::Shaping::Generalized : rtsrl::Shaping::Conditional;
        const double got = rtsrl::bc::calc_reward_battlecity(s, sensors, cfg, shaping);
        const double want = oracle::bc_reward(bc_reward_input(s, sensors, cfg, shaping));
        worst = std::max(worst, std::abs(got - want));
        if (!std::isfinite(got)) return INFINITY;
    }
    return worst;
}

inline double s3_reward_max_error(int cases, std::uint64_t seed) {
    rtsrl::Rng rng(seed);
    double worst = 0.0;
    for (int i = 0; i < cases; ++i) {
        const auto s = gen::s3_state(rng);
        const auto cfg = random_config(rng);
        oracle::S3RewardInput in;
        in.game_over = !s.running();
        in.winner_is_player = s.winner == rtsrl::s3::Winner::Me;
        in.player_g = s.me.gold;
        in.enemy_g = s.opponent.gold;
        in.player_w = s.me.wood;
        in.enemy_w = s.opponent.wood;
        in.player_troops = s.me.footmen;
        in.enemy_troops = s.opponent.footmen;
        in.reward = cfg.reward;
        in.penalty = cfg.penalty;
        const double got = rtsrl::s3::calc_reward_s3(s, cfg);
        worst = std::max(worst, std::abs(got - oracle::s3_reward(in)));
        if (!std::isfinite(got)) return INFINITY;
    }
    return worst;
}

struct LineSweep {
    long long pairs = 0;
    long long mismatches = 0;
};

// Every ordered coordinate pair on `maps` random width x height maps.
inline LineSweep line_status_sweep(int maps, int width, int height, std::uint64_t seed) {
    rtsrl::Rng rng(seed);
    LineSweep out;
    for (int m = 0; m < maps; ++m) {
        const auto map = gen::battlecity_map(rng, width, height, 0.35);
        const int cells = width * height;
        for (int a = 0; a < cells; ++a) {
            for (int b = 0; b < cells; ++b) {
                const rtsrl::bc::Coord p{a % width, a / width};
                const rtsrl::bc::Coord q{b % width, b / width};
                ++out.pairs;
                if (rtsrl::bc::line_status(map, p, q) != oracle::walk_line_status(map, p, q)) ++out.mismatches;
            }
        }
    }
    return out;
}

}  // namespace checks
