#include "rtsrl/environments.hpp"

#include <string>

#include "rtsrl/errors.hpp"

namespace rtsrl {

namespace {

rl::Outcome bc_outcome(bc::Winner w) {
    switch (w) {
        case bc::Winner::Player: return rl::Outcome::Win;
        case bc::Winner::Enemy: return rl::Outcome::Loss;
        case bc::Winner::Draw: return rl::Outcome::Draw;
    }
    return rl::Outcome::Draw;
}

rl::Outcome s3_outcome(s3::Winner w) {
    switch (w) {
        case s3::Winner::Me: return rl::Outcome::Win;
        case s3::Winner::Opponent: return rl::Outcome::Loss;
        case s3::Winner::Draw: return rl::Outcome::Draw;
    }
    return rl::Outcome::Draw;
}

}  // namespace

BattleCityEnv::BattleCityEnv(bc::BcMap map, OpponentKind opponent, RewardConfig reward, Shaping shaping)
    : map_(std::move(map)), opponent_(opponent), reward_(reward), shaping_(shaping) {
    if (!is_battlecity_opponent(opponent)) {
        throw ConfigError("opponent '" + std::string(opponent_name(opponent)) + "' does not play BattleCity");
    }
    reward_.validate();
    state_ = bc::initial_state(map_);
}

void BattleCityEnv::reset(std::uint64_t seed) {
    state_ = bc::initial_state(map_);
    rng_.seed(seed);
}

std::optional<bc::BcAction> BattleCityEnv::opponent_action() {
    switch (opponent_) {
        case OpponentKind::BcRandom: return bc::bc_random_act(state_, rng_);
        case OpponentKind::BcFollower: return bc::bc_follower_act(state_);
        default: return std::nullopt;
    }
}

rl::StepResult BattleCityEnv::step(rl::ActionId action) {
    if (action >= bc::kActionCount) throw ContractError("BattleCity action id out of range");
    const auto enemy = opponent_action();
    state_ = bc::step(state_, bc::kAllActions[action], enemy);

    rl::StepResult result;
    result.next_state = bc::state_key(state_);
    const bc::BcSensors sensors = state_.running() ? bc::compute_sensors(state_) : bc::BcSensors{};
    result.reward = bc::calc_reward_battlecity(state_, sensors, reward_, shaping_);
    result.terminal = !state_.running();
    if (result.terminal) result.outcome = bc_outcome(*state_.winner);
    return result;
}

S3Env::S3Env(s3::S3MapSummary map, OpponentKind opponent, RewardConfig reward, s3::S3Rules rules)
    : map_(map), opponent_(opponent), reward_(reward), rules_(rules) {
    if (opponent != OpponentKind::S3Rush && opponent != OpponentKind::S3CatapultRush) {
        throw ConfigError("opponent '" + std::string(opponent_name(opponent)) + "' does not play S3");
    }
    reward_.validate();
    state_ = s3::initial_state(map_, rules_);
}

void S3Env::reset(std::uint64_t) { state_ = s3::initial_state(map_, rules_); }

rl::StepResult S3Env::step(rl::ActionId action) {
    if (action >= s3::kActionCount) throw ContractError("S3 action id out of range");
    const s3::S3State view = s3::mirrored(state_);
    const s3::S3Action opp = opponent_ == OpponentKind::S3Rush ? s3::s3_rush_act(view, rules_)
                                                                : s3::s3_catapult_rush_act(view, rules_);
    state_ = s3::s3_step(state_, s3::kAllActions[action], opp, rules_);

    rl::StepResult result;
    result.next_state = s3::s3_state_key(state_);
    result.reward = s3::calc_reward_s3(state_, reward_);
    result.terminal = !state_.running();
    if (result.terminal) result.outcome = s3_outcome(*state_.winner);
    return result;
}

}  // namespace rtsrl
