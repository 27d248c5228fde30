#pragma once

#include <optional>

#include "rtsrl/battlecity.hpp"
#include "rtsrl/opponents.hpp"
#include "rtsrl/rewards.hpp"
#include "rtsrl/rl_core.hpp"
#include "rtsrl/s3.hpp"

namespace rtsrl {

// The learner drives the player tank; the enemy tank follows `opponent`.
class BattleCityEnv final : public rl::Environment {
public:
    BattleCityEnv(bc::BcMap map, OpponentKind opponent, RewardConfig reward = {},
                  Shaping shaping = Shaping::Generalized);

    std::string_view id() const override { return "battlecity"; }
    std::size_t action_count() const override { return bc::kActionCount; }

    void reset(std::uint64_t seed) override;
    rl::StateKey current_key() const override { return bc::state_key(state_); }
    bool is_terminal() const override { return !state_.running(); }
    rl::StepResult step(rl::ActionId action) override;

    const bc::BcState& state() const { return state_; }
    const bc::BcMap& map() const { return map_; }

private:
    std::optional<bc::BcAction> opponent_action();

    bc::BcMap map_;
    OpponentKind opponent_;
    RewardConfig reward_;
    Shaping shaping_;
    bc::BcState state_;
    Rng rng_;
};

// The learner plays `me`; the scripted opponent sees the mirrored state.
class S3Env final : public rl::Environment {
public:
    S3Env(s3::S3MapSummary map, OpponentKind opponent, RewardConfig reward = {}, s3::S3Rules rules = {});

    std::string_view id() const override { return "s3"; }
    std::size_t action_count() const override { return s3::kActionCount; }

    void reset(std::uint64_t seed) override;
    rl::StateKey current_key() const override { return s3::s3_state_key(state_); }
    bool is_terminal() const override { return !state_.running(); }
    rl::StepResult step(rl::ActionId action) override;

    const s3::S3State& state() const { return state_; }

private:
    s3::S3MapSummary map_;
    OpponentKind opponent_;
    RewardConfig reward_;
    s3::S3Rules rules_;
    s3::S3State state_;
};

}  // namespace rtsrl
