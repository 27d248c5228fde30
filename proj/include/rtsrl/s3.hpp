#pragma once

// Macro-level S3 simulation: two players harvest from shared gold and wood
// pools, build barracks, train footmen, and attack. Combat is pairwise
// elimination; an attacker with surplus footmen razes the defender's base.

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "rtsrl/rl_core.hpp"

namespace rtsrl::s3 {

struct S3Rules {
    int gold_per_peasant = 10;
    int wood_per_peasant = 5;
    int barrack_gold = 100;
    int barrack_wood = 50;
    int footman_gold = 60;

    int initial_gold = 0;
    int initial_wood = 0;
    int initial_peasants = 2;

    void validate() const;
};

struct S3PlayerState {
    int gold = 0;
    int wood = 0;
    int peasants = 0;
    int footmen = 0;
    int barracks = 0;
    bool base_alive = true;
    friend bool operator==(const S3PlayerState&, const S3PlayerState&) = default;
};

enum class S3Action : std::uint8_t { HarvestGold, HarvestWood, BuildBarrack, TrainFootman, Attack, Idle };

inline constexpr std::size_t kActionCount = 6;
inline constexpr std::array<S3Action, kActionCount> kAllActions = {
    S3Action::HarvestGold, S3Action::HarvestWood, S3Action::BuildBarrack,
    S3Action::TrainFootman, S3Action::Attack, S3Action::Idle};

std::string_view action_name(S3Action a);

enum class Winner : std::uint8_t { Me, Opponent, Draw };

struct S3State {
    S3PlayerState me;
    S3PlayerState opponent;
    int gold_stock = 0;  // remaining goldmine gold
    int wood_stock = 0;  // remaining tree wood
    std::optional<Winner> winner;
    int step_count = 0;

    bool running() const { return !winner.has_value(); }
    friend bool operator==(const S3State&, const S3State&) = default;
};

// Aggregates a map contributes to the initial state.
struct S3MapSummary {
    int gold_stock = 0;
    int wood_stock = 0;
    int player_barracks = 0;
    int enemy_barracks = 0;
    friend bool operator==(const S3MapSummary&, const S3MapSummary&) = default;
};

S3State initial_state(const S3MapSummary& map, const S3Rules& rules = {});

// Same game seen from the other side.
S3State mirrored(const S3State& state);

// True when the action is affordable and has its prerequisites.
bool is_legal(const S3PlayerState& player, S3Action action, const S3Rules& rules = {});

// Whether the player could still obtain a footman from its own stocks.
bool can_field_troops(const S3PlayerState& player, const S3Rules& rules = {});

// Resolves harvesting, then building/training, then combat. Illegal actions
// degrade to Idle. Throws ContractError when the game has already ended.
S3State s3_step(const S3State& state, S3Action my_action, S3Action opp_action, const S3Rules& rules = {});

struct S3Sensors {
    int gold_cmp = 0;          // sign(me - opponent)
    int wood_cmp = 0;
    int troop_cmp = 0;
    int own_troop_bucket = 0;  // footmen clamped to 0..3 (3 means 3+)
    bool barrack_built = false;
    friend bool operator==(S3Sensors, S3Sensors) = default;
};

S3Sensors compute_sensors_s3(const S3State& state);

// Packs the sensor tuple and the phase.
rl::StateKey s3_state_key(const S3State& state);

}  // namespace rtsrl::s3
