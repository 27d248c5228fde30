#pragma once

// Scripted adversaries. All are deterministic except BcRandom, which draws
// from the injected RNG.

#include <string_view>

#include "rtsrl/battlecity.hpp"
#include "rtsrl/rng.hpp"
#include "rtsrl/s3.hpp"

namespace rtsrl {

enum class OpponentKind {
    BcRandom,        // AI-Random: uniform over the five actions
    BcFollower,      // AI-Follower: chase and fire
    BcStatic,        // holds position and never fires
    S3Rush,          // ai-rush
    S3CatapultRush,  // ai-catapult-rush, simplified to a heavier footman rush
};

std::string_view opponent_name(OpponentKind k);
OpponentKind parse_opponent(std::string_view name);
bool is_battlecity_opponent(OpponentKind k);

namespace bc {

BcAction bc_random_act(const BcState& state, Rng& rng);

// Acts for the enemy tank against the player.
BcAction bc_follower_act(const BcState& state);

// Whether a move in `dir` by `side` would leave the tank in place.
bool move_blocked(const BcState& state, Side side, Direction dir);

}  // namespace bc

namespace s3 {

inline constexpr int kRushAttackThreshold = 2;
inline constexpr int kCatapultRushAttackThreshold = 4;

// Scripts read the state from their own perspective: `state.me` is the
// scripted player. Callers acting for the opponent pass mirrored(state).
S3Action s3_rush_act(const S3State& state, const S3Rules& rules = {});
S3Action s3_catapult_rush_act(const S3State& state, const S3Rules& rules = {});

}  // namespace s3

}  // namespace rtsrl
