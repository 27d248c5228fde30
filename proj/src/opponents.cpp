#include "rtsrl/opponents.hpp"

#include <cstdlib>
#include <string>

#include "rtsrl/errors.hpp"

namespace rtsrl {

std::string_view opponent_name(OpponentKind k) {
    switch (k) {
        case OpponentKind::BcRandom: return "ai-random";
        case OpponentKind::BcFollower: return "ai-follower";
        case OpponentKind::BcStatic: return "static";
        case OpponentKind::S3Rush: return "ai-rush";
        case OpponentKind::S3CatapultRush: return "ai-catapult-rush";
    }
    return "?";
}

OpponentKind parse_opponent(std::string_view name) {
    if (name == "ai-random" || name == "random") return OpponentKind::BcRandom;
    if (name == "ai-follower" || name == "follower") return OpponentKind::BcFollower;
    if (name == "static" || name == "idle") return OpponentKind::BcStatic;
    if (name == "ai-rush" || name == "rush") return OpponentKind::S3Rush;
    if (name == "ai-catapult-rush" || name == "catapult-rush" || name == "ai-catapult") {
        return OpponentKind::S3CatapultRush;
    }
    throw ConfigError("unknown opponent '" + std::string(name) + "'");
}

bool is_battlecity_opponent(OpponentKind k) {
    return k == OpponentKind::BcRandom || k == OpponentKind::BcFollower || k == OpponentKind::BcStatic;
}

namespace bc {

BcAction bc_random_act(const BcState&, Rng& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, kActionCount - 1);
    return kAllActions[pick(rng)];
}

bool move_blocked(const BcState& s, Side side, Direction dir) {
    const Coord dest = offset(s.tank(side).pos, dir);
    if (!s.map.in_bounds(dest) || s.map.at(dest) != Cell::Empty) return true;
    const Tank& other = s.tank(side == Side::Player ? Side::Enemy : Side::Player);
    if (other.alive && other.pos == dest) return true;
    if (s.player_base_alive && dest == s.map.player_base) return true;
    if (s.enemy_base_alive && dest == s.map.enemy_base) return true;
    return false;
}

namespace {

Direction toward(Coord from, Coord to) {
    if (to.col != from.col) return to.col < from.col ? Direction::Left : Direction::Right;
    return to.row < from.row ? Direction::Up : Direction::Down;
}

}  // namespace

BcAction bc_follower_act(const BcState& s) {
    const Tank& self = s.enemy;
    const Coord target = s.player.pos;

    if (line_status(s.map, self.pos, target) == 2) {
        const Direction dir = toward(self.pos, target);
        return self.facing == dir ? BcAction::Fire : move_toward(dir);
    }

    const int dc = target.col - self.pos.col;
    const int dr = target.row - self.pos.row;
    const Direction horizontal = dc < 0 ? Direction::Left : Direction::Right;
    const Direction vertical = dr < 0 ? Direction::Up : Direction::Down;
    const bool col_first = std::abs(dc) >= std::abs(dr);

    const Direction primary = col_first ? horizontal : vertical;
    const Direction secondary = col_first ? vertical : horizontal;
    const int secondary_delta = col_first ? dr : dc;

    if (!move_blocked(s, Side::Enemy, primary)) return move_toward(primary);
    if (secondary_delta != 0 && !move_blocked(s, Side::Enemy, secondary)) return move_toward(secondary);
    return BcAction::Fire;
}

}  // namespace bc

namespace s3 {

namespace {

S3Action save_for_barrack(const S3PlayerState& me, const S3Rules& rules) {
    if (is_legal(me, S3Action::BuildBarrack, rules)) return S3Action::BuildBarrack;
    return me.gold < rules.barrack_gold ? S3Action::HarvestGold : S3Action::HarvestWood;
}

}  // namespace

S3Action s3_rush_act(const S3State& state, const S3Rules& rules) {
    const S3PlayerState& me = state.me;
    if (me.barracks == 0) return save_for_barrack(me, rules);
    if (me.footmen < kRushAttackThreshold) {
        return is_legal(me, S3Action::TrainFootman, rules) ? S3Action::TrainFootman : S3Action::HarvestGold;
    }
    return S3Action::Attack;
}

S3Action s3_catapult_rush_act(const S3State& state, const S3Rules& rules) {
    const S3PlayerState& me = state.me;
    if (me.barracks == 0) return save_for_barrack(me, rules);
    const bool can_train = is_legal(me, S3Action::TrainFootman, rules);
    if (me.footmen < kCatapultRushAttackThreshold) {
        return can_train ? S3Action::TrainFootman : S3Action::HarvestGold;
    }
    // Past the threshold: keep training on odd steps, attack on even ones.
    if (can_train && state.step_count % 2 == 1) return S3Action::TrainFootman;
    return S3Action::Attack;
}

}  // namespace s3

}  // namespace rtsrl
