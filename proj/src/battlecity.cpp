#include "rtsrl/battlecity.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "rtsrl/errors.hpp"

namespace rtsrl::bc {

double euclidean(Coord a, Coord b) {
    return std::hypot(static_cast<double>(a.col - b.col), static_cast<double>(a.row - b.row));
}

Coord offset(Coord c, Direction d) {
    switch (d) {
        case Direction::Up: return {c.col, c.row - 1};
        case Direction::Down: return {c.col, c.row + 1};
        case Direction::Left: return {c.col - 1, c.row};
        case Direction::Right: return {c.col + 1, c.row};
    }
    return c;
}

std::string_view action_name(BcAction a) {
    switch (a) {
        case BcAction::MoveUp: return "MoveUp";
        case BcAction::MoveDown: return "MoveDown";
        case BcAction::MoveLeft: return "MoveLeft";
        case BcAction::MoveRight: return "MoveRight";
        case BcAction::Fire: return "Fire";
    }
    return "?";
}

BcAction move_toward(Direction d) {
    switch (d) {
        case Direction::Up: return BcAction::MoveUp;
        case Direction::Down: return BcAction::MoveDown;
        case Direction::Left: return BcAction::MoveLeft;
        case Direction::Right: return BcAction::MoveRight;
    }
    return BcAction::Fire;
}

std::optional<Direction> move_direction(BcAction a) {
    switch (a) {
        case BcAction::MoveUp: return Direction::Up;
        case BcAction::MoveDown: return Direction::Down;
        case BcAction::MoveLeft: return Direction::Left;
        case BcAction::MoveRight: return Direction::Right;
        case BcAction::Fire: return std::nullopt;
    }
    return std::nullopt;
}

BcMap BcMap::open(int width, int height, Coord player_spawn, Coord enemy_spawn, Coord player_base,
                  Coord enemy_base) {
    BcMap m;
    m.width = width;
    m.height = height;
    m.grid.assign(static_cast<std::size_t>(std::max(0, width * height)), Cell::Empty);
    m.player_spawn = player_spawn;
    m.enemy_spawn = enemy_spawn;
    m.player_base = player_base;
    m.enemy_base = enemy_base;
    m.validate();
    return m;
}

void BcMap::validate() const {
    if (width < kMinSide || width > kMaxSide || height < kMinSide || height > kMaxSide) {
        throw ConfigError("map dimensions must lie in [2, 64], got " + std::to_string(width) + "x" +
                          std::to_string(height));
    }
    if (grid.size() != static_cast<std::size_t>(width * height)) {
        throw ConfigError("map grid size does not match its dimensions");
    }
    const Coord marks[] = {player_spawn, enemy_spawn, player_base, enemy_base};
    for (std::size_t i = 0; i < 4; ++i) {
        if (!in_bounds(marks[i])) throw ConfigError("map landmark out of bounds");
        if (at(marks[i]) != Cell::Empty) throw ConfigError("map landmark must sit on an Empty cell");
        for (std::size_t j = 0; j < i; ++j) {
            if (marks[i] == marks[j]) throw ConfigError("map landmarks must be pairwise distinct");
        }
    }
}

BcState initial_state(const BcMap& map) {
    map.validate();
    BcState s;
    s.map = map;
    s.player = Tank{map.player_spawn, Direction::Up, true};
    s.enemy = Tank{map.enemy_spawn, Direction::Up, true};
    return s;
}

namespace {

bool occupied_by_base(const BcState& s, Coord c) {
    return (s.player_base_alive && c == s.map.player_base) || (s.enemy_base_alive && c == s.map.enemy_base);
}

void apply_move(BcState& s, Side side, BcAction action) {
    const auto dir = move_direction(action);
    if (!dir) return;
    Tank& self = side == Side::Player ? s.player : s.enemy;
    const Tank& other = side == Side::Player ? s.enemy : s.player;
    if (!self.alive) return;
    self.facing = *dir;
    const Coord dest = offset(self.pos, *dir);
    if (!s.map.in_bounds(dest) || s.map.at(dest) != Cell::Empty) return;
    if (other.alive && other.pos == dest) return;
    if (occupied_by_base(s, dest)) return;
    self.pos = dest;
}

void apply_effect(BcState& s, const FireEffect& e) {
    if (e.cleared_brick) s.map.set(*e.cleared_brick, Cell::Empty);
    if (e.hits_player) s.player.alive = false;
    if (e.hits_enemy) s.enemy.alive = false;
    if (e.hits_player_base) s.player_base_alive = false;
    if (e.hits_enemy_base) s.enemy_base_alive = false;
}

void update_phase(BcState& s) {
    const bool player_lost = !s.player.alive || !s.player_base_alive;
    const bool enemy_lost = !s.enemy.alive || !s.enemy_base_alive;
    if (player_lost && enemy_lost) {
        s.winner = Winner::Draw;
    } else if (player_lost) {
        s.winner = Winner::Enemy;
    } else if (enemy_lost) {
        s.winner = Winner::Player;
    }
}

}  // namespace

FireEffect trace_fire(const BcState& s, Side shooter) {
    FireEffect effect;
    const Tank& self = s.tank(shooter);
    if (!self.alive) return effect;
    for (Coord c = offset(self.pos, self.facing); s.map.in_bounds(c); c = offset(c, self.facing)) {
        if (s.player.alive && c == s.player.pos) {
            effect.hits_player = true;
            break;
        }
        if (s.enemy.alive && c == s.enemy.pos) {
            effect.hits_enemy = true;
            break;
        }
        if (s.player_base_alive && c == s.map.player_base) {
            effect.hits_player_base = true;
            break;
        }
        if (s.enemy_base_alive && c == s.map.enemy_base) {
            effect.hits_enemy_base = true;
            break;
        }
        const Cell cell = s.map.at(c);
        if (cell == Cell::Brick) {
            effect.cleared_brick = c;
            break;
        }
        if (cell == Cell::Marble) break;
    }
    return effect;
}

BcState resolve_fire(const BcState& state, Side shooter) {
    BcState next = state;
    apply_effect(next, trace_fire(state, shooter));
    update_phase(next);
    return next;
}

BcState step(const BcState& state, BcAction player_action, std::optional<BcAction> enemy_action) {
    if (!state.running()) throw ContractError("step called on an ended BattleCity game");
    BcState next = state;
    apply_move(next, Side::Player, player_action);
    if (enemy_action) apply_move(next, Side::Enemy, *enemy_action);

    // Both rays are traced on the same post-move board.
    std::optional<FireEffect> player_shot;
    std::optional<FireEffect> enemy_shot;
    if (player_action == BcAction::Fire) player_shot = trace_fire(next, Side::Player);
    if (enemy_action == BcAction::Fire) enemy_shot = trace_fire(next, Side::Enemy);
    if (player_shot) apply_effect(next, *player_shot);
    if (enemy_shot) apply_effect(next, *enemy_shot);

    ++next.step_count;
    update_phase(next);
    return next;
}

int line_status(const BcMap& map, Coord from, Coord to) {
    if (!map.in_bounds(from) || !map.in_bounds(to)) {
        throw ContractError("line_status coordinate out of bounds");
    }
    if (from.col != to.col && from.row != to.row) return 0;
    const int dc = (to.col > from.col) - (to.col < from.col);
    const int dr = (to.row > from.row) - (to.row < from.row);
    for (Coord c{from.col + dc, from.row + dr}; !(c == to); c = {c.col + dc, c.row + dr}) {
        const Cell cell = map.at(c);
        if (cell == Cell::Brick || cell == Cell::Marble) return 1;
    }
    return 2;
}

BcSensors compute_sensors(const BcState& state) {
    return {line_status(state.map, state.player.pos, state.enemy.pos),
            line_status(state.map, state.player.pos, state.map.enemy_base)};
}

rl::StateKey state_key(const BcState& state) {
    const auto byte = [](int v) { return static_cast<std::uint64_t>(v) & 0xFFu; };
    std::uint64_t k = byte(state.player.pos.col);
    k = (k << 8) | byte(state.player.pos.row);
    k = (k << 8) | byte(state.enemy.pos.col);
    k = (k << 8) | byte(state.enemy.pos.row);
    k = (k << 2) | static_cast<std::uint64_t>(state.player.facing);
    return rl::StateKey{k};
}

}  // namespace rtsrl::bc
