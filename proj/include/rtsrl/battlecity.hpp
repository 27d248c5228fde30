#pragma once

// Turn-stepped grid simulation of BattleCity: two tanks, two bases,
// destructible brick, indestructible marble, and water that bullets cross but
// tanks cannot. Bullets are hitscan rays resolved within the step.

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "rtsrl/rl_core.hpp"

namespace rtsrl::bc {

struct Coord {
    int col = 0;
    int row = 0;
    friend bool operator==(Coord, Coord) = default;
};

double euclidean(Coord a, Coord b);

enum class Cell : std::uint8_t { Empty, Brick, Marble, Water };

enum class Direction : std::uint8_t { Up, Down, Left, Right };

Coord offset(Coord c, Direction d);

enum class BcAction : std::uint8_t { MoveUp, MoveDown, MoveLeft, MoveRight, Fire };

inline constexpr std::size_t kActionCount = 5;
inline constexpr std::array<BcAction, kActionCount> kAllActions = {
    BcAction::MoveUp, BcAction::MoveDown, BcAction::MoveLeft, BcAction::MoveRight, BcAction::Fire};

std::string_view action_name(BcAction a);
BcAction move_toward(Direction d);
std::optional<Direction> move_direction(BcAction a);

inline constexpr int kMinSide = 2;
inline constexpr int kMaxSide = 64;

struct BcMap {
    int width = 0;
    int height = 0;
    std::vector<Cell> grid;  // row-major, width * height
    Coord player_spawn;
    Coord enemy_spawn;
    Coord player_base;
    Coord enemy_base;

    // All-Empty map with the four landmarks at the given coordinates.
    static BcMap open(int width, int height, Coord player_spawn, Coord enemy_spawn,
                      Coord player_base, Coord enemy_base);

    bool in_bounds(Coord c) const { return c.col >= 0 && c.row >= 0 && c.col < width && c.row < height; }
    Cell at(Coord c) const { return grid[static_cast<std::size_t>(c.row * width + c.col)]; }
    void set(Coord c, Cell cell) { grid[static_cast<std::size_t>(c.row * width + c.col)] = cell; }

    // Throws ConfigError if dimensions, landmarks, or grid size are invalid.
    void validate() const;

    friend bool operator==(const BcMap&, const BcMap&) = default;
};

struct Tank {
    Coord pos;
    Direction facing = Direction::Up;
    bool alive = true;
    friend bool operator==(const Tank&, const Tank&) = default;
};

enum class Side : std::uint8_t { Player, Enemy };
enum class Winner : std::uint8_t { Player, Enemy, Draw };

struct BcState {
    BcMap map;
    Tank player;
    Tank enemy;
    bool player_base_alive = true;
    bool enemy_base_alive = true;
    std::optional<Winner> winner;  // set once the game has ended
    int step_count = 0;

    bool running() const { return !winner.has_value(); }
    const Tank& tank(Side s) const { return s == Side::Player ? player : enemy; }

    friend bool operator==(const BcState&, const BcState&) = default;
};

// Tanks spawn alive, facing Up, on their map spawns.
BcState initial_state(const BcMap& map);

// Cells a ray left behind: at most one brick cleared, at most one target hit.
struct FireEffect {
    std::optional<Coord> cleared_brick;
    bool hits_player = false;
    bool hits_enemy = false;
    bool hits_player_base = false;
    bool hits_enemy_base = false;
};

// Walks the shooter's facing ray over the current state without mutating it.
FireEffect trace_fire(const BcState& state, Side shooter);

// Applies one ray in isolation and updates the phase.
BcState resolve_fire(const BcState& state, Side shooter);

// Moves resolve first (player, then enemy); fires resolve simultaneously on
// the post-move board. An empty enemy action means the enemy holds still.
// Throws ContractError when the game has already ended.
BcState step(const BcState& state, BcAction player_action, std::optional<BcAction> enemy_action);

// 0 = not sharing a row or column, 1 = shared line blocked by Brick or
// Marble, 2 = shared line with only Empty/Water in between.
int line_status(const BcMap& map, Coord from, Coord to);
inline int line_status(const BcState& state, Coord from, Coord to) { return line_status(state.map, from, to); }

struct BcSensors {
    int enemy_inline = 0;
    int enemy_base_inline = 0;
    friend bool operator==(BcSensors, BcSensors) = default;
};

BcSensors compute_sensors(const BcState& state);

// Packs (player.pos, enemy.pos, player.facing).
rl::StateKey state_key(const BcState& state);

}  // namespace rtsrl::bc
