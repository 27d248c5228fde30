#pragma once

// Independent reference implementations used only by tests.

#include <cmath>
#include <deque>
#include <optional>
#include <vector>

#include "rtsrl/battlecity.hpp"
#include "rtsrl/s3.hpp"

namespace oracle {

// Raw inputs of the BattleCity reward, as the pseudocode sees them.
struct BcRewardInput {
    bool game_over = false;
    bool winner_is_player = false;
    int enemy_inline = 0;
    int enemy_base_inline = 0;
    double px = 0, py = 0;  // player
    double ex = 0, ey = 0;  // enemy tank
    double bx = 0, by = 0;  // enemy base
    double reward = 100;
    double penalty = 100;
    bool shaping = true;
};

// Line-by-line transcription of calcReward for BattleCity.
inline double bc_reward(const BcRewardInput& in) {
    double newReward = 0;
    double distance = 0;
    if (in.game_over) {
        if (in.winner_is_player) {
            newReward = newReward + in.reward;
        } else {
            newReward = newReward - in.penalty;
        }
        return newReward;
    }
    if (in.enemy_inline == 2) {
        newReward = newReward - in.penalty;
    }
    if (!in.shaping) return newReward;
    if (in.enemy_base_inline == 2) {
        distance = std::sqrt((in.px - in.bx) * (in.px - in.bx) + (in.py - in.by) * (in.py - in.by));
        newReward = newReward + 2 * in.reward - distance;
    }
    newReward = newReward - 4 * distance;
    distance = std::sqrt((in.px - in.ex) * (in.px - in.ex) + (in.py - in.ey) * (in.py - in.ey));
    newReward = newReward + 4 * distance;
    return newReward;
}

struct S3RewardInput {
    bool game_over = false;
    bool winner_is_player = false;
    double player_g = 0, enemy_g = 0;
    double player_w = 0, enemy_w = 0;
    double player_troops = 0, enemy_troops = 0;
    double reward = 100;
    double penalty = 100;
};

// Line-by-line transcription of calcReward for S3.
inline double s3_reward(const S3RewardInput& in) {
    double newReward = 0;
    if (in.game_over) {
        if (in.winner_is_player) {
            newReward = newReward + in.reward;
        } else {
            newReward = newReward - in.penalty;
        }
        return newReward;
    }
    if (in.player_g > in.enemy_g) {
        newReward = newReward + in.reward;
    } else {
        newReward = newReward - in.penalty;
    }
    if (in.player_w > in.enemy_w) {
        newReward = newReward + in.reward;
    } else {
        newReward = newReward - in.penalty;
    }
    if (in.player_troops > in.enemy_troops) {
        newReward = newReward + 2 * in.reward;
    } else {
        newReward = newReward - 2 * in.penalty;
    }
    return newReward;
}

// Walks one cell at a time from `a` toward `b` and inspects each cell strictly
// between them.
inline int walk_line_status(const rtsrl::bc::BcMap& m, rtsrl::bc::Coord a, rtsrl::bc::Coord b) {
    if (a.col != b.col && a.row != b.row) return 0;
    int dc = (b.col > a.col) - (b.col < a.col);
    int dr = (b.row > a.row) - (b.row < a.row);
    int c = a.col + dc;
    int r = a.row + dr;
    while (c != b.col || r != b.row) {
        const auto cell = m.grid[static_cast<std::size_t>(r * m.width + c)];
        if (cell == rtsrl::bc::Cell::Brick || cell == rtsrl::bc::Cell::Marble) return 1;
        c += dc;
        r += dr;
    }
    return 2;
}

// Shortest number of player actions that wins against an enemy that never
// acts, found by breadth-first search over whole game states.
inline std::optional<int> min_winning_steps(const rtsrl::bc::BcMap& map, int depth_limit = 64) {
    using namespace rtsrl::bc;
    std::vector<BcState> seen{initial_state(map)};
    std::deque<std::pair<BcState, int>> frontier{{seen.front(), 0}};
    while (!frontier.empty()) {
        auto [s, d] = frontier.front();
        frontier.pop_front();
        if (d >= depth_limit) continue;
        for (auto a : kAllActions) {
            BcState n = step(s, a, std::nullopt);
            if (!n.running()) {
                if (*n.winner == Winner::Player) return d + 1;
                continue;
            }
            n.step_count = 0;
            bool known = false;
            for (const auto& v : seen) {
                if (v == n) {
                    known = true;
                    break;
                }
            }
            if (!known) {
                seen.push_back(n);
                frontier.emplace_back(n, d + 1);
            }
        }
    }
    return std::nullopt;
}

// Action sequence achieving min_winning_steps, recovered by iterative
// deepening over the same search space.
inline std::vector<rtsrl::bc::BcAction> winning_line(const rtsrl::bc::BcMap& map, int length) {
    using namespace rtsrl::bc;
    std::vector<BcAction> path;
    auto dfs = [&](auto&& self, const BcState& s, int left) -> bool {
        if (left == 0) return false;
        for (auto a : kAllActions) {
            BcState n = step(s, a, std::nullopt);
            path.push_back(a);
            if (!n.running()) {
                if (*n.winner == Winner::Player && left == 1) return true;
            } else if (self(self, n, left - 1)) {
                return true;
            }
            path.pop_back();
        }
        return false;
    };
    dfs(dfs, initial_state(map), length);
    return path;
}

}  // namespace oracle
