#pragma once

// Random game states and maps for oracle and property tests.

#include <algorithm>
#include <random>
#include <vector>

#include "rtsrl/battlecity.hpp"
#include "rtsrl/map_io.hpp"
#include "rtsrl/rng.hpp"
#include "rtsrl/s3.hpp"

namespace gen {

inline int uniform(rtsrl::Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline bool coin(rtsrl::Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

// Random terrain with the four landmarks on distinct Empty cells.
inline rtsrl::bc::BcMap battlecity_map(rtsrl::Rng& rng, int width, int height, double wall_density = 0.3) {
    using namespace rtsrl::bc;
    BcMap m;
    m.width = width;
    m.height = height;
    m.grid.resize(static_cast<std::size_t>(width * height));
    for (auto& c : m.grid) {
        if (!coin(rng, wall_density)) {
            c = Cell::Empty;
        } else {
            c = static_cast<Cell>(uniform(rng, 1, 3));
        }
    }
    std::vector<int> cells(static_cast<std::size_t>(width * height));
    for (int i = 0; i < width * height; ++i) cells[static_cast<std::size_t>(i)] = i;
    std::shuffle(cells.begin(), cells.end(), rng);
    Coord marks[4];
    for (int i = 0; i < 4; ++i) {
        marks[i] = {cells[static_cast<std::size_t>(i)] % width, cells[static_cast<std::size_t>(i)] / width};
        m.set(marks[i], Cell::Empty);
    }
    m.player_spawn = marks[0];
    m.enemy_spawn = marks[1];
    m.player_base = marks[2];
    m.enemy_base = marks[3];
    return m;
}

inline rtsrl::bc::BcMap battlecity_map(rtsrl::Rng& rng) {
    return battlecity_map(rng, uniform(rng, 2, 20), uniform(rng, 2, 20), std::uniform_real_distribution<>(0, 0.6)(rng));
}

// Random mid-game state: tanks anywhere legal, random facings, sometimes ended.
inline rtsrl::bc::BcState battlecity_state(rtsrl::Rng& rng) {
    using namespace rtsrl::bc;
    BcState s = initial_state(battlecity_map(rng));
    for (int i = 0; i < uniform(rng, 0, 6); ++i) {
        // wander the tanks with random moves so positions are not only spawns
        const auto a = kAllActions[static_cast<std::size_t>(uniform(rng, 0, 3))];
        const auto b = kAllActions[static_cast<std::size_t>(uniform(rng, 0, 3))];
        s = step(s, a, b);
    }
    s.player.facing = static_cast<Direction>(uniform(rng, 0, 3));
    s.enemy.facing = static_cast<Direction>(uniform(rng, 0, 3));
    if (coin(rng, 0.2)) s.winner = static_cast<Winner>(uniform(rng, 0, 2));
    return s;
}

inline rtsrl::s3::S3State s3_state(rtsrl::Rng& rng) {
    using namespace rtsrl::s3;
    S3State s;
    auto player = [&] {
        S3PlayerState p;
        p.gold = uniform(rng, 0, 3) * uniform(rng, 0, 120);
        p.wood = uniform(rng, 0, 3) * uniform(rng, 0, 60);
        p.peasants = uniform(rng, 0, 4);
        p.footmen = uniform(rng, 0, 5);
        p.barracks = uniform(rng, 0, 2);
        return p;
    };
    s.me = player();
    s.opponent = coin(rng, 0.25) ? s.me : player();
    s.gold_stock = uniform(rng, 0, 5000);
    s.wood_stock = uniform(rng, 0, 5000);
    s.step_count = uniform(rng, 0, 500);
    if (coin(rng, 0.2)) s.winner = static_cast<Winner>(uniform(rng, 0, 2));
    return s;
}

inline rtsrl::maps::S3Map s3_map(rtsrl::Rng& rng) {
    rtsrl::maps::S3Map m;
    m.width = uniform(rng, 2, 40);
    m.height = uniform(rng, 2, 40);
    m.glyphs.assign(static_cast<std::size_t>(m.width * m.height), '.');
    const bool odd = m.width % 2 == 1;
    const int middle = m.width / 2;
    for (int r = 0; r < m.height; ++r) {
        for (int c = 0; c < m.width; ++c) {
            const int roll = uniform(rng, 0, 19);
            char g = '.';
            if (roll < 2) g = 'g';
            else if (roll < 6) g = 't';
            else if (roll == 6 && !(odd && c == middle)) g = 'b';
            m.glyphs[static_cast<std::size_t>(r * m.width + c)] = g;
        }
    }
    std::vector<int> cells(static_cast<std::size_t>(m.width * m.height));
    for (int i = 0; i < m.width * m.height; ++i) cells[static_cast<std::size_t>(i)] = i;
    std::shuffle(cells.begin(), cells.end(), rng);
    m.player_start = {cells[0] % m.width, cells[0] / m.width};
    m.enemy_start = {cells[1] % m.width, cells[1] / m.width};
    m.glyphs[static_cast<std::size_t>(cells[0])] = 'P';
    m.glyphs[static_cast<std::size_t>(cells[1])] = 'E';
    return m;
}

}  // namespace gen
