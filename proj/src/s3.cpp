#include "rtsrl/s3.hpp"

#include <algorithm>

#include "rtsrl/errors.hpp"

namespace rtsrl::s3 {

void S3Rules::validate() const {
    const int values[] = {gold_per_peasant, wood_per_peasant, barrack_gold, barrack_wood,
                          footman_gold, initial_gold, initial_wood, initial_peasants};
    for (int v : values) {
        if (v < 0) throw ConfigError("S3 rule constants must be >= 0");
    }
}

std::string_view action_name(S3Action a) {
    switch (a) {
        case S3Action::HarvestGold: return "HarvestGold";
        case S3Action::HarvestWood: return "HarvestWood";
        case S3Action::BuildBarrack: return "BuildBarrack";
        case S3Action::TrainFootman: return "TrainFootman";
        case S3Action::Attack: return "Attack";
        case S3Action::Idle: return "Idle";
    }
    return "?";
}

S3State initial_state(const S3MapSummary& map, const S3Rules& rules) {
    rules.validate();
    if (map.gold_stock < 0 || map.wood_stock < 0 || map.player_barracks < 0 || map.enemy_barracks < 0) {
        throw ConfigError("S3 map summary must be non-negative");
    }
    S3State s;
    s.gold_stock = map.gold_stock;
    s.wood_stock = map.wood_stock;
    s.me = S3PlayerState{rules.initial_gold, rules.initial_wood, rules.initial_peasants, 0,
                         map.player_barracks, true};
    s.opponent = S3PlayerState{rules.initial_gold, rules.initial_wood, rules.initial_peasants, 0,
                               map.enemy_barracks, true};
    return s;
}

S3State mirrored(const S3State& state) {
    S3State m = state;
    std::swap(m.me, m.opponent);
    if (m.winner == Winner::Me) {
        m.winner = Winner::Opponent;
    } else if (m.winner == Winner::Opponent) {
        m.winner = Winner::Me;
    }
    return m;
}

bool is_legal(const S3PlayerState& p, S3Action action, const S3Rules& rules) {
    switch (action) {
        case S3Action::HarvestGold:
        case S3Action::HarvestWood: return p.peasants > 0;
        case S3Action::BuildBarrack: return p.gold >= rules.barrack_gold && p.wood >= rules.barrack_wood;
        case S3Action::TrainFootman: return p.barracks >= 1 && p.gold >= rules.footman_gold;
        case S3Action::Attack: return p.footmen >= 1;
        case S3Action::Idle: return true;
    }
    return false;
}

bool can_field_troops(const S3PlayerState& p, const S3Rules& rules) {
    if (p.barracks >= 1) return p.gold >= rules.footman_gold;
    return p.gold >= rules.barrack_gold + rules.footman_gold && p.wood >= rules.barrack_wood;
}

namespace {

// Splits a shared pool between two requests. When oversubscribed each side
// receives its proportional share, rounded down, so the split is symmetric.
std::pair<int, int> share_pool(int& pool, int mine, int theirs) {
    const long long total = static_cast<long long>(mine) + theirs;
    if (total <= pool) {
        pool -= static_cast<int>(total);
        return {mine, theirs};
    }
    const int a = static_cast<int>(static_cast<long long>(pool) * mine / total);
    const int b = static_cast<int>(static_cast<long long>(pool) * theirs / total);
    pool -= a + b;
    return {a, b};
}

void spend(S3PlayerState& p, S3Action action, const S3Rules& rules) {
    if (action == S3Action::BuildBarrack) {
        p.gold -= rules.barrack_gold;
        p.wood -= rules.barrack_wood;
        ++p.barracks;
    } else if (action == S3Action::TrainFootman) {
        p.gold -= rules.footman_gold;
        ++p.footmen;
    }
}

}  // namespace

S3State s3_step(const S3State& state, S3Action my_action, S3Action opp_action, const S3Rules& rules) {
    if (!state.running()) throw ContractError("s3_step called on an ended S3 game");
    S3State next = state;
    S3PlayerState& me = next.me;
    S3PlayerState& opp = next.opponent;

    if (!is_legal(me, my_action, rules)) my_action = S3Action::Idle;
    if (!is_legal(opp, opp_action, rules)) opp_action = S3Action::Idle;

    const auto request = [&](const S3PlayerState& p, S3Action a, S3Action want, int rate) {
        return a == want ? p.peasants * rate : 0;
    };
    const auto [my_gold, opp_gold] =
        share_pool(next.gold_stock, request(me, my_action, S3Action::HarvestGold, rules.gold_per_peasant),
                   request(opp, opp_action, S3Action::HarvestGold, rules.gold_per_peasant));
    const auto [my_wood, opp_wood] =
        share_pool(next.wood_stock, request(me, my_action, S3Action::HarvestWood, rules.wood_per_peasant),
                   request(opp, opp_action, S3Action::HarvestWood, rules.wood_per_peasant));
    me.gold += my_gold;
    opp.gold += opp_gold;
    me.wood += my_wood;
    opp.wood += opp_wood;

    spend(me, my_action, rules);
    spend(opp, opp_action, rules);

    const bool i_attack = my_action == S3Action::Attack;
    const bool they_attack = opp_action == S3Action::Attack;
    if (i_attack || they_attack) {
        const int lost = std::min(me.footmen, opp.footmen);
        me.footmen -= lost;
        opp.footmen -= lost;
        if (i_attack && me.footmen > 0) opp.base_alive = false;
        if (they_attack && opp.footmen > 0) me.base_alive = false;
    }

    ++next.step_count;
    if (!me.base_alive && !opp.base_alive) {
        next.winner = Winner::Draw;
    } else if (!opp.base_alive) {
        next.winner = Winner::Me;
    } else if (!me.base_alive) {
        next.winner = Winner::Opponent;
    } else if (next.gold_stock == 0 && next.wood_stock == 0 && me.footmen == 0 && opp.footmen == 0 &&
               !can_field_troops(me, rules) && !can_field_troops(opp, rules)) {
        next.winner = Winner::Draw;
    }
    return next;
}

namespace {

int sign(int v) { return (v > 0) - (v < 0); }

}  // namespace

S3Sensors compute_sensors_s3(const S3State& s) {
    return {sign(s.me.gold - s.opponent.gold), sign(s.me.wood - s.opponent.wood),
            sign(s.me.footmen - s.opponent.footmen), std::min(s.me.footmen, 3), s.me.barracks >= 1};
}

rl::StateKey s3_state_key(const S3State& state) {
    const S3Sensors s = compute_sensors_s3(state);
    std::uint64_t k = static_cast<std::uint64_t>(s.gold_cmp + 1);
    k = k * 3 + static_cast<std::uint64_t>(s.wood_cmp + 1);
    k = k * 3 + static_cast<std::uint64_t>(s.troop_cmp + 1);
    k = k * 4 + static_cast<std::uint64_t>(s.own_troop_bucket);
    k = k * 2 + (s.barrack_built ? 1u : 0u);
    const std::uint64_t phase = state.winner ? 1 + static_cast<std::uint64_t>(*state.winner) : 0;
    return rl::StateKey{k * 4 + phase};
}

}  // namespace rtsrl::s3
