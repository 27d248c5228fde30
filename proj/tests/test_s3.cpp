#include <doctest.h>

#include "rtsrl/errors.hpp"
#include "rtsrl/s3.hpp"

using namespace rtsrl;
using namespace rtsrl::s3;

namespace {

S3State running_state() {
    S3State s = initial_state(S3MapSummary{4000, 3000, 0, 0});
    return s;
}

}  // namespace

TEST_SUITE("s3_env") {

TEST_CASE("initial state comes from the map summary and rules") {
    const auto s = initial_state(S3MapSummary{4000, 3000, 1, 0});
    CHECK(s.gold_stock == 4000);
    CHECK(s.wood_stock == 3000);
    CHECK(s.me.barracks == 1);
    CHECK(s.opponent.barracks == 0);
    CHECK(s.me.peasants == 2);
    CHECK(s.running());
    CHECK_THROWS_AS(initial_state(S3MapSummary{-1, 0, 0, 0}), ConfigError);
}

TEST_CASE("building a barrack spends its cost") {
    auto s = running_state();
    s.me.gold = 100;
    s.me.wood = 50;
    const auto n = s3_step(s, S3Action::BuildBarrack, S3Action::Idle);
    CHECK(n.me.gold == 0);
    CHECK(n.me.wood == 0);
    CHECK(n.me.barracks == 1);
}

TEST_CASE("attack with surplus razes the defender") {
    auto s = running_state();
    s.me.footmen = 3;
    s.opponent.footmen = 1;
    const auto n = s3_step(s, S3Action::Attack, S3Action::Idle);
    CHECK(n.me.footmen == 2);
    CHECK(n.opponent.footmen == 0);
    CHECK_FALSE(n.opponent.base_alive);
    CHECK(n.winner == Winner::Me);
    CHECK_THROWS_AS(s3_step(n, S3Action::Idle, S3Action::Idle), ContractError);
}

TEST_CASE("a defender with surplus survives but does not raze") {
    auto s = running_state();
    s.me.footmen = 1;
    s.opponent.footmen = 3;
    const auto n = s3_step(s, S3Action::Attack, S3Action::Idle);
    CHECK(n.me.footmen == 0);
    CHECK(n.opponent.footmen == 2);
    CHECK(n.running());
}

TEST_CASE("equal armies trade when both attack") {
    auto s = running_state();
    s.me.footmen = 2;
    s.opponent.footmen = 2;
    const auto n = s3_step(s, S3Action::Attack, S3Action::Attack);
    CHECK(n.me.footmen == 0);
    CHECK(n.opponent.footmen == 0);
    CHECK(n.running());
}

TEST_CASE("illegal actions idle") {
    auto s = running_state();
    s.me.gold = 500;
    auto n = s3_step(s, S3Action::TrainFootman, S3Action::Idle);
    auto expected = s;
    expected.step_count = 1;
    CHECK(n == expected);
    n = s3_step(s, S3Action::Attack, S3Action::BuildBarrack);
    CHECK(n == expected);
}

TEST_CASE("harvesting draws from the shared pools") {
    auto s = running_state();
    auto n = s3_step(s, S3Action::HarvestGold, S3Action::HarvestWood);
    CHECK(n.me.gold == 20);
    CHECK(n.opponent.wood == 10);
    CHECK(n.gold_stock == 3980);
    CHECK(n.wood_stock == 2990);

    s.gold_stock = 15;
    n = s3_step(s, S3Action::HarvestGold, S3Action::HarvestGold);
    CHECK(n.me.gold == 7);
    CHECK(n.opponent.gold == 7);
    CHECK(n.gold_stock == 1);

    s.gold_stock = 5;
    n = s3_step(s, S3Action::HarvestGold, S3Action::Idle);
    CHECK(n.me.gold == 5);
    CHECK(n.gold_stock == 0);
}

TEST_CASE("exhaustion with nothing left to field is a draw") {
    S3State s = initial_state(S3MapSummary{0, 0, 0, 0});
    const auto n = s3_step(s, S3Action::Idle, S3Action::Idle);
    CHECK(n.winner == Winner::Draw);

    S3State rich = initial_state(S3MapSummary{0, 0, 1, 1});
    rich.me.gold = 60;
    CHECK(s3_step(rich, S3Action::Idle, S3Action::Idle).running());
}

TEST_CASE("sensors") {
    auto s = running_state();
    s.me.gold = 120;
    s.opponent.gold = 80;
    s.me.footmen = s.opponent.footmen = 2;
    auto sensors = compute_sensors_s3(s);
    CHECK(sensors.gold_cmp == 1);
    CHECK(sensors.wood_cmp == 0);
    CHECK(sensors.troop_cmp == 0);
    CHECK(sensors.own_troop_bucket == 2);
    s.me.footmen = 5;
    CHECK(compute_sensors_s3(s).own_troop_bucket == 3);
    s.me.barracks = 1;
    CHECK(compute_sensors_s3(s).barrack_built);
}

TEST_CASE("state key depends on sensors only") {
    auto a = running_state();
    a.me.gold = 120;
    a.opponent.gold = 80;
    auto b = a;
    b.me.gold = 900;
    CHECK(s3_state_key(a) == s3_state_key(b));
    auto flipped = a;
    flipped.me.gold = 10;
    CHECK(s3_state_key(a) != s3_state_key(flipped));
    CHECK(s3_state_key(a) == s3_state_key(a));
    auto ended = a;
    ended.winner = Winner::Me;
    CHECK(s3_state_key(a) != s3_state_key(ended));
}

TEST_CASE("mirrored swaps sides") {
    auto s = running_state();
    s.me.gold = 7;
    s.opponent.footmen = 2;
    s.winner = Winner::Me;
    const auto m = mirrored(s);
    CHECK(m.opponent.gold == 7);
    CHECK(m.me.footmen == 2);
    CHECK(m.winner == Winner::Opponent);
    CHECK(mirrored(m) == s);
}

}
