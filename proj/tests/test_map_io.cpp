#include <doctest.h>

#include <filesystem>

#include "rtsrl/map_io.hpp"

using namespace rtsrl;
using namespace rtsrl::maps;

namespace {

MapErrorKind bc_error(const std::string& text) {
    try {
        parse_battlecity_map(text);
    } catch (const MapParseError& e) {
        return e.kind();
    }
    FAIL("no error for:\n" << text);
    return MapErrorKind::Io;
}

MapErrorKind s3_error(const std::string& text) {
    try {
        parse_s3_map(text);
    } catch (const MapParseError& e) {
        return e.kind();
    }
    FAIL("no error for:\n" << text);
    return MapErrorKind::Io;
}

}  // namespace

TEST_SUITE("map_io") {

TEST_CASE("battlecity glyphs map to terrain and landmarks") {
    const std::string text = "battlecity 4 3\n...p\nP#.e\n..E.\n";
    const auto m = parse_battlecity_map(text);
    CHECK(m.width == 4);
    CHECK(m.height == 3);
    CHECK(m.at({1, 1}) == bc::Cell::Brick);
    CHECK(m.player_spawn == bc::Coord{0, 1});
    CHECK(m.enemy_spawn == bc::Coord{2, 2});
    CHECK(m.player_base == bc::Coord{3, 0});
    CHECK(m.enemy_base == bc::Coord{3, 1});
    CHECK(m.at({3, 1}) == bc::Cell::Empty);
    CHECK(serialize_map(m) == text);

    const auto water = parse_battlecity_map("battlecity 4 2\nP~Mp\nE..e\n");
    CHECK(water.at({1, 0}) == bc::Cell::Water);
    CHECK(water.at({2, 0}) == bc::Cell::Marble);
}

TEST_CASE("unknown glyph reports its position") {
    try {
        parse_battlecity_map("battlecity 4 3\n...p\nP#Xe\n..E.\n");
        FAIL("expected an error");
    } catch (const MapParseError& e) {
        CHECK(e.kind() == MapErrorKind::UnknownGlyph);
        CHECK(e.line() == 3);
        CHECK(e.column() == 3);
        CHECK(std::string(e.what()).find("'X'") != std::string::npos);
    }
}

TEST_CASE("each malformed input has its own error kind") {
    CHECK(bc_error("") == MapErrorKind::BadHeader);
    CHECK(bc_error("battlecity four 3\n") == MapErrorKind::BadHeader);
    CHECK(bc_error("chess 4 3\n") == MapErrorKind::BadHeader);
    CHECK(bc_error("s3 4 3\nP..E\n....\n....\n") == MapErrorKind::WrongGame);
    CHECK(bc_error("battlecity 1 3\nP\nE\np\n") == MapErrorKind::DimensionsOutOfRange);
    CHECK(bc_error("battlecity 65 2\n") == MapErrorKind::DimensionsOutOfRange);
    CHECK(bc_error("battlecity 4 3\n...p\nP#.e\n") == MapErrorKind::WrongLineCount);
    CHECK(bc_error("battlecity 4 3\n...p\nP#.e\n..E.\n....\n") == MapErrorKind::WrongLineCount);
    CHECK(bc_error("battlecity 4 3\n...p\nP#.e.\n..E.\n") == MapErrorKind::WrongLineLength);
    CHECK(bc_error("battlecity 4 3\n..pp\nP#.e\n..E.\n") == MapErrorKind::DuplicateLandmark);
    CHECK(bc_error("battlecity 4 3\n....\nP#.e\n..E.\n") == MapErrorKind::MissingLandmark);
    CHECK(s3_error("s3 4 2\nPggE\n..x.\n") == MapErrorKind::UnknownGlyph);
    CHECK(s3_error("s3 4 2\nPggE\n..E.\n") == MapErrorKind::DuplicateLandmark);
    CHECK(s3_error("s3 4 2\nPgg.\n....\n") == MapErrorKind::MissingLandmark);
    CHECK(s3_error("battlecity 4 2\nPggE\n....\n") == MapErrorKind::WrongGame);
    CHECK_THROWS_AS(load_battlecity_map("/nonexistent/never.map"), MapParseError);
}

TEST_CASE("windows line endings and a trailing blank line are accepted") {
    const auto m = parse_battlecity_map("battlecity 2 2\r\nPp\r\nEe\r\n\r\n");
    CHECK(m.enemy_base == bc::Coord{1, 1});
}

TEST_CASE("s3 stocks come from glyph counts") {
    const auto m = parse_s3_map("s3 6 3\nPg....\n.g..bE\n..g...\n");
    CHECK(m.summary().gold_stock == 3000);
    CHECK(m.summary().wood_stock == 0);
    CHECK(m.player_buildings() == 0);
    CHECK(m.enemy_buildings() == 1);
    CHECK(m.summary(S3MapConstants{500, 10}).gold_stock == 1500);

    const auto t = parse_s3_map("s3 4 2\nPttE\nbt..\n");
    CHECK(t.summary().wood_stock == 300);
    CHECK(t.summary().player_barracks == 1);
}

TEST_CASE("a building on the middle column of an odd map is rejected") {
    CHECK(s3_error("s3 5 2\nP.b.E\n.....\n") == MapErrorKind::AmbiguousSide);
    CHECK_NOTHROW(parse_s3_map("s3 5 2\nPb..E\n.....\n"));
}

TEST_CASE("serialization reflects destroyed bricks") {
    auto m = parse_battlecity_map("battlecity 4 3\n...p\nP#.e\n..E.\n");
    m.set({1, 1}, bc::Cell::Empty);
    CHECK(serialize_map(m) == "battlecity 4 3\n...p\nP..e\n..E.\n");
}

TEST_CASE("bundled maps round-trip") {
    int seen = 0;
    for (const auto& entry : std::filesystem::directory_iterator(RTSRL_MAPS_DIR)) {
        if (entry.path().extension() != ".map") continue;
        const std::string text = read_text_file(entry.path());
        CAPTURE(entry.path().string());
        if (peek_game(text) == Game::BattleCity) {
            CHECK(serialize_map(parse_battlecity_map(text)) == text);
        } else {
            CHECK(serialize_map(parse_s3_map(text)) == text);
        }
        ++seen;
    }
    CHECK(seen >= 8);
}

TEST_CASE("bundled s3 maps carry the expected stocks") {
    const auto nwtr2 = load_s3_map(std::string(RTSRL_MAPS_DIR) + "/nwtr2.map");
    CHECK(nwtr2.summary().gold_stock == 4000);
    CHECK(nwtr2.summary().wood_stock == 6000);
    const auto gow = load_s3_map(std::string(RTSRL_MAPS_DIR) + "/gow.map");
    CHECK(gow.summary().enemy_barracks == 1);
}

}
