#pragma once

// ASCII map files for both games. A file is a header line
// `<game> <width> <height>` followed by `height` lines of exactly `width`
// glyphs, top row first.
//
// BattleCity glyphs: . empty  # brick  M marble  ~ water
//                    P player spawn  E enemy spawn  p player base  e enemy base
// S3 glyphs:         . empty  g goldmine  t tree  b building  P/E starts
//
// S3 buildings belong to the player in the left half of the map and to the
// enemy in the right half; on odd widths the middle column is rejected.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rtsrl/battlecity.hpp"
#include "rtsrl/s3.hpp"

namespace rtsrl::maps {

enum class MapErrorKind {
    BadHeader,
    WrongGame,
    DimensionsOutOfRange,
    WrongLineCount,
    WrongLineLength,
    UnknownGlyph,
    DuplicateLandmark,
    MissingLandmark,
    AmbiguousSide,
    Io,
};

std::string_view error_kind_name(MapErrorKind k);

class MapParseError : public std::runtime_error {
public:
    // line and column are 1-based file positions; 0 when not applicable.
    MapParseError(MapErrorKind kind, int line, int column, const std::string& detail);

    MapErrorKind kind() const { return kind_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    MapErrorKind kind_;
    int line_;
    int column_;
};

enum class Game { BattleCity, S3 };

std::string_view game_name(Game g);
Game parse_game(std::string_view name);

struct S3MapConstants {
    int gold_per_mine_cell = 1000;
    int wood_per_tree_cell = 100;
};

struct S3Map {
    int width = 0;
    int height = 0;
    std::vector<char> glyphs;  // row-major
    bc::Coord player_start;
    bc::Coord enemy_start;

    char at(bc::Coord c) const { return glyphs[static_cast<std::size_t>(c.row * width + c.col)]; }

    int count(char glyph) const;
    // Buildings in the player's (left) and enemy's (right) halves.
    int player_buildings() const;
    int enemy_buildings() const;

    s3::S3MapSummary summary(const S3MapConstants& constants = {}) const;

    friend bool operator==(const S3Map&, const S3Map&) = default;
};

bc::BcMap parse_battlecity_map(std::string_view text);
S3Map parse_s3_map(std::string_view text);

// Reads just the header's game tag.
Game peek_game(std::string_view text);

std::string serialize_map(const bc::BcMap& map);
std::string serialize_map(const S3Map& map);

std::string read_text_file(const std::filesystem::path& path);
bc::BcMap load_battlecity_map(const std::filesystem::path& path);
S3Map load_s3_map(const std::filesystem::path& path);

}  // namespace rtsrl::maps
