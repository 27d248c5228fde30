#include "rtsrl/map_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "rtsrl/errors.hpp"

namespace rtsrl::maps {

std::string_view error_kind_name(MapErrorKind k) {
    switch (k) {
        case MapErrorKind::BadHeader: return "bad-header";
        case MapErrorKind::WrongGame: return "wrong-game";
        case MapErrorKind::DimensionsOutOfRange: return "dimensions-out-of-range";
        case MapErrorKind::WrongLineCount: return "wrong-line-count";
        case MapErrorKind::WrongLineLength: return "wrong-line-length";
        case MapErrorKind::UnknownGlyph: return "unknown-glyph";
        case MapErrorKind::DuplicateLandmark: return "duplicate-landmark";
        case MapErrorKind::MissingLandmark: return "missing-landmark";
        case MapErrorKind::AmbiguousSide: return "ambiguous-side";
        case MapErrorKind::Io: return "io";
    }
    return "?";
}

namespace {

std::string describe(MapErrorKind kind, int line, int column, const std::string& detail) {
    std::ostringstream out;
    out << "map error (" << error_kind_name(kind) << ")";
    if (line > 0) out << " at line " << line;
    if (column > 0) out << ", column " << column;
    out << ": " << detail;
    return out.str();
}

}  // namespace

MapParseError::MapParseError(MapErrorKind kind, int line, int column, const std::string& detail)
    : std::runtime_error(describe(kind, line, column, detail)), kind_(kind), line_(line), column_(column) {}

std::string_view game_name(Game g) { return g == Game::BattleCity ? "battlecity" : "s3"; }

Game parse_game(std::string_view name) {
    if (name == "battlecity") return Game::BattleCity;
    if (name == "s3") return Game::S3;
    throw ConfigError("unknown game '" + std::string(name) + "'");
}

namespace {

struct RawMap {
    Game game;
    int width;
    int height;
    std::vector<std::string_view> rows;
};

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = text.find('\n', start);
        std::string_view line = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return lines;
}

std::optional<int> parse_int(std::string_view token) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
    return value;
}

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

RawMap read_raw(std::string_view text, Game expected) {
    const auto lines = split_lines(text);
    const auto head = tokens(lines.front());
    if (head.size() != 3) {
        throw MapParseError(MapErrorKind::BadHeader, 1, 0, "expected '<game> <width> <height>'");
    }
    Game game;
    if (head[0] == "battlecity") {
        game = Game::BattleCity;
    } else if (head[0] == "s3") {
        game = Game::S3;
    } else {
        throw MapParseError(MapErrorKind::BadHeader, 1, 1, "unknown game tag '" + std::string(head[0]) + "'");
    }
    if (game != expected) {
        throw MapParseError(MapErrorKind::WrongGame, 1, 1,
                            "expected a " + std::string(game_name(expected)) + " map, found " +
                                std::string(game_name(game)));
    }
    const auto width = parse_int(head[1]);
    const auto height = parse_int(head[2]);
    if (!width || !height) throw MapParseError(MapErrorKind::BadHeader, 1, 0, "width and height must be integers");
    if (*width < bc::kMinSide || *width > bc::kMaxSide || *height < bc::kMinSide || *height > bc::kMaxSide) {
        throw MapParseError(MapErrorKind::DimensionsOutOfRange, 1, 0,
                            "dimensions " + std::to_string(*width) + "x" + std::to_string(*height) +
                                " outside [2, 64]");
    }

    std::size_t body_end = lines.size();
    while (body_end > 1 && lines[body_end - 1].empty()) --body_end;
    const std::size_t body_lines = body_end - 1;
    if (body_lines != static_cast<std::size_t>(*height)) {
        throw MapParseError(MapErrorKind::WrongLineCount, static_cast<int>(body_end), 0,
                            "expected " + std::to_string(*height) + " body lines, found " +
                                std::to_string(body_lines));
    }
    RawMap raw{game, *width, *height, {}};
    for (std::size_t r = 0; r < body_lines; ++r) {
        const std::string_view row = lines[r + 1];
        if (row.size() != static_cast<std::size_t>(*width)) {
            throw MapParseError(MapErrorKind::WrongLineLength, static_cast<int>(r + 2), 0,
                                "expected " + std::to_string(*width) + " glyphs, found " +
                                    std::to_string(row.size()));
        }
        raw.rows.push_back(row);
    }
    return raw;
}

std::string glyph_text(char g) {
    if (g >= 0x20 && g < 0x7F) return std::string("'") + g + "'";
    std::ostringstream out;
    out << "byte 0x" << std::hex << (static_cast<unsigned>(g) & 0xFFu);
    return out.str();
}

[[noreturn]] void unknown_glyph(char g, int row, int col) {
    throw MapParseError(MapErrorKind::UnknownGlyph, row + 2, col + 1, "unknown glyph " + glyph_text(g));
}

void place_landmark(std::optional<bc::Coord>& slot, char glyph, int row, int col) {
    if (slot) {
        throw MapParseError(MapErrorKind::DuplicateLandmark, row + 2, col + 1,
                            std::string("second '") + glyph + "' landmark");
    }
    slot = bc::Coord{col, row};
}

bc::Coord require_landmark(const std::optional<bc::Coord>& slot, char glyph) {
    if (!slot) {
        throw MapParseError(MapErrorKind::MissingLandmark, 0, 0, std::string("missing '") + glyph + "' landmark");
    }
    return *slot;
}

void header_line(std::ostringstream& out, Game game, int width, int height) {
    out << game_name(game) << ' ' << width << ' ' << height << '\n';
}

}  // namespace

Game peek_game(std::string_view text) {
    const auto head = tokens(split_lines(text).front());
    if (head.empty()) throw MapParseError(MapErrorKind::BadHeader, 1, 0, "empty header");
    if (head[0] == "battlecity") return Game::BattleCity;
    if (head[0] == "s3") return Game::S3;
    throw MapParseError(MapErrorKind::BadHeader, 1, 1, "unknown game tag '" + std::string(head[0]) + "'");
}

bc::BcMap parse_battlecity_map(std::string_view text) {
    const RawMap raw = read_raw(text, Game::BattleCity);
    bc::BcMap map;
    map.width = raw.width;
    map.height = raw.height;
    map.grid.assign(static_cast<std::size_t>(raw.width * raw.height), bc::Cell::Empty);
    std::optional<bc::Coord> player_spawn, enemy_spawn, player_base, enemy_base;
    for (int r = 0; r < raw.height; ++r) {
        for (int c = 0; c < raw.width; ++c) {
            const char g = raw.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            bc::Cell cell = bc::Cell::Empty;
            switch (g) {
                case '.': break;
                case '#': cell = bc::Cell::Brick; break;
                case 'M': cell = bc::Cell::Marble; break;
                case '~': cell = bc::Cell::Water; break;
                case 'P': place_landmark(player_spawn, g, r, c); break;
                case 'E': place_landmark(enemy_spawn, g, r, c); break;
                case 'p': place_landmark(player_base, g, r, c); break;
                case 'e': place_landmark(enemy_base, g, r, c); break;
                default: unknown_glyph(g, r, c);
            }
            map.set({c, r}, cell);
        }
    }
    map.player_spawn = require_landmark(player_spawn, 'P');
    map.enemy_spawn = require_landmark(enemy_spawn, 'E');
    map.player_base = require_landmark(player_base, 'p');
    map.enemy_base = require_landmark(enemy_base, 'e');
    map.validate();
    return map;
}

std::string serialize_map(const bc::BcMap& map) {
    std::ostringstream out;
    header_line(out, Game::BattleCity, map.width, map.height);
    for (int r = 0; r < map.height; ++r) {
        for (int c = 0; c < map.width; ++c) {
            const bc::Coord here{c, r};
            char g = '.';
            if (here == map.player_spawn) {
                g = 'P';
            } else if (here == map.enemy_spawn) {
                g = 'E';
            } else if (here == map.player_base) {
                g = 'p';
            } else if (here == map.enemy_base) {
                g = 'e';
            } else {
                switch (map.at(here)) {
                    case bc::Cell::Empty: g = '.'; break;
                    case bc::Cell::Brick: g = '#'; break;
                    case bc::Cell::Marble: g = 'M'; break;
                    case bc::Cell::Water: g = '~'; break;
                }
            }
            out << g;
        }
        out << '\n';
    }
    return out.str();
}

int S3Map::count(char glyph) const {
    int n = 0;
    for (char g : glyphs) n += g == glyph;
    return n;
}

int S3Map::player_buildings() const {
    int n = 0;
    for (int r = 0; r < height; ++r) {
        for (int c = 0; c < width / 2; ++c) n += at({c, r}) == 'b';
    }
    return n;
}

int S3Map::enemy_buildings() const {
    int n = 0;
    for (int r = 0; r < height; ++r) {
        for (int c = (width + 1) / 2; c < width; ++c) n += at({c, r}) == 'b';
    }
    return n;
}

s3::S3MapSummary S3Map::summary(const S3MapConstants& constants) const {
    return {count('g') * constants.gold_per_mine_cell, count('t') * constants.wood_per_tree_cell,
            player_buildings(), enemy_buildings()};
}

S3Map parse_s3_map(std::string_view text) {
    const RawMap raw = read_raw(text, Game::S3);
    S3Map map;
    map.width = raw.width;
    map.height = raw.height;
    map.glyphs.reserve(static_cast<std::size_t>(raw.width * raw.height));
    std::optional<bc::Coord> player_start, enemy_start;
    for (int r = 0; r < raw.height; ++r) {
        for (int c = 0; c < raw.width; ++c) {
            const char g = raw.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            switch (g) {
                case '.':
                case 'g':
                case 't': break;
                case 'b':
                    if (raw.width % 2 == 1 && c == raw.width / 2) {
                        throw MapParseError(MapErrorKind::AmbiguousSide, r + 2, c + 1,
                                            "building on the middle column belongs to neither side");
                    }
                    break;
                case 'P': place_landmark(player_start, g, r, c); break;
                case 'E': place_landmark(enemy_start, g, r, c); break;
                default: unknown_glyph(g, r, c);
            }
            map.glyphs.push_back(g);
        }
    }
    map.player_start = require_landmark(player_start, 'P');
    map.enemy_start = require_landmark(enemy_start, 'E');
    return map;
}

std::string serialize_map(const S3Map& map) {
    std::ostringstream out;
    header_line(out, Game::S3, map.width, map.height);
    for (int r = 0; r < map.height; ++r) {
        out.write(map.glyphs.data() + static_cast<std::ptrdiff_t>(r * map.width), map.width);
        out << '\n';
    }
    return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MapParseError(MapErrorKind::Io, 0, 0, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bc::BcMap load_battlecity_map(const std::filesystem::path& path) {
    return parse_battlecity_map(read_text_file(path));
}

S3Map load_s3_map(const std::filesystem::path& path) { return parse_s3_map(read_text_file(path)); }

}  // namespace rtsrl::maps
