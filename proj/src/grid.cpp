#include "erastar/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "erastar/prng.hpp"

namespace erastar {

std::vector<std::pair<Cell, double>> neighbors(const GridMap& map, Cell c) {
    if (!map.in_bounds(c)) throw std::out_of_range("neighbors: cell out of bounds");
    if (map.obstacle(c)) throw std::logic_error("neighbors: cell is an obstacle");
    std::vector<std::pair<Cell, double>> out;
    out.reserve(8);
    map.for_each_neighbor(c, [&](Cell n, Move m) {
        out.emplace_back(n, m.diagonal() ? std::numbers::sqrt2 : 1.0);
    });
    return out;
}

namespace {

// Splits into lines, tolerating CRLF and a missing final newline.
std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            if (!cur.empty() && cur.back() == '\r') cur.pop_back();
            lines.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) {
        if (cur.back() == '\r') cur.pop_back();
        lines.push_back(std::move(cur));
    }
    return lines;
}

int parse_header_int(const std::string& line, const std::string& key) {
    std::istringstream ss(line);
    std::string word;
    long long value = 0;
    if (!(ss >> word >> value) || word != key || value < 1)
        throw MapFormatError(MapFormatError::Kind::MalformedHeader,
                             "bad header line: '" + line + "' (expected '" + key + " <n>')");
    return static_cast<int>(value);
}

}  // namespace

GridMap parse_movingai_map(const std::string& text, CornerRule rule) {
    const std::vector<std::string> lines = split_lines(text);
    if (lines.size() < 4)
        throw MapFormatError(MapFormatError::Kind::MalformedHeader,
                             "map text has fewer than 4 header lines");

    if (lines[0].rfind("type", 0) != 0)
        throw MapFormatError(MapFormatError::Kind::MalformedHeader,
                             "first header line must start with 'type'");

    // height/width accepted in either order; 'map' closes the header.
    int height = -1, width = -1;
    for (int k = 1; k <= 2; ++k) {
        if (lines[k].rfind("height", 0) == 0)
            height = parse_header_int(lines[k], "height");
        else if (lines[k].rfind("width", 0) == 0)
            width = parse_header_int(lines[k], "width");
        else
            throw MapFormatError(MapFormatError::Kind::MalformedHeader,
                                 "expected height/width line, got: '" + lines[k] + "'");
    }
    if (height < 0 || width < 0)
        throw MapFormatError(MapFormatError::Kind::MalformedHeader,
                             "header must contain both height and width");
    if (lines[3] != "map")
        throw MapFormatError(MapFormatError::Kind::MalformedHeader,
                             "expected 'map' line, got: '" + lines[3] + "'");

    // Body: exactly `height` lines of `width` chars; trailing blank lines ok.
    for (std::size_t k = 4 + height; k < lines.size(); ++k)
        if (!lines[k].empty())
            throw MapFormatError(MapFormatError::Kind::DimensionMismatch,
                                 "more body lines than the declared height");
    if (lines.size() < static_cast<std::size_t>(4 + height))
        throw MapFormatError(MapFormatError::Kind::DimensionMismatch,
                             "fewer body lines than the declared height");

    GridMap map(width, height, rule);
    for (int i = 0; i < height; ++i) {
        const std::string& row = lines[4 + i];
        if (static_cast<int>(row.size()) != width)
            throw MapFormatError(MapFormatError::Kind::DimensionMismatch,
                                 "body line " + std::to_string(i) + " has length " +
                                     std::to_string(row.size()) + ", expected " +
                                     std::to_string(width));
        for (int j = 0; j < width; ++j) {
            switch (row[j]) {
                case '.':
                case 'G':
                    break;
                case '@':
                case 'O':
                case 'T':
                case 'S':
                case 'W':
                    map.set_obstacle({i, j}, true);
                    break;
                default:
                    throw MapFormatError(
                        MapFormatError::Kind::UnknownTerrainChar,
                        std::string("unknown terrain character '") + row[j] + "' at (" +
                            std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }
    }
    return map;
}

std::string serialize_movingai_map(const GridMap& map) {
    std::string out = "type octile\nheight " + std::to_string(map.height()) +
                      "\nwidth " + std::to_string(map.width()) + "\nmap\n";
    out.reserve(out.size() + map.cell_count() + map.height());
    for (int i = 0; i < map.height(); ++i) {
        for (int j = 0; j < map.width(); ++j)
            out.push_back(map.obstacle_at(i, j) ? '@' : '.');
        out.push_back('\n');
    }
    return out;
}

GridMap generate_random_map(int width, int height, double obstacle_ratio,
                            int rect_min, int rect_max, std::uint64_t seed,
                            CornerRule rule) {
    if (width < 2 || height < 2)
        throw std::invalid_argument("generate_random_map: dimensions must be >= 2");
    if (rect_min < 1 || rect_max < rect_min)
        throw std::invalid_argument("generate_random_map: need 1 <= rect_min <= rect_max");
    if (obstacle_ratio < 0.0 || obstacle_ratio >= 1.0)
        throw std::invalid_argument("generate_random_map: obstacle_ratio must be in [0,1)");

    GridMap map(width, height, rule);
    SplitMix64 rng(seed);
    const std::size_t total = map.cell_count();
    const std::size_t target =
        static_cast<std::size_t>(std::ceil(obstacle_ratio * static_cast<double>(total)));
    const std::uint64_t max_attempts =
        10ULL * total / (static_cast<std::uint64_t>(rect_min) * rect_min);

    std::size_t placed = 0;
    for (std::uint64_t attempt = 0; placed < target && attempt < max_attempts; ++attempt) {
        const int x = static_cast<int>(rng.next_below(width));
        const int y = static_cast<int>(rng.next_below(height));
        const int w = static_cast<int>(rng.next_in(rect_min, rect_max));
        const int h = static_cast<int>(rng.next_in(rect_min, rect_max));
        const int j_end = std::min(x + w, width);
        const int i_end = std::min(y + h, height);
        for (int i = y; i < i_end; ++i) {
            for (int j = x; j < j_end; ++j) {
                Cell c{i, j};
                if (!map.obstacle(c)) {
                    map.set_obstacle(c, true);
                    ++placed;
                }
            }
        }
    }
    return map;
}

}  // namespace erastar
