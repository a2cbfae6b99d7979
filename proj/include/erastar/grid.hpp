#pragma once
// 8-connected grid map: occupancy, neighborhood generation, Moving AI .map
// parsing/writing, and seeded random map generation.
//
// Coordinates are (i = row, j = column) with row 0 at the top, everywhere.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace erastar {

struct Cell {
    int i = 0;  // row
    int j = 0;  // column

    bool operator==(const Cell&) const = default;
};

// One of the eight G8 moves. Step cost is 1 for orthogonal moves, sqrt(2)
// for diagonal ones.
struct Move {
    int di;  // row delta, in {-1,0,1}
    int dj;  // column delta, in {-1,0,1}; (0,0) excluded

    constexpr bool diagonal() const { return di != 0 && dj != 0; }
};

// Fixed enumeration order. Both relaxed planners and ERA* push neighbors in
// this order, which the FIFO tie-break turns into identical expansion
// sequences (the equivalence tests rely on that).
inline constexpr std::array<Move, 8> kMoves = {{
    {-1, 0},   // N
    {-1, 1},   // NE
    {0, 1},    // E
    {1, 1},    // SE
    {1, 0},    // S
    {1, -1},   // SW
    {0, -1},   // W
    {-1, -1},  // NW
}};

inline const char* move_name(Move m) {
    static constexpr const char* names[3][3] = {
        {"NW", "N", "NE"}, {"W", "?", "E"}, {"SW", "S", "SE"}};
    return names[m.di + 1][m.dj + 1];
}

enum class CornerRule {
    CutAllowed,    // diagonal passes obstacle corners (tests only the target cell)
    CutForbidden,  // diagonal requires both adjacent orthogonal cells free
};

struct MapFormatError : std::runtime_error {
    enum class Kind { MalformedHeader, DimensionMismatch, UnknownTerrainChar };
    Kind kind;
    MapFormatError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

class GridMap {
public:
    GridMap(int width, int height, CornerRule rule = CornerRule::CutAllowed)
        : width_(width),
          height_(height),
          corner_rule_(rule),
          obstacle_(static_cast<std::size_t>(width) * height, 0) {
        if (width < 1 || height < 1)
            throw std::invalid_argument("GridMap: dimensions must be >= 1");
    }

    int width() const { return width_; }
    int height() const { return height_; }
    CornerRule corner_rule() const { return corner_rule_; }
    std::size_t cell_count() const { return obstacle_.size(); }

    bool in_bounds(Cell c) const {
        return static_cast<unsigned>(c.i) < static_cast<unsigned>(height_) &&
               static_cast<unsigned>(c.j) < static_cast<unsigned>(width_);
    }

    std::size_t index(Cell c) const {
        return static_cast<std::size_t>(c.i) * width_ + c.j;
    }
    Cell cell_at(std::size_t idx) const {
        return {static_cast<int>(idx) / width_, static_cast<int>(idx) % width_};
    }

    bool obstacle(Cell c) const { return obstacle_[index(c)] != 0; }
    bool free(Cell c) const { return obstacle_[index(c)] == 0; }
    bool obstacle_at(int i, int j) const {
        return obstacle_[static_cast<std::size_t>(i) * width_ + j] != 0;
    }

    void set_obstacle(Cell c, bool v) { obstacle_[index(c)] = v ? 1 : 0; }

    std::size_t obstacle_count() const {
        std::size_t n = 0;
        for (auto v : obstacle_) n += v;
        return n;
    }
    std::size_t free_count() const { return cell_count() - obstacle_count(); }

    bool operator==(const GridMap& o) const {
        return width_ == o.width_ && height_ == o.height_ && obstacle_ == o.obstacle_;
    }

    // Visits every in-bounds free G8 neighbor of `c` together with its move.
    // Under CutForbidden a diagonal is skipped when either adjacent
    // orthogonal cell is an obstacle; the rule is symmetric in (c, neighbor).
    template <typename Fn>
    void for_each_neighbor(Cell c, Fn&& fn) const {
        for (const Move& m : kMoves) {
            const Cell n{c.i + m.di, c.j + m.dj};
            if (!in_bounds(n) || obstacle(n)) continue;
            if (m.diagonal() && corner_rule_ == CornerRule::CutForbidden) {
                if (obstacle_at(c.i + m.di, c.j) || obstacle_at(c.i, c.j + m.dj)) continue;
            }
            fn(n, m);
        }
    }

private:
    int width_;
    int height_;
    CornerRule corner_rule_;
    std::vector<std::uint8_t> obstacle_;  // row-major, 1 = obstacle
};

// Convenience form of the neighborhood; the planners use for_each_neighbor.
// Throws std::out_of_range / std::logic_error on caller bugs (out-of-bounds
// or obstacle source cell).
std::vector<std::pair<Cell, double>> neighbors(const GridMap& map, Cell c);

// Moving AI Labs .map format: "type <x>" / "height H" / "width W" / "map",
// then H body lines of W terrain characters. '.' and 'G' parse as free;
// '@', 'O', 'T', 'S', 'W' as obstacles. LF or CRLF both accepted.
GridMap parse_movingai_map(const std::string& text,
                           CornerRule rule = CornerRule::CutAllowed);

// Writer counterpart; emits '.' and '@' only. parse(serialize(m)) == m.
std::string serialize_movingai_map(const GridMap& map);

// Drops axis-aligned rectangles (sides uniform in [rect_min, rect_max],
// position uniform over the grid, clipped at the borders) until the obstacle
// fraction reaches `obstacle_ratio`. Draw order per rectangle is x, y, w, h
// from a SplitMix64 stream, so a fixed seed fully determines the map.
// Placement also stops after 10*(width*height/rect_min^2) attempts.
GridMap generate_random_map(int width, int height, double obstacle_ratio,
                            int rect_min, int rect_max, std::uint64_t seed,
                            CornerRule rule = CornerRule::CutAllowed);

}  // namespace erastar
