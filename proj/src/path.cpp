#include "erastar/path.hpp"

#include <algorithm>
#include <cmath>

namespace erastar {

PathResult trace_path(const std::vector<std::int32_t>& pred, int width, int height,
                      Cell start, Cell goal, bool reached, std::uint64_t nb_iter) {
    PathResult res;
    res.nb_iter = nb_iter;
    if (!reached) return res;  // fail = true, empty path, length = +inf

    const std::int64_t cell_limit = static_cast<std::int64_t>(width) * height;
    std::int64_t orth = 0, diag = 0;
    std::vector<Cell> rev;
    Cell cur = goal;
    rev.push_back(cur);
    std::int64_t steps = 0;
    while (!(cur == start)) {
        if (++steps > cell_limit)
            throw BrokenChain("predecessor walk exceeded the cell count");
        const std::int32_t p = pred[static_cast<std::size_t>(cur.i) * width + cur.j];
        if (p < 0) throw BrokenChain("predecessor missing before reaching the start");
        const Cell prev{p / width, p % width};
        if (prev.i == cur.i || prev.j == cur.j)
            ++orth;
        else
            ++diag;
        cur = prev;
        rev.push_back(cur);
    }
    std::reverse(rev.begin(), rev.end());

    res.path = std::move(rev);
    res.orth_steps = orth;
    res.diag_steps = diag;
    res.length = static_cast<double>(orth) + static_cast<double>(diag) * std::numbers::sqrt2;
    res.fail = false;
    return res;
}

std::string validate_path(const GridMap& map, const PathResult& r, Cell start, Cell goal) {
    if (r.fail) {
        if (!r.path.empty()) return "failed result carries a non-empty path";
        if (r.length != std::numeric_limits<double>::infinity())
            return "failed result carries a finite length";
        return {};
    }
    if (r.path.empty()) return "successful result has an empty path";
    if (!(r.path.front() == start)) return "path does not begin at the start";
    if (!(r.path.back() == goal)) return "path does not end at the goal";

    std::int64_t orth = 0, diag = 0;
    for (std::size_t k = 0; k < r.path.size(); ++k) {
        const Cell c = r.path[k];
        if (!map.in_bounds(c)) return "path leaves the map";
        if (map.obstacle(c)) return "path crosses an obstacle";
        if (k == 0) continue;
        const Cell p = r.path[k - 1];
        const int di = c.i - p.i, dj = c.j - p.j;
        if (di < -1 || di > 1 || dj < -1 || dj > 1 || (di == 0 && dj == 0))
            return "consecutive path cells are not G8 neighbors";
        if (di != 0 && dj != 0) {
            if (map.corner_rule() == CornerRule::CutForbidden &&
                (map.obstacle_at(p.i + di, p.j) || map.obstacle_at(p.i, p.j + dj)))
                return "path cuts a forbidden corner";
            ++diag;
        } else {
            ++orth;
        }
    }
    if (orth != r.orth_steps || diag != r.diag_steps) return "step counts disagree with the path";
    const double expect =
        static_cast<double>(orth) + static_cast<double>(diag) * std::numbers::sqrt2;
    if (r.length != expect) return "length is not orth + diag*sqrt(2)";
    return {};
}

}  // namespace erastar
