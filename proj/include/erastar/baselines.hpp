#pragma once
// Reference planners: exact A* with path tie-breaks (astar_t), relaxed A*
// without tie-breaks (ra_star_wot), and Dijkstra as the ground-truth oracle.
// All three share PathResult and the G8 step costs, nothing else.

#include <cassert>
#include <cstdint>
#include <queue>
#include <vector>

#include "erastar/grid.hpp"
#include "erastar/path.hpp"
#include "erastar/penalty.hpp"
#include "erastar/search.hpp"

namespace erastar {

namespace detail {

template <typename Cost>
Cost step_cost(Move m) {
    if constexpr (std::is_same_v<Cost, Sqrt2>)
        return step_cost_exact(m);
    else
        return m.diagonal() ? std::numbers::sqrt2 : 1.0;
}

// A* open-list entry. f ascending; among equal f the larger g wins (the
// "path tie-break", preferring deeper nodes), then FIFO.
template <typename Cost>
struct AStarEntry {
    Cost f;
    Cost g;
    std::uint64_t seq;
    std::int32_t cell;
};

template <typename Cost>
struct AStarOrder {
    bool operator()(const AStarEntry<Cost>& a, const AStarEntry<Cost>& b) const {
        if (!(a.f == b.f)) return b.f < a.f;
        if (!(a.g == b.g)) return a.g < b.g;
        return a.seq > b.seq;
    }
};

}  // namespace detail

// Textbook A* with the octile heuristic, lazy re-insertion instead of
// decrease-key, and a closed-set skip. Octile is consistent on G8, so the
// result is an exact shortest path.
template <typename Cost>
PathResult astar_t(const GridMap& map, Cell start, Cell goal) {
    using T = CostTraits<Cost>;
    detail::require_endpoints(map, start, goal);

    const std::size_t n = map.cell_count();
    std::vector<Cost> g(n, T::infinity());
    std::vector<std::int32_t> pred(n, -1);
    std::vector<std::uint8_t> closed(n, 0);
    std::priority_queue<detail::AStarEntry<Cost>, std::vector<detail::AStarEntry<Cost>>,
                        detail::AStarOrder<Cost>>
        open;
    std::uint64_t seq = 0;
    std::uint64_t expansions = 0;

    const std::size_t start_idx = map.index(start);
    const std::size_t goal_idx = map.index(goal);
    g[start_idx] = T::zero();
    open.push({octile_h<Cost>(offset_to_goal(start, goal)), T::zero(), seq++,
               static_cast<std::int32_t>(start_idx)});

    bool reached = false;
    while (!open.empty()) {
        const auto top = open.top();
        open.pop();
        if (closed[top.cell]) continue;  // stale lazy-reinsertion entry
        closed[top.cell] = 1;
        ++expansions;
        if (static_cast<std::size_t>(top.cell) == goal_idx) {
            reached = true;
            break;
        }
        const Cell cur = map.cell_at(top.cell);
        const Cost g_cur = g[top.cell];
        map.for_each_neighbor(cur, [&](Cell nc, Move m) {
            const std::size_t n_idx = map.index(nc);
            if (closed[n_idx]) return;  // consistent h: closed g never improves
            const Cost ng = g_cur + detail::step_cost<Cost>(m);
            if (!(ng < g[n_idx])) return;
            g[n_idx] = ng;
            pred[n_idx] = top.cell;
            open.push({ng + octile_h<Cost>(offset_to_goal(nc, goal)), ng, seq++,
                       static_cast<std::int32_t>(n_idx)});
        });
    }
    return trace_path(pred, map.width(), map.height(), start, goal, reached, expansions);
}

// Relaxed A* without path tie-breaks: f = g + octile, FIFO among equal f,
// and each cell's g is fixed on first assignment (single-visit, same
// discipline as ERA*). The loop stops as soon as the goal's g is assigned.
template <typename Cost>
PathResult ra_star_wot(const GridMap& map, Cell start, Cell goal) {
    using T = CostTraits<Cost>;
    detail::require_endpoints(map, start, goal);

    const std::size_t n = map.cell_count();
    std::vector<Cost> g(n, T::infinity());
    std::vector<std::int32_t> pred(n, -1);
    detail::MinQueue<Cost> open;
    std::uint64_t seq = 0;
    std::uint64_t expansions = 0;

    const std::size_t start_idx = map.index(start);
    const std::size_t goal_idx = map.index(goal);
    g[start_idx] = T::zero();
    open.push({octile_h<Cost>(offset_to_goal(start, goal)), seq++,
               static_cast<std::int32_t>(start_idx)});

    while (!T::is_finite(g[goal_idx]) && !open.empty()) {
        const auto top = open.top();
        open.pop();
        const Cell cur = map.cell_at(top.cell);
        const Cost g_cur = g[top.cell];
        map.for_each_neighbor(cur, [&](Cell nc, Move m) {
            const std::size_t n_idx = map.index(nc);
            if (T::is_finite(g[n_idx])) return;  // fixed on first assignment
            g[n_idx] = g_cur + detail::step_cost<Cost>(m);
            pred[n_idx] = top.cell;
            open.push({g[n_idx] + octile_h<Cost>(offset_to_goal(nc, goal)), seq++,
                       static_cast<std::int32_t>(n_idx)});
        });
        ++expansions;
    }
    return trace_path(pred, map.width(), map.height(), start, goal,
                      T::is_finite(g[goal_idx]), expansions);
}

// Ground-truth oracle. Same heap and lazy-deletion strategy as astar_t but
// no heuristic at all, so it shares no heuristic code with the planners
// under test.
template <typename Cost>
PathResult dijkstra(const GridMap& map, Cell start, Cell goal) {
    using T = CostTraits<Cost>;
    detail::require_endpoints(map, start, goal);

    const std::size_t n = map.cell_count();
    std::vector<Cost> dist(n, T::infinity());
    std::vector<std::int32_t> pred(n, -1);
    std::vector<std::uint8_t> done(n, 0);
    detail::MinQueue<Cost> open;
    std::uint64_t seq = 0;
    std::uint64_t expansions = 0;

    const std::size_t start_idx = map.index(start);
    const std::size_t goal_idx = map.index(goal);
    dist[start_idx] = T::zero();
    open.push({T::zero(), seq++, static_cast<std::int32_t>(start_idx)});

    bool reached = false;
    while (!open.empty()) {
        const auto top = open.top();
        open.pop();
        if (done[top.cell]) continue;
        done[top.cell] = 1;
        ++expansions;
        if (static_cast<std::size_t>(top.cell) == goal_idx) {
            reached = true;
            break;
        }
        const Cell cur = map.cell_at(top.cell);
        const Cost d_cur = dist[top.cell];
        map.for_each_neighbor(cur, [&](Cell nc, Move m) {
            const std::size_t n_idx = map.index(nc);
            if (done[n_idx]) return;
            const Cost nd = d_cur + detail::step_cost<Cost>(m);
            if (!(nd < dist[n_idx])) return;
            dist[n_idx] = nd;
            pred[n_idx] = top.cell;
            open.push({nd, seq++, static_cast<std::int32_t>(n_idx)});
        });
    }
    return trace_path(pred, map.width(), map.height(), start, goal, reached, expansions);
}

}  // namespace erastar
