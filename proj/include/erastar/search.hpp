#pragma once
// ERA* search: detour-penalty propagation over the grid using the
// precomputed lookup matrices, followed by backward path reconstruction.
//
// The search keeps a single score matrix D (the accumulated detour penalty,
// equal to g + h - h(start) along the tree) instead of A*'s g and f pair.
// Every cell is finalized the first time a value is assigned to it and is
// never reopened.

#include <cassert>
#include <cstdint>
#include <queue>
#include <vector>

#include "erastar/grid.hpp"
#include "erastar/path.hpp"
#include "erastar/penalty.hpp"
#include "erastar/sqrt2.hpp"

namespace erastar {

enum class ExitReason {
    GoalReached,     // D(goal) became finite
    QueueExhausted,  // goal unreachable
    BudgetExhausted, // nb_iter hit max_nb_iter
};

// Counters for the single-visit discipline. A cell is overwritten iff
// assignments exceeds the number of finite entries, so assignments ==
// finite-cell count is the no-overwrite assertion.
struct SearchStats {
    std::uint64_t enqueued = 0;
    std::uint64_t assignments = 0;
};

template <typename Cost>
struct SearchState {
    int width = 0;
    int height = 0;
    Cell start{};
    Cell goal{};
    std::vector<Cost> d;             // penalty matrix; infinity = unvisited
    std::vector<std::int32_t> pred;  // packed predecessor index; -1 = none
    std::uint64_t nb_iter = 0;       // expansions (dequeues) performed
    std::uint64_t max_nb_iter = 0;
    ExitReason exit_reason = ExitReason::QueueExhausted;
    SearchStats stats;

    std::size_t goal_index() const {
        return static_cast<std::size_t>(goal.i) * width + goal.j;
    }
    bool goal_reached() const { return CostTraits<Cost>::is_finite(d[goal_index()]); }
};

namespace detail {

template <typename Cost>
struct QueueEntry {
    Cost key;
    std::uint64_t seq;
    std::int32_t cell;
};

// Min-(key, seq): FIFO among equal keys, so runs are deterministic and the
// ERA*/RA* equivalence is well-posed.
template <typename Cost>
struct QueueOrder {
    bool operator()(const QueueEntry<Cost>& a, const QueueEntry<Cost>& b) const {
        if (!(a.key == b.key)) return b.key < a.key;
        return a.seq > b.seq;
    }
};

template <typename Cost>
using MinQueue =
    std::priority_queue<QueueEntry<Cost>, std::vector<QueueEntry<Cost>>, QueueOrder<Cost>>;

inline void require_endpoints(const GridMap& map, Cell start, Cell goal) {
    if (!map.in_bounds(start) || map.obstacle(start))
        throw InvalidEndpoint("start cell out of bounds or on an obstacle");
    if (!map.in_bounds(goal) || map.obstacle(goal))
        throw InvalidEndpoint("goal cell out of bounds or on an obstacle");
}

}  // namespace detail

// Runs the penalty-propagation search. A max_nb_iter of 0 selects the
// width*height default, which can never truncate a solvable search (each
// free cell is expanded at most once).
template <typename Cost>
SearchState<Cost> era_star_search(const GridMap& map, const PenaltyTables& tables,
                                  Cell start, Cell goal, std::uint64_t max_nb_iter = 0) {
    using T = CostTraits<Cost>;
    detail::require_endpoints(map, start, goal);

    SearchState<Cost> st;
    st.width = map.width();
    st.height = map.height();
    st.start = start;
    st.goal = goal;
    st.max_nb_iter = max_nb_iter ? max_nb_iter : map.cell_count();
    st.d.assign(map.cell_count(), T::infinity());
    st.pred.assign(map.cell_count(), -1);

    const std::size_t goal_idx = map.index(goal);
    detail::MinQueue<Cost> queue;
    std::uint64_t seq = 0;

    st.d[map.index(start)] = T::zero();
    ++st.stats.assignments;
    queue.push({T::zero(), seq++, static_cast<std::int32_t>(map.index(start))});
    ++st.stats.enqueued;

    while (!T::is_finite(st.d[goal_idx]) && st.nb_iter < st.max_nb_iter && !queue.empty()) {
        const detail::QueueEntry<Cost> top = queue.top();
        queue.pop();
        const Cell cur = map.cell_at(top.cell);
        assert(st.d[top.cell] == top.key);

        // One matrix per expansion, selected from the current offset to the
        // goal. The goal itself is never dequeued (the loop guard exits
        // first), so the offset is never (0,0).
        const PenaltyMatrix& mat = tables.matrix(classify_regime(offset_to_goal(cur, goal)));
        const Cost d_cur = top.key;

        map.for_each_neighbor(cur, [&](Cell n, Move m) {
            const std::size_t n_idx = map.index(n);
            if (T::is_finite(st.d[n_idx])) return;  // single visit, never reopened
            st.pred[n_idx] = top.cell;
            if constexpr (std::is_same_v<Cost, Sqrt2>)
                st.d[n_idx] = d_cur + mat.at(m).exact;
            else
                st.d[n_idx] = d_cur + mat.at(m).value;
            ++st.stats.assignments;
            queue.push({st.d[n_idx], seq++, static_cast<std::int32_t>(n_idx)});
            ++st.stats.enqueued;
        });
        ++st.nb_iter;
    }

    if (T::is_finite(st.d[goal_idx]))
        st.exit_reason = ExitReason::GoalReached;
    else if (st.nb_iter >= st.max_nb_iter)
        st.exit_reason = ExitReason::BudgetExhausted;
    else
        st.exit_reason = ExitReason::QueueExhausted;
    return st;
}

// Backward reconstruction from the predecessor matrix. Orthogonal and
// diagonal steps are counted separately; sqrt(2) enters once at the end.
template <typename Cost>
PathResult reconstruct_path(const SearchState<Cost>& st, Cell start, Cell goal) {
    assert(st.start == start && st.goal == goal);
    const bool reached = CostTraits<Cost>::is_finite(
        st.d[static_cast<std::size_t>(goal.i) * st.width + goal.j]);
    return trace_path(st.pred, st.width, st.height, start, goal, reached, st.nb_iter);
}

// Central self-test of the module: for every finalized cell, D must equal
// g + h - h(start) with g recomputed independently by walking the
// predecessor tree. Returns the maximum absolute deviation.
template <typename Cost>
double check_d_identity(const SearchState<Cost>& st, const GridMap& map, Cell start) {
    using T = CostTraits<Cost>;
    const std::size_t n = st.d.size();
    // g as exact step counts, resolved lazily along predecessor chains
    std::vector<std::int32_t> g_orth(n, -1), g_diag(n, -1);
    g_orth[map.index(start)] = 0;
    g_diag[map.index(start)] = 0;

    const Sqrt2 h0 = octile_exact(offset_to_goal(start, st.goal));
    double max_dev = 0.0;
    std::vector<std::int32_t> chain;
    for (std::size_t c = 0; c < n; ++c) {
        if (!T::is_finite(st.d[c])) continue;
        std::int32_t cur = static_cast<std::int32_t>(c);
        chain.clear();
        while (g_orth[cur] < 0) {
            chain.push_back(cur);
            cur = st.pred[cur];
            if (cur < 0) throw BrokenChain("finalized cell has no chain to the start");
        }
        while (!chain.empty()) {
            const std::int32_t next = chain.back();
            chain.pop_back();
            const Cell a = map.cell_at(cur), b = map.cell_at(next);
            const bool diag = a.i != b.i && a.j != b.j;
            g_orth[next] = g_orth[cur] + (diag ? 0 : 1);
            g_diag[next] = g_diag[cur] + (diag ? 1 : 0);
            cur = next;
        }

        const Sqrt2 h = octile_exact(offset_to_goal(map.cell_at(c), st.goal));
        double dev;
        if constexpr (std::is_same_v<Cost, Sqrt2>) {
            const Sqrt2 expect = Sqrt2{g_orth[c], g_diag[c]} + h - h0;
            dev = std::abs((st.d[c] - expect).to_double());
        } else {
            const double expect = CostTraits<double>::from_steps(g_orth[c], g_diag[c]) +
                                  h.to_double() - h0.to_double();
            dev = std::abs(st.d[c] - expect);
        }
        if (dev > max_dev) max_dev = dev;
    }
    return max_dev;
}

}  // namespace erastar
