#pragma once
// Detour-penalty machinery: octile (shortcut) distance, the incremental
// per-move detour formula, combinatorial classification of goal offsets, and
// the 28 precomputed 3x3 penalty lookup matrices.
//
// The incremental penalty of a move is
//     step_cost + h(offset after move) - h(offset before move)
// where h is the octile distance to the goal. That value only depends on
// which "regime" the offset lies in: one of four quarter-turn sectors around
// the goal, subdivided by whether the offset sits on an axis, on the
// diagonal, or strictly between, plus a near-goal refinement. Four sectors
// times seven classes = 28 distinct matrices; no angle is ever computed,
// classification is pure integer comparison.

#include <array>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "erastar/grid.hpp"
#include "erastar/sqrt2.hpp"

namespace erastar {

// Offset from the current cell to the goal: dx = column delta, dy = row
// delta. (0,0) only ever denotes the goal cell itself and is outside the
// domain of classification and penalties.
struct GoalOffset {
    int dx = 0;
    int dy = 0;

    bool operator==(const GoalOffset&) const = default;
};

inline GoalOffset offset_to_goal(Cell from, Cell goal) {
    return {goal.j - from.j, goal.i - from.i};
}
inline GoalOffset offset_after_move(GoalOffset off, Move m) {
    return {off.dx - m.dj, off.dy - m.di};
}

// Octile distance as exact step counts: diag * sqrt(2) + orth.
inline Sqrt2 octile_exact(GoalOffset off) {
    const std::int64_t ax = off.dx < 0 ? -off.dx : off.dx;
    const std::int64_t ay = off.dy < 0 ? -off.dy : off.dy;
    return ax > ay ? Sqrt2{ax - ay, ay} : Sqrt2{ay - ax, ax};
}

template <typename Cost>
inline Cost octile_h(GoalOffset off) {
    if constexpr (std::is_same_v<Cost, Sqrt2>) {
        return octile_exact(off);
    } else {
        const Sqrt2 s = octile_exact(off);
        return static_cast<double>(s.a) + static_cast<double>(s.b) * std::numbers::sqrt2;
    }
}

inline Sqrt2 step_cost_exact(Move m) {
    return m.diagonal() ? Sqrt2::root2() : Sqrt2::one();
}

// Direct-formula penalty; this is the oracle the lookup tables are verified
// against. The float specialization deliberately evaluates in floating
// point, mirroring how a table-free implementation would compute it.
inline Sqrt2 incremental_penalty_exact(GoalOffset off, Move m) {
    assert(off.dx != 0 || off.dy != 0);
    return step_cost_exact(m) + octile_exact(offset_after_move(off, m)) - octile_exact(off);
}

template <typename Cost>
inline Cost incremental_penalty(GoalOffset off, Move m) {
    if constexpr (std::is_same_v<Cost, Sqrt2>) {
        return incremental_penalty_exact(off, m);
    } else {
        assert(off.dx != 0 || off.dy != 0);
        const double step = m.diagonal() ? std::numbers::sqrt2 : 1.0;
        return step + octile_h<double>(offset_after_move(off, m)) - octile_h<double>(off);
    }
}

// Where an offset sits inside its quarter-turn sector, in canonical (u,v)
// coordinates with u > 0, v >= 0.
enum class SectorSlice : std::uint8_t {
    Axis,      // v == 0: goal straight along the sector axis
    LowOpen,   // u > v >= 1: strictly between axis and diagonal
    Diagonal,  // u == v
    HighOpen,  // v > u >= 1
};

struct RegimeId {
    std::uint8_t sector = 0;  // quarter turns from the +x (column) axis
    SectorSlice slice = SectorSlice::Axis;
    bool near_goal = false;  // Axis: u == 1; open slices: |u - v| == 1

    bool operator==(const RegimeId&) const = default;

    // Dense index into the 28 matrices.
    int table_index() const {
        int base;
        switch (slice) {
            case SectorSlice::Axis: base = near_goal ? 0 : 1; break;
            case SectorSlice::LowOpen: base = near_goal ? 2 : 3; break;
            case SectorSlice::Diagonal: base = 4; break;
            default: base = near_goal ? 5 : 6; break;
        }
        return sector * 7 + base;
    }
};

inline constexpr int kRegimeCount = 28;

// Total over all offsets != (0,0). Open-sector inequalities are tested
// before the rarer equality cases.
inline RegimeId classify_regime(GoalOffset off) {
    assert(off.dx != 0 || off.dy != 0);
    std::uint8_t sector;
    int u, v;
    if (off.dx > 0 && off.dy >= 0) {
        sector = 0, u = off.dx, v = off.dy;
    } else if (off.dy > 0) {
        sector = 1, u = off.dy, v = -off.dx;
    } else if (off.dx < 0) {
        sector = 2, u = -off.dx, v = -off.dy;
    } else {
        sector = 3, u = -off.dy, v = off.dx;
    }
    if (u > v) {
        if (v != 0) return {sector, SectorSlice::LowOpen, u - v == 1};
        return {sector, SectorSlice::Axis, u == 1};
    }
    if (v > u) return {sector, SectorSlice::HighOpen, v - u == 1};
    return {sector, SectorSlice::Diagonal, false};
}

struct ConstructionMismatch : std::logic_error {
    using std::logic_error::logic_error;
};

struct PenaltyEntry {
    Sqrt2 exact{};
    double value = 0.0;
};

// One 3x3 matrix of per-move penalties, indexed by (di+1)*3 + (dj+1).
// The center slot (no move) is unused and left at zero.
struct PenaltyMatrix {
    std::array<PenaltyEntry, 9> entries{};
    RegimeId regime;
    GoalOffset representative;  // offset the matrix was evaluated at

    const PenaltyEntry& at(Move m) const { return entries[(m.di + 1) * 3 + (m.dj + 1)]; }
    PenaltyEntry& at(Move m) { return entries[(m.di + 1) * 3 + (m.dj + 1)]; }
};

class PenaltyTables {
public:
    const PenaltyMatrix& matrix(RegimeId id) const { return matrices_[id.table_index()]; }
    const PenaltyMatrix& matrix(int table_index) const { return matrices_[table_index]; }
    const std::array<PenaltyMatrix, kRegimeCount>& all() const { return matrices_; }

private:
    std::array<PenaltyMatrix, kRegimeCount> matrices_;
    friend PenaltyTables build_penalty_tables();
};

// Evaluates the sector-0 matrices at canonical representative offsets,
// produces the other three sectors by quarter-turn rotation, and
// cross-checks every matrix against direct evaluation (throws
// ConstructionMismatch on any disagreement).
PenaltyTables build_penalty_tables();

template <typename Cost>
inline Cost lookup_penalty(const PenaltyTables& tables, GoalOffset off, Move m) {
    const PenaltyEntry& e = tables.matrix(classify_regime(off)).at(m);
    if constexpr (std::is_same_v<Cost, Sqrt2>)
        return e.exact;
    else
        return e.value;
}

// Text rendering of all 28 matrices (debug CLI surface).
std::string dump_penalty_tables(const PenaltyTables& tables);

}  // namespace erastar
