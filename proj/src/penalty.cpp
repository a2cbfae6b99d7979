#include "erastar/penalty.hpp"

#include <sstream>

namespace erastar {

namespace {

// Quarter-turn rotation taking sector k into sector k+1: offsets map as
// (dx, dy) -> (-dy, dx), moves rotate the same way in (dj, di) components.
GoalOffset rotate_offset(GoalOffset o) { return {-o.dy, o.dx}; }
Move rotate_move(Move m) { return {m.dj, -m.di}; }

struct SliceSpec {
    SectorSlice slice;
    bool near_goal;
    GoalOffset representative;  // in sector-0 coordinates, deep inside the class
};

// Near-goal representatives are the exact boundary offsets; general ones sit
// far enough from every class boundary that no move crosses it.
constexpr SliceSpec kSector0Slices[7] = {
    {SectorSlice::Axis, true, {1, 0}},
    {SectorSlice::Axis, false, {5, 0}},
    {SectorSlice::LowOpen, true, {3, 2}},
    {SectorSlice::LowOpen, false, {5, 2}},
    {SectorSlice::Diagonal, false, {4, 4}},
    {SectorSlice::HighOpen, true, {2, 3}},
    {SectorSlice::HighOpen, false, {2, 5}},
};

std::string offset_str(GoalOffset o) {
    return "(" + std::to_string(o.dx) + "," + std::to_string(o.dy) + ")";
}

}  // namespace

PenaltyTables build_penalty_tables() {
    PenaltyTables tables;

    for (int sector = 0; sector < 4; ++sector) {
        for (const SliceSpec& spec : kSector0Slices) {
            GoalOffset rep = spec.representative;
            for (int r = 0; r < sector; ++r) rep = rotate_offset(rep);

            const RegimeId id{static_cast<std::uint8_t>(sector), spec.slice, spec.near_goal};
            if (!(classify_regime(rep) == id))
                throw ConstructionMismatch("representative " + offset_str(rep) +
                                           " classifies outside its intended regime");

            PenaltyMatrix& mat = tables.matrices_[id.table_index()];
            mat.regime = id;
            mat.representative = rep;

            for (const Move& m0 : kMoves) {
                // Sector-0 evaluation carried into this sector by rotation.
                Move m = m0;
                for (int r = 0; r < sector; ++r) m = rotate_move(m);
                const Sqrt2 exact = incremental_penalty_exact(spec.representative, m0);
                mat.at(m) = PenaltyEntry{exact, exact.to_double()};

                // Rotated entries must coincide with direct evaluation at the
                // rotated representative; a mismatch means a broken rotation
                // rule or regime boundary.
                if (!(incremental_penalty_exact(rep, m) == exact))
                    throw ConstructionMismatch(
                        "rotated matrix disagrees with direct evaluation at " + offset_str(rep) +
                        ", move " + move_name(m));
                if (exact.sign() < 0)
                    throw ConstructionMismatch("negative penalty at " + offset_str(rep));
            }
        }
    }

    // Classification self-check over a band wide enough to cross every class
    // boundary: the table route must agree with the direct formula.
    for (int dy = -8; dy <= 8; ++dy) {
        for (int dx = -8; dx <= 8; ++dx) {
            if (dx == 0 && dy == 0) continue;
            const GoalOffset off{dx, dy};
            for (const Move& m : kMoves) {
                if (!(lookup_penalty<Sqrt2>(tables, off, m) == incremental_penalty_exact(off, m)))
                    throw ConstructionMismatch("lookup/formula mismatch at " + offset_str(off) +
                                               ", move " + move_name(m));
            }
        }
    }

    return tables;
}

std::string dump_penalty_tables(const PenaltyTables& tables) {
    static constexpr const char* slice_names[] = {"axis", "low-open", "diagonal", "high-open"};
    std::ostringstream os;
    for (int k = 0; k < kRegimeCount; ++k) {
        const PenaltyMatrix& mat = tables.matrix(k);
        os << "matrix " << k << ": sector " << int(mat.regime.sector) << ", "
           << slice_names[static_cast<int>(mat.regime.slice)]
           << (mat.regime.near_goal ? ", near goal" : "") << ", representative offset "
           << offset_str(mat.representative) << "\n";
        for (int di = -1; di <= 1; ++di) {
            os << "   ";
            for (int dj = -1; dj <= 1; ++dj) {
                std::string s =
                    (di == 0 && dj == 0) ? "." : mat.at(Move{di, dj}).exact.to_string();
                os << s << std::string(s.size() < 10 ? 10 - s.size() : 1, ' ');
            }
            os << "\n";
        }
    }
    return os.str();
}

}  // namespace erastar
