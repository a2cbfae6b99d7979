#pragma once
// Benchmark harness: corpus manifests, seeded run generation, per-run
// records, summary statistics, and CSV round-tripping.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "erastar/grid.hpp"

namespace erastar {

enum class Planner : int { Era = 0, RaWot = 1, AStarT = 2, Dijkstra = 3 };
inline constexpr int kPlannerCount = 4;
inline constexpr std::array<Planner, 4> kAllPlanners = {Planner::Era, Planner::RaWot,
                                                        Planner::AStarT, Planner::Dijkstra};

const char* planner_name(Planner p);
std::optional<Planner> parse_planner(const std::string& name);

enum class ArithmeticMode { Float, Lattice };

// One map in the corpus: either a .map file on disk or a generator spec.
struct MapSource {
    std::string id;
    std::string group;
    std::string path;  // empty for generated maps

    bool generated = false;
    int width = 0;
    int height = 0;
    double ratio = 0.0;
    int rect_min = 1;
    int rect_max = 1;
    std::uint64_t seed = 0;
};

// Corpus manifest: `group <name>`, `map <path>` and
// `gen w=<int> h=<int> ratio=<float> rmin=<int> rmax=<int> seed=<int>`
// lines; '#' starts a comment. Relative map paths resolve against base_dir.
std::vector<MapSource> parse_manifest(const std::string& text, const std::string& base_dir);

struct BenchConfig {
    std::vector<MapSource> maps;
    int runs_per_map = 30;
    std::vector<Planner> planners = {Planner::Era, Planner::RaWot, Planner::AStarT,
                                     Planner::Dijkstra};
    std::uint64_t seed = 1;
    ArithmeticMode mode = ArithmeticMode::Float;
    CornerRule corner_rule = CornerRule::CutAllowed;
    int timing_reps = 3;       // median of this many timed repetitions
    double time_cap_s = 0.0;   // > 0: runs slower than this are flagged timed-out
    int jobs = 1;              // worker threads across (map, run) pairs
};

struct PlannerOutcome {
    bool present = false;
    bool fail = true;
    bool timed_out = false;
    double length = 0.0;  // +inf when fail
    double time_s = 0.0;  // median wall time of search + reconstruction
    std::uint64_t expansions = 0;
};

struct RunRecord {
    std::string map_id;
    std::string group;
    int run = 0;
    Cell start{};
    Cell goal{};
    std::array<PlannerOutcome, kPlannerCount> planner{};
    bool has_optimal = false;
    double optimal_length = 0.0;  // dijkstra's length; +inf when unreachable

    const PlannerOutcome& outcome(Planner p) const { return planner[static_cast<int>(p)]; }
    PlannerOutcome& outcome(Planner p) { return planner[static_cast<int>(p)]; }
};

// Executes the full protocol: per map, draws runs_per_map (start, goal)
// pairs uniformly over free cells (seeded; the plan is independent of
// planner set, timing and jobs), runs every selected planner on identical
// pairs, and times only search + reconstruction. Maps that fail to load are
// reported to `log` and skipped.
std::vector<RunRecord> run_benchmark(const BenchConfig& cfg, std::ostream* log = nullptr);

struct EmptyInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// CSV persistence. Lengths use 9 decimals, times 6; the header row names
// every column, and the reader keys on names so column order is free.
void write_records_csv(std::ostream& os, const std::vector<RunRecord>& records);
std::vector<RunRecord> read_records_csv(std::istream& is);

std::vector<Planner> planners_in(const std::vector<RunRecord>& records);

// Aggregated statistics per environment group (plus an "All" group).
struct GroupStats {
    std::string group;
    Planner planner{};
    int n_runs = 0;
    int n_path = 0;     // runs where this planner found a path
    int n_optimal = 0;  // among n_path, runs matching the optimal length
    double mean_cost = 0.0;
    double opt_rate_pct = 0.0;    // n_optimal / n_path
    double extra_mean_pct = 0.0;  // over non-optimal runs, like-for-like with
    double extra_std_pct = 0.0;   // the usual "% extra length" reporting
    double extra_max_pct = 0.0;
    double mean_time_s = 0.0;
    std::array<double, 3> rank_pct{};  // % of runs at time rank 1..3
};

struct SummaryTable {
    std::vector<Planner> planners;
    std::vector<std::string> groups;  // input groups in order, then "All"
    std::vector<GroupStats> rows;     // one per (group, planner)

    const GroupStats* find(const std::string& group, Planner p) const;
    // mean_time(a) / mean_time(b) within a group; NaN when undefined
    double time_ratio(const std::string& group, Planner a, Planner b) const;
};

SummaryTable summarize(const std::vector<RunRecord>& records);

std::string summary_to_csv(const SummaryTable& t);
std::string render_summary_text(const SummaryTable& t);

// Static SVG renderings: execution-time-ratio histogram, per-group
// cost/time scatter, per-planner box plot of time over optimal length, and
// the mean +- std cost/time rectangle chart. Returns the written paths.
std::vector<std::string> emit_plots(const std::vector<RunRecord>& records,
                                    const std::string& out_dir);

}  // namespace erastar
