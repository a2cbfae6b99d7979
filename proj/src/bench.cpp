#include "erastar/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "erastar/baselines.hpp"
#include "erastar/prng.hpp"
#include "erastar/search.hpp"

namespace erastar {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

// Equality tolerance for "length == optimal" after the 9-decimal CSV round
// trip. Distinct G8 lengths at benchmark scale differ by far more than this.
constexpr double kOptimalTol = 1e-6;
}  // namespace

const char* planner_name(Planner p) {
    switch (p) {
        case Planner::Era: return "era";
        case Planner::RaWot: return "ra_wot";
        case Planner::AStarT: return "astar_t";
        case Planner::Dijkstra: return "dijkstra";
    }
    return "?";
}

std::optional<Planner> parse_planner(const std::string& name) {
    for (Planner p : kAllPlanners)
        if (name == planner_name(p)) return p;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Manifest

namespace {

std::string sanitize_id(std::string s) {
    for (char& c : s)
        if (c == ',' || c == ' ' || c == '\t') c = '_';
    return s;
}

std::string basename_of(const std::string& path) {
    const std::size_t pos = path.find_last_of("/\\");
    return pos == std::string::npos ? path : path.substr(pos + 1);
}

}  // namespace

std::vector<MapSource> parse_manifest(const std::string& text, const std::string& base_dir) {
    std::vector<MapSource> out;
    std::istringstream is(text);
    std::string line;
    std::string group = "default";
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        const std::string where = "manifest line " + std::to_string(line_no);
        if (word == "group") {
            if (!(ls >> group)) throw std::runtime_error(where + ": group needs a name");
        } else if (word == "map") {
            std::string path;
            if (!(ls >> path)) throw std::runtime_error(where + ": map needs a path");
            MapSource src;
            if (path.front() != '/' && !base_dir.empty()) path = base_dir + "/" + path;
            src.path = path;
            src.group = group;
            src.id = sanitize_id(basename_of(path));
            out.push_back(std::move(src));
        } else if (word == "gen") {
            MapSource src;
            src.generated = true;
            src.group = group;
            src.seed = static_cast<std::uint64_t>(out.size()) + 1;
            src.rect_min = 1;
            src.rect_max = 1;
            std::string kv;
            while (ls >> kv) {
                const std::size_t eq = kv.find('=');
                if (eq == std::string::npos)
                    throw std::runtime_error(where + ": expected key=value, got '" + kv + "'");
                const std::string key = kv.substr(0, eq);
                const std::string val = kv.substr(eq + 1);
                try {
                    if (key == "w")
                        src.width = std::stoi(val);
                    else if (key == "h")
                        src.height = std::stoi(val);
                    else if (key == "ratio")
                        src.ratio = std::stod(val);
                    else if (key == "rmin")
                        src.rect_min = std::stoi(val);
                    else if (key == "rmax")
                        src.rect_max = std::stoi(val);
                    else if (key == "seed")
                        src.seed = std::stoull(val);
                    else
                        throw std::runtime_error(where + ": unknown gen key '" + key + "'");
                } catch (const std::invalid_argument&) {
                    throw std::runtime_error(where + ": bad value for '" + key + "'");
                }
            }
            if (src.width < 2 || src.height < 2)
                throw std::runtime_error(where + ": gen needs w>=2 and h>=2");
            if (src.rect_max < src.rect_min) src.rect_max = src.rect_min;
            char buf[96];
            std::snprintf(buf, sizeof buf, "gen-%dx%d-r%g-s%llu", src.width, src.height,
                          src.ratio, static_cast<unsigned long long>(src.seed));
            src.id = buf;
            out.push_back(std::move(src));
        } else {
            throw std::runtime_error(where + ": unknown directive '" + word + "'");
        }
    }
    // Duplicate ids would make CSV rows ambiguous.
    for (std::size_t i = 0; i < out.size(); ++i) {
        int dup = 0;
        for (std::size_t k = 0; k < i; ++k)
            if (out[k].id == out[i].id) ++dup;
        if (dup) out[i].id += "." + std::to_string(dup);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Benchmark execution

namespace {

struct LoadedMap {
    MapSource src;
    GridMap map;
    std::vector<std::int32_t> free_cells;
};

std::vector<LoadedMap> load_corpus(const BenchConfig& cfg, std::ostream* log) {
    std::vector<LoadedMap> loaded;
    for (const MapSource& src : cfg.maps) {
        try {
            GridMap map = src.generated
                              ? generate_random_map(src.width, src.height, src.ratio,
                                                    src.rect_min, src.rect_max, src.seed,
                                                    cfg.corner_rule)
                              : [&] {
                                    std::ifstream f(src.path, std::ios::binary);
                                    if (!f)
                                        throw std::runtime_error("cannot open " + src.path);
                                    std::ostringstream ss;
                                    ss << f.rdbuf();
                                    return parse_movingai_map(ss.str(), cfg.corner_rule);
                                }();
            std::vector<std::int32_t> free_cells;
            free_cells.reserve(map.cell_count());
            for (std::size_t idx = 0; idx < map.cell_count(); ++idx)
                if (map.free(map.cell_at(idx)))
                    free_cells.push_back(static_cast<std::int32_t>(idx));
            if (free_cells.size() < 2)
                throw std::runtime_error("fewer than two free cells");
            loaded.push_back({src, std::move(map), std::move(free_cells)});
        } catch (const std::exception& e) {
            if (log) *log << "skipping map '" << src.id << "': " << e.what() << "\n";
        }
    }
    return loaded;
}

struct PlannedRun {
    int map_index;
    int run;
    Cell start;
    Cell goal;
};

// The run plan depends only on (corpus, runs_per_map, seed): draws are
// start index then goal index per run, goal resampled until distinct.
std::vector<PlannedRun> make_plan(const std::vector<LoadedMap>& maps, int runs_per_map,
                                  std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<PlannedRun> plan;
    for (int mi = 0; mi < static_cast<int>(maps.size()); ++mi) {
        const LoadedMap& lm = maps[mi];
        const std::uint64_t n_free = lm.free_cells.size();
        for (int r = 0; r < runs_per_map; ++r) {
            const std::int32_t s = lm.free_cells[rng.next_below(n_free)];
            std::int32_t g;
            do {
                g = lm.free_cells[rng.next_below(n_free)];
            } while (g == s);
            plan.push_back({mi, r, lm.map.cell_at(s), lm.map.cell_at(g)});
        }
    }
    return plan;
}

template <typename Cost>
PathResult run_planner(Planner p, const GridMap& map, const PenaltyTables& tables, Cell s,
                       Cell g) {
    switch (p) {
        case Planner::Era: {
            const SearchState<Cost> st = era_star_search<Cost>(map, tables, s, g);
            return reconstruct_path(st, s, g);
        }
        case Planner::RaWot: return ra_star_wot<Cost>(map, s, g);
        case Planner::AStarT: return astar_t<Cost>(map, s, g);
        case Planner::Dijkstra: return dijkstra<Cost>(map, s, g);
    }
    throw std::logic_error("unknown planner");
}

double median_of(std::vector<double>& v) {
    std::sort(v.begin(), v.end());
    return v[(v.size() - 1) / 2];
}

RunRecord execute_run(const BenchConfig& cfg, const PenaltyTables& tables,
                      const LoadedMap& lm, const PlannedRun& pr) {
    RunRecord rec;
    rec.map_id = lm.src.id;
    rec.group = lm.src.group;
    rec.run = pr.run;
    rec.start = pr.start;
    rec.goal = pr.goal;

    const int reps = std::max(1, cfg.timing_reps);
    for (Planner p : cfg.planners) {
        PlannerOutcome& out = rec.outcome(p);
        out.present = true;
        PathResult res;
        std::vector<double> times;
        times.reserve(reps);
        for (int rep = 0; rep < reps; ++rep) {
            const auto t0 = std::chrono::steady_clock::now();
            if (cfg.mode == ArithmeticMode::Lattice)
                res = run_planner<Sqrt2>(p, lm.map, tables, pr.start, pr.goal);
            else
                res = run_planner<double>(p, lm.map, tables, pr.start, pr.goal);
            const auto t1 = std::chrono::steady_clock::now();
            times.push_back(std::chrono::duration<double>(t1 - t0).count());
        }
        out.time_s = median_of(times);
        out.fail = res.fail;
        out.length = res.fail ? kInf : res.length;
        out.expansions = res.nb_iter;
        out.timed_out = cfg.time_cap_s > 0.0 && out.time_s > cfg.time_cap_s;
    }

    const PlannerOutcome& dj = rec.outcome(Planner::Dijkstra);
    if (dj.present) {
        rec.has_optimal = true;
        rec.optimal_length = dj.fail ? kInf : dj.length;
    }
    return rec;
}

}  // namespace

std::vector<RunRecord> run_benchmark(const BenchConfig& cfg, std::ostream* log) {
    if (cfg.runs_per_map < 1) throw std::invalid_argument("runs_per_map must be >= 1");
    if (cfg.planners.empty()) throw std::invalid_argument("at least one planner required");

    const std::vector<LoadedMap> maps = load_corpus(cfg, log);
    const std::vector<PlannedRun> plan = make_plan(maps, cfg.runs_per_map, cfg.seed);
    const PenaltyTables tables = build_penalty_tables();

    std::vector<RunRecord> records(plan.size());
    const int jobs = std::max(1, cfg.jobs);
    if (jobs == 1) {
        for (std::size_t k = 0; k < plan.size(); ++k)
            records[k] = execute_run(cfg, tables, maps[plan[k].map_index], plan[k]);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                const std::size_t k = next.fetch_add(1);
                if (k >= plan.size()) return;
                records[k] = execute_run(cfg, tables, maps[plan[k].map_index], plan[k]);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return records;
}

// ---------------------------------------------------------------------------
// CSV

namespace {

std::string fmt_length(double v) {
    if (v == kInf) return "inf";
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.9f", v);
    return buf;
}

std::string fmt_time(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

double parse_length(const std::string& s) {
    if (s == "inf") return kInf;
    return std::stod(s);
}

}  // namespace

std::vector<Planner> planners_in(const std::vector<RunRecord>& records) {
    std::vector<Planner> out;
    for (Planner p : kAllPlanners) {
        for (const RunRecord& r : records) {
            if (r.outcome(p).present) {
                out.push_back(p);
                break;
            }
        }
    }
    return out;
}

void write_records_csv(std::ostream& os, const std::vector<RunRecord>& records) {
    const std::vector<Planner> planners = planners_in(records);
    os << "# era-bench-csv v1\n";
    os << "map,group,run,start_i,start_j,goal_i,goal_j,optimal_length";
    for (Planner p : planners) {
        const std::string n = planner_name(p);
        os << "," << n << "_length," << n << "_time_s," << n << "_expansions," << n
           << "_fail," << n << "_timed_out";
    }
    os << "\n";
    for (const RunRecord& r : records) {
        os << r.map_id << "," << r.group << "," << r.run << "," << r.start.i << ","
           << r.start.j << "," << r.goal.i << "," << r.goal.j << ","
           << (r.has_optimal ? fmt_length(r.optimal_length) : std::string());
        for (Planner p : planners) {
            const PlannerOutcome& o = r.outcome(p);
            if (!o.present) {
                os << ",,,,,";
                continue;
            }
            os << "," << fmt_length(o.fail ? kInf : o.length) << "," << fmt_time(o.time_s)
               << "," << o.expansions << "," << (o.fail ? 1 : 0) << ","
               << (o.timed_out ? 1 : 0);
        }
        os << "\n";
    }
}

std::vector<RunRecord> read_records_csv(std::istream& is) {
    std::string line;
    std::vector<std::string> header;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        header = split_csv_line(line);
        break;
    }
    if (header.empty()) throw EmptyInput("records CSV has no header row");

    std::map<std::string, int> col;
    for (int i = 0; i < static_cast<int>(header.size()); ++i) col[header[i]] = i;
    for (const char* required : {"map", "group", "run", "start_i", "start_j", "goal_i",
                                 "goal_j"})
        if (!col.count(required))
            throw std::runtime_error(std::string("records CSV lacks column ") + required);

    std::vector<RunRecord> records;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        const std::vector<std::string> f = split_csv_line(line);
        auto field = [&](const std::string& name) -> std::string {
            const auto it = col.find(name);
            if (it == col.end() || it->second >= static_cast<int>(f.size())) return {};
            return f[it->second];
        };
        RunRecord r;
        r.map_id = field("map");
        r.group = field("group");
        r.run = std::stoi(field("run"));
        r.start = {std::stoi(field("start_i")), std::stoi(field("start_j"))};
        r.goal = {std::stoi(field("goal_i")), std::stoi(field("goal_j"))};
        const std::string opt = field("optimal_length");
        if (!opt.empty()) {
            r.has_optimal = true;
            r.optimal_length = parse_length(opt);
        }
        for (Planner p : kAllPlanners) {
            const std::string n = planner_name(p);
            const std::string len = field(n + "_length");
            if (len.empty()) continue;
            PlannerOutcome& o = r.outcome(p);
            o.present = true;
            o.length = parse_length(len);
            o.fail = field(n + "_fail") == "1";
            o.timed_out = field(n + "_timed_out") == "1";
            o.time_s = std::stod(field(n + "_time_s"));
            o.expansions = std::stoull(field(n + "_expansions"));
        }
        records.push_back(std::move(r));
    }
    if (records.empty()) throw EmptyInput("records CSV has no data rows");
    return records;
}

// ---------------------------------------------------------------------------
// Summary

const GroupStats* SummaryTable::find(const std::string& group, Planner p) const {
    for (const GroupStats& g : rows)
        if (g.group == group && g.planner == p) return &g;
    return nullptr;
}

double SummaryTable::time_ratio(const std::string& group, Planner a, Planner b) const {
    const GroupStats* ga = find(group, a);
    const GroupStats* gb = find(group, b);
    if (!ga || !gb || ga->n_runs == 0 || gb->n_runs == 0 || gb->mean_time_s <= 0.0)
        return std::numeric_limits<double>::quiet_NaN();
    return ga->mean_time_s / gb->mean_time_s;
}

SummaryTable summarize(const std::vector<RunRecord>& records) {
    if (records.empty()) throw EmptyInput("no records to summarize");

    SummaryTable table;
    table.planners = planners_in(records);
    for (const RunRecord& r : records)
        if (std::find(table.groups.begin(), table.groups.end(), r.group) ==
            table.groups.end())
            table.groups.push_back(r.group);
    table.groups.push_back("All");

    for (const std::string& group : table.groups) {
        const bool all = group == "All";
        for (Planner p : table.planners) {
            GroupStats gs;
            gs.group = group;
            gs.planner = p;
            double cost_sum = 0.0, time_sum = 0.0;
            std::vector<double> extras;
            int n_time = 0;
            for (const RunRecord& r : records) {
                if (!all && r.group != group) continue;
                const PlannerOutcome& o = r.outcome(p);
                if (!o.present) continue;
                ++gs.n_runs;
                time_sum += o.time_s;
                ++n_time;

                // time rank among planners in this run
                int rank = 1;
                for (Planner q : table.planners) {
                    if (q == p) continue;
                    const PlannerOutcome& oq = r.outcome(q);
                    if (!oq.present) continue;
                    if (oq.time_s < o.time_s ||
                        (oq.time_s == o.time_s && static_cast<int>(q) < static_cast<int>(p)))
                        ++rank;
                }
                if (rank <= 3) gs.rank_pct[rank - 1] += 1.0;

                if (o.fail) continue;
                ++gs.n_path;
                cost_sum += o.length;
                if (r.has_optimal && r.optimal_length != kInf && r.optimal_length > 0.0) {
                    if (std::abs(o.length - r.optimal_length) <= kOptimalTol)
                        ++gs.n_optimal;
                    else
                        extras.push_back((o.length / r.optimal_length - 1.0) * 100.0);
                }
            }
            if (gs.n_path > 0) gs.mean_cost = cost_sum / gs.n_path;
            if (n_time > 0) gs.mean_time_s = time_sum / n_time;
            if (gs.n_path > 0) gs.opt_rate_pct = 100.0 * gs.n_optimal / gs.n_path;
            if (!extras.empty()) {
                double m = 0.0, mx = 0.0;
                for (double e : extras) {
                    m += e;
                    mx = std::max(mx, e);
                }
                m /= extras.size();
                double var = 0.0;
                for (double e : extras) var += (e - m) * (e - m);
                gs.extra_mean_pct = m;
                gs.extra_std_pct = std::sqrt(var / extras.size());
                gs.extra_max_pct = mx;
            }
            if (gs.n_runs > 0)
                for (double& x : gs.rank_pct) x = 100.0 * x / gs.n_runs;
            table.rows.push_back(std::move(gs));
        }
    }
    return table;
}

namespace {

std::string fmt(double v, int prec = 3) {
    if (std::isnan(v)) return "n/a";
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*f", prec, v);
    return buf;
}

void render_matrix(std::ostringstream& os, const std::string& title,
                   const SummaryTable& t,
                   const std::function<std::string(const GroupStats&)>& cell) {
    os << title << "\n";
    std::vector<std::vector<std::string>> grid;
    std::vector<std::string> head = {"planner"};
    for (const std::string& g : t.groups) head.push_back(g);
    grid.push_back(head);
    for (Planner p : t.planners) {
        std::vector<std::string> row = {planner_name(p)};
        for (const std::string& g : t.groups) {
            const GroupStats* gs = t.find(g, p);
            row.push_back(gs && gs->n_runs > 0 ? cell(*gs) : "n/a");
        }
        grid.push_back(row);
    }
    std::vector<std::size_t> w(grid[0].size(), 0);
    for (const auto& row : grid)
        for (std::size_t c = 0; c < row.size(); ++c) w[c] = std::max(w[c], row[c].size());
    for (const auto& row : grid) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            os << row[c] << std::string(w[c] - row[c].size() + 2, ' ');
        }
        os << "\n";
    }
    os << "\n";
}

}  // namespace

std::string summary_to_csv(const SummaryTable& t) {
    std::ostringstream os;
    os << "# era-bench-summary v1\n";
    os << "group,planner,n_runs,n_path,mean_cost,opt_rate_pct,extra_mean_pct,extra_std_pct,"
          "extra_max_pct,mean_time_s,rank1_pct,rank2_pct,rank3_pct";
    for (Planner q : t.planners) os << ",time_ratio_vs_" << planner_name(q);
    os << "\n";
    for (const GroupStats& g : t.rows) {
        os << g.group << "," << planner_name(g.planner) << "," << g.n_runs << "," << g.n_path;
        auto num = [&](double v, int prec) {
            os << ",";
            if (g.n_runs > 0 && !std::isnan(v)) os << fmt(v, prec);
        };
        num(g.n_path ? g.mean_cost : std::numeric_limits<double>::quiet_NaN(), 3);
        num(g.n_path ? g.opt_rate_pct : std::numeric_limits<double>::quiet_NaN(), 2);
        num(g.extra_mean_pct, 3);
        num(g.extra_std_pct, 3);
        num(g.extra_max_pct, 3);
        num(g.n_runs ? g.mean_time_s : std::numeric_limits<double>::quiet_NaN(), 6);
        num(g.rank_pct[0], 2);
        num(g.rank_pct[1], 2);
        num(g.rank_pct[2], 2);
        for (Planner q : t.planners) num(t.time_ratio(g.group, g.planner, q), 3);
        os << "\n";
    }
    return os.str();
}

std::string render_summary_text(const SummaryTable& t) {
    std::ostringstream os;
    render_matrix(os, "Percentage of exact optimal paths (when a path exists)", t,
                  [](const GroupStats& g) {
                      return g.n_path ? fmt(g.opt_rate_pct, 1) + "%" : std::string("n/a");
                  });
    render_matrix(os, "Average path cost (cell units)", t, [](const GroupStats& g) {
        return g.n_path ? fmt(g.mean_cost, 1) : std::string("n/a");
    });
    render_matrix(os, "Extra length vs optimal, non-optimal runs (mean/std/max %)", t,
                  [](const GroupStats& g) {
                      return fmt(g.extra_mean_pct, 1) + "/" + fmt(g.extra_std_pct, 1) + "/" +
                             fmt(g.extra_max_pct, 1);
                  });
    render_matrix(os, "Average execution time (seconds)", t, [](const GroupStats& g) {
        return fmt(g.mean_time_s, 6);
    });
    render_matrix(os, "Time rank percentages (rank1/rank2/rank3)", t,
                  [](const GroupStats& g) {
                      return fmt(g.rank_pct[0], 1) + "/" + fmt(g.rank_pct[1], 1) + "/" +
                             fmt(g.rank_pct[2], 1);
                  });

    os << "Pairwise mean-time ratios (row / column, all runs)\n";
    os << "         ";
    for (Planner q : t.planners) os << planner_name(q) << "  ";
    os << "\n";
    for (Planner p : t.planners) {
        os << planner_name(p) << std::string(9 - std::string(planner_name(p)).size(), ' ');
        for (Planner q : t.planners) {
            const std::string s = fmt(t.time_ratio("All", p, q), 2);
            os << s << std::string(std::string(planner_name(q)).size() + 2 > s.size()
                                       ? std::string(planner_name(q)).size() + 2 - s.size()
                                       : 1,
                                   ' ');
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace erastar
