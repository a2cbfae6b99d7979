#include "erastar/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "erastar/baselines.hpp"
#include "erastar/bench.hpp"
#include "erastar/grid.hpp"
#include "erastar/penalty.hpp"
#include "erastar/search.hpp"

namespace erastar {

namespace {

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << content;
}

Cell parse_cell(const std::string& s) {
    const std::size_t comma = s.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("cell must be i,j: '" + s + "'");
    try {
        return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
    } catch (const std::exception&) {
        throw CLI::ValidationError("cell must be i,j: '" + s + "'");
    }
}

// --out is overridable through the environment when absent.
std::string resolve_out_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("ERASTAR_OUT_DIR"); env && *env) return env;
    return ".";
}

CornerRule parse_corner(const std::string& s) {
    if (s == "allowed") return CornerRule::CutAllowed;
    if (s == "forbidden") return CornerRule::CutForbidden;
    throw CLI::ValidationError("--corner must be allowed|forbidden");
}

ArithmeticMode parse_mode(const std::string& s) {
    if (s == "float") return ArithmeticMode::Float;
    if (s == "lattice") return ArithmeticMode::Lattice;
    throw CLI::ValidationError("--mode must be float|lattice");
}

struct SolveOptions {
    std::string map_path, algo = "era", mode = "float", corner = "allowed";
    std::string start_s, goal_s;
    std::uint64_t max_iter = 0;
    int reps = 3;
    bool print_path = false;
};

template <typename Cost>
int do_solve(const SolveOptions& opt, const GridMap& map, Cell start, Cell goal) {
    const PenaltyTables tables = build_penalty_tables();
    const std::optional<Planner> planner = parse_planner(opt.algo);
    if (!planner) throw std::runtime_error("unknown algorithm '" + opt.algo + "'");

    PathResult res;
    std::vector<double> times;
    for (int rep = 0; rep < std::max(1, opt.reps); ++rep) {
        const auto t0 = std::chrono::steady_clock::now();
        switch (*planner) {
            case Planner::Era: {
                const auto st = era_star_search<Cost>(map, tables, start, goal, opt.max_iter);
                res = reconstruct_path(st, start, goal);
                break;
            }
            case Planner::RaWot: res = ra_star_wot<Cost>(map, start, goal); break;
            case Planner::AStarT: res = astar_t<Cost>(map, start, goal); break;
            case Planner::Dijkstra: res = dijkstra<Cost>(map, start, goal); break;
        }
        const auto t1 = std::chrono::steady_clock::now();
        times.push_back(std::chrono::duration<double>(t1 - t0).count());
    }
    std::sort(times.begin(), times.end());

    if (res.fail) {
        std::printf("fail=true length=inf expansions=%llu time_s=%.6f\n",
                    static_cast<unsigned long long>(res.nb_iter), times[(times.size() - 1) / 2]);
        return 0;
    }
    std::printf("fail=false length=%.9f expansions=%llu time_s=%.6f\n", res.length,
                static_cast<unsigned long long>(res.nb_iter), times[(times.size() - 1) / 2]);
    if (opt.print_path) {
        for (const Cell& c : res.path) std::printf("%d,%d\n", c.i, c.j);
    }
    return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"Grid path planning with detour-penalty lookup tables (ERA*), plus "
                 "relaxed/exact A* baselines and a benchmark harness"};
    app.require_subcommand(0, 1);

    bool dump_tables = false;
    app.add_flag("--dump-penalty-tables", dump_tables,
                 "print the 28 penalty lookup matrices and exit");

    // --- gen-map ---
    auto* gen = app.add_subcommand("gen-map", "generate a random rectangle-obstacle map");
    int gw = 100, gh = 100, grmin = 2, grmax = 10;
    double gratio = 0.2;
    std::uint64_t gseed = 1;
    std::string gout;
    gen->add_option("--width", gw)->check(CLI::Range(2, 1 << 20));
    gen->add_option("--height", gh)->check(CLI::Range(2, 1 << 20));
    gen->add_option("--ratio", gratio, "target obstacle fraction in [0,1)");
    gen->add_option("--rect-min", grmin);
    gen->add_option("--rect-max", grmax);
    gen->add_option("--seed", gseed);
    gen->add_option("--out", gout, ".map output path")->required();

    // --- solve ---
    auto* solve = app.add_subcommand("solve", "run one planner on one instance");
    SolveOptions sopt;
    solve->add_option("--map", sopt.map_path)->required();
    solve->add_option("--algo", sopt.algo, "era|ra_wot|astar_t|dijkstra");
    solve->add_option("--start", sopt.start_s, "start cell i,j")->required();
    solve->add_option("--goal", sopt.goal_s, "goal cell i,j")->required();
    solve->add_option("--mode", sopt.mode, "float|lattice");
    solve->add_option("--corner", sopt.corner, "allowed|forbidden");
    solve->add_option("--max-iter", sopt.max_iter, "expansion budget (0 = cell count)");
    solve->add_option("--reps", sopt.reps, "timing repetitions");
    solve->add_flag("--print-path", sopt.print_path);

    // --- bench ---
    auto* bench = app.add_subcommand("bench", "run the benchmark protocol over a corpus");
    std::string bmanifest, bout, bplanners = "era,ra_wot,astar_t,dijkstra";
    std::string bmode = "float", bcorner = "allowed";
    int bruns = 30, bjobs = 1, breps = 3;
    std::uint64_t bseed = 1;
    double bcap = 0.0;
    bench->add_option("--manifest", bmanifest, "corpus manifest file")->required();
    bench->add_option("--runs", bruns, "runs per map")->check(CLI::PositiveNumber);
    bench->add_option("--planners", bplanners, "comma list of era,ra_wot,astar_t,dijkstra");
    bench->add_option("--seed", bseed);
    bench->add_option("--mode", bmode, "float|lattice");
    bench->add_option("--corner", bcorner, "allowed|forbidden");
    bench->add_option("--jobs", bjobs, "worker threads");
    bench->add_option("--reps", breps, "timing repetitions per measurement");
    bench->add_option("--time-cap", bcap, "per-run cap in seconds; slower runs are flagged");
    bench->add_option("--out", bout, "output directory (or $ERASTAR_OUT_DIR)");

    // --- summarize ---
    auto* summ = app.add_subcommand("summarize", "aggregate a records CSV");
    std::string srecords, sout;
    summ->add_option("--records", srecords)->required();
    summ->add_option("--out", sout, "output directory (or $ERASTAR_OUT_DIR)");

    // --- plot ---
    auto* plot = app.add_subcommand("plot", "render SVG charts from a records CSV");
    std::string precords, pout;
    plot->add_option("--records", precords)->required();
    plot->add_option("--out", pout, "output directory (or $ERASTAR_OUT_DIR)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success))
            return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (dump_tables) {
            std::cout << dump_penalty_tables(build_penalty_tables());
            return 0;
        }
        if (*gen) {
            const GridMap map = generate_random_map(gw, gh, gratio, grmin, grmax, gseed);
            spit(gout, serialize_movingai_map(map));
            std::cout << "wrote " << gout << " (" << map.obstacle_count() << " obstacle cells, "
                      << map.width() << "x" << map.height() << ")\n";
            return 0;
        }
        if (*solve) {
            const GridMap map = parse_movingai_map(slurp(sopt.map_path), parse_corner(sopt.corner));
            const Cell start = parse_cell(sopt.start_s), goal = parse_cell(sopt.goal_s);
            if (parse_mode(sopt.mode) == ArithmeticMode::Lattice)
                return do_solve<Sqrt2>(sopt, map, start, goal);
            return do_solve<double>(sopt, map, start, goal);
        }
        if (*bench) {
            BenchConfig cfg;
            const std::string manifest_text = slurp(bmanifest);
            const std::string base =
                std::filesystem::path(bmanifest).parent_path().string();
            cfg.maps = parse_manifest(manifest_text, base);
            cfg.runs_per_map = bruns;
            cfg.seed = bseed;
            cfg.mode = parse_mode(bmode);
            cfg.corner_rule = parse_corner(bcorner);
            cfg.jobs = bjobs;
            cfg.timing_reps = breps;
            cfg.time_cap_s = bcap;
            cfg.planners.clear();
            std::istringstream ps(bplanners);
            std::string tok;
            while (std::getline(ps, tok, ',')) {
                const auto p = parse_planner(tok);
                if (!p) throw std::runtime_error("unknown planner '" + tok + "'");
                cfg.planners.push_back(*p);
            }
            const std::string out_dir = resolve_out_dir(bout);
            std::filesystem::create_directories(out_dir);
            const std::vector<RunRecord> records = run_benchmark(cfg, &std::cerr);
            const std::string csv_path = out_dir + "/records.csv";
            std::ofstream os(csv_path, std::ios::binary);
            if (!os) throw std::runtime_error("cannot write " + csv_path);
            write_records_csv(os, records);
            std::cout << "wrote " << csv_path << " (" << records.size() << " runs)\n";
            return 0;
        }
        if (*summ) {
            std::ifstream is(srecords, std::ios::binary);
            if (!is) throw std::runtime_error("cannot open " + srecords);
            const SummaryTable table = summarize(read_records_csv(is));
            const std::string out_dir = resolve_out_dir(sout);
            std::filesystem::create_directories(out_dir);
            spit(out_dir + "/summary.csv", summary_to_csv(table));
            std::cout << render_summary_text(table);
            std::cout << "wrote " << out_dir << "/summary.csv\n";
            return 0;
        }
        if (*plot) {
            std::ifstream is(precords, std::ios::binary);
            if (!is) throw std::runtime_error("cannot open " + precords);
            const std::vector<RunRecord> records = read_records_csv(is);
            const std::string out_dir = resolve_out_dir(pout);
            std::filesystem::create_directories(out_dir);
            for (const std::string& f : emit_plots(records, out_dir))
                std::cout << "wrote " << f << "\n";
            return 0;
        }
        std::cout << app.help();
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace erastar
