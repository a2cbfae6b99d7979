#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

#include "erastar/bench.hpp"
#include "erastar/svg.hpp"

namespace erastar {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

const char* planner_color(Planner p) {
    switch (p) {
        case Planner::Era: return "#1f77b4";
        case Planner::RaWot: return "#d62728";
        case Planner::AStarT: return "#2ca02c";
        case Planner::Dijkstra: return "#7f7f7f";
    }
    return "#000000";
}

struct Frame {
    SvgCanvas svg{640, 420};
    double left = 70, right = 610, top = 50, bottom = 370;
    LinearScale x, y;

    void begin(const std::string& title, double x0, double x1, double y0, double y1,
               const std::string& xlabel, const std::string& ylabel) {
        x = {x0, x1, left, right};
        y = {y0, y1, bottom, top};  // pixel y grows downward
        svg.rect(0, 0, svg.width(), svg.height(), "#ffffff");
        svg.text(svg.width() / 2, 24, title, 15, "middle");
        svg.line(left, bottom, right, bottom, "#404040");
        svg.line(left, bottom, left, top, "#404040");
        for (int k = 0; k <= 4; ++k) {
            const double fx = x0 + (x1 - x0) * k / 4.0;
            const double fy = y0 + (y1 - y0) * k / 4.0;
            svg.line(x(fx), bottom, x(fx), bottom + 4, "#404040");
            svg.text(x(fx), bottom + 18, label(fx), 10, "middle");
            svg.line(left - 4, y(fy), left, y(fy), "#404040");
            svg.text(left - 6, y(fy) + 3, label(fy), 10, "end");
        }
        svg.text((left + right) / 2, bottom + 36, xlabel, 12, "middle");
        svg.text(16, top - 10, ylabel, 12, "start");
    }

    static std::string label(double v) {
        char buf[32];
        if (v != 0 && (std::abs(v) < 0.01 || std::abs(v) >= 10000))
            std::snprintf(buf, sizeof buf, "%.2e", v);
        else
            std::snprintf(buf, sizeof buf, "%.3g", v);
        return buf;
    }

    void legend(const std::vector<Planner>& planners) {
        double ly = top + 6;
        for (Planner p : planners) {
            svg.rect(right - 90, ly, 10, 10, planner_color(p));
            svg.text(right - 76, ly + 9, planner_name(p), 11);
            ly += 16;
        }
    }
};

void write_file(const std::string& path, const std::string& content,
                std::vector<std::string>& written) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << content;
    written.push_back(path);
}

std::string safe_name(std::string s) {
    for (char& c : s)
        if (!isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_') c = '_';
    return s;
}

void plot_ratio_histogram(const std::vector<RunRecord>& records, const std::string& dir,
                          std::vector<std::string>& written) {
    std::vector<double> ratios;
    for (const RunRecord& r : records) {
        const PlannerOutcome& era = r.outcome(Planner::Era);
        const PlannerOutcome& ra = r.outcome(Planner::RaWot);
        if (era.present && ra.present && era.time_s > 0.0)
            ratios.push_back(ra.time_s / era.time_s);
    }
    if (ratios.empty()) return;

    const double lo = *std::min_element(ratios.begin(), ratios.end());
    const double hi = *std::max_element(ratios.begin(), ratios.end());
    const int nbins = hi > lo ? 30 : 1;
    std::vector<int> bins(nbins, 0);
    for (double v : ratios) {
        int b = hi > lo ? static_cast<int>((v - lo) / (hi - lo) * nbins) : 0;
        if (b == nbins) --b;
        ++bins[b];
    }
    const int peak = *std::max_element(bins.begin(), bins.end());

    Frame fr;
    fr.begin("Execution-time ratio ra_wot / era", lo, hi > lo ? hi : lo + 1, 0, peak,
             "time ratio", "runs");
    const double bw = (fr.right - fr.left) / nbins;
    for (int b = 0; b < nbins; ++b) {
        if (!bins[b]) continue;
        const double ty = fr.y(bins[b]);
        fr.svg.rect(fr.left + b * bw, ty, bw - 1, fr.bottom - ty, "#1f77b4", "none", 1, 0.85);
    }
    if (hi > lo && lo < 1.0 && 1.0 < hi) fr.svg.line(fr.x(1.0), fr.top, fr.x(1.0), fr.bottom, "#d62728");
    write_file(dir + "/time_ratio_hist.svg", fr.svg.finish(), written);
}

void plot_group_scatter(const std::vector<RunRecord>& records,
                        const std::vector<Planner>& planners, const std::string& group,
                        const std::string& dir, std::vector<std::string>& written) {
    double x0 = kInf, x1 = -kInf, y0 = kInf, y1 = -kInf;
    for (const RunRecord& r : records) {
        if (r.group != group) continue;
        for (Planner p : planners) {
            const PlannerOutcome& o = r.outcome(p);
            if (!o.present || o.fail) continue;
            x0 = std::min(x0, o.length), x1 = std::max(x1, o.length);
            y0 = std::min(y0, o.time_s), y1 = std::max(y1, o.time_s);
        }
    }
    if (x0 == kInf) return;  // no successful runs in this group

    Frame fr;
    fr.begin("Cost vs time, group " + group, x0, x1 > x0 ? x1 : x0 + 1, 0,
             y1 > 0 ? y1 * 1.05 : 1, "path length", "time [s]");
    for (const RunRecord& r : records) {
        if (r.group != group) continue;
        for (Planner p : planners) {
            const PlannerOutcome& o = r.outcome(p);
            if (!o.present || o.fail) continue;
            fr.svg.circle(fr.x(o.length), fr.y(o.time_s), 3, planner_color(p), 0.65);
        }
    }
    fr.legend(planners);
    write_file(dir + "/scatter_" + safe_name(group) + ".svg", fr.svg.finish(), written);
}

struct BoxStats {
    double lo, q1, med, q3, hi;
};

BoxStats box_stats(std::vector<double>& v) {
    std::sort(v.begin(), v.end());
    auto quantile = [&](double q) {
        const double pos = q * (v.size() - 1);
        const std::size_t k = static_cast<std::size_t>(pos);
        const double frac = pos - k;
        return k + 1 < v.size() ? v[k] * (1 - frac) + v[k + 1] * frac : v[k];
    };
    return {v.front(), quantile(0.25), quantile(0.5), quantile(0.75), v.back()};
}

void plot_time_boxes(const std::vector<RunRecord>& records,
                     const std::vector<Planner>& planners, const std::string& dir,
                     std::vector<std::string>& written) {
    std::vector<std::pair<Planner, BoxStats>> boxes;
    double top_val = 0;
    for (Planner p : planners) {
        std::vector<double> vals;
        for (const RunRecord& r : records) {
            const PlannerOutcome& o = r.outcome(p);
            if (o.present && !o.fail && r.has_optimal && r.optimal_length != kInf &&
                r.optimal_length > 0)
                vals.push_back(o.time_s / r.optimal_length);
        }
        if (vals.empty()) continue;
        boxes.emplace_back(p, box_stats(vals));
        top_val = std::max(top_val, boxes.back().second.hi);
    }
    if (boxes.empty()) return;

    Frame fr;
    fr.begin("Execution time / optimal path length", 0, boxes.size(), 0,
             top_val > 0 ? top_val * 1.05 : 1, "", "seconds per cell unit");
    const double slot = (fr.right - fr.left) / boxes.size();
    for (std::size_t k = 0; k < boxes.size(); ++k) {
        const auto& [p, b] = boxes[k];
        const double cx = fr.left + slot * (k + 0.5);
        const double w = slot * 0.3;
        fr.svg.line(cx, fr.y(b.lo), cx, fr.y(b.q1), "#404040");
        fr.svg.line(cx, fr.y(b.q3), cx, fr.y(b.hi), "#404040");
        fr.svg.rect(cx - w / 2, fr.y(b.q3), w, fr.y(b.q1) - fr.y(b.q3), planner_color(p),
                    "#303030", 1, 0.55);
        fr.svg.line(cx - w / 2, fr.y(b.med), cx + w / 2, fr.y(b.med), "#000000", 2);
        fr.svg.text(cx, fr.bottom + 18, planner_name(p), 11, "middle");
    }
    write_file(dir + "/box_time_per_length.svg", fr.svg.finish(), written);
}

void plot_cost_time_rects(const std::vector<RunRecord>& records,
                          const std::vector<Planner>& planners, const std::string& dir,
                          std::vector<std::string>& written) {
    struct MeanStd {
        double mean_len, std_len, mean_time, std_time;
    };
    std::vector<std::pair<Planner, MeanStd>> stats;
    for (Planner p : planners) {
        std::vector<double> lens, times;
        for (const RunRecord& r : records) {
            const PlannerOutcome& o = r.outcome(p);
            if (o.present && !o.fail) {
                lens.push_back(o.length);
                times.push_back(o.time_s);
            }
        }
        if (lens.empty()) continue;
        auto ms = [](const std::vector<double>& v) {
            double m = 0;
            for (double x : v) m += x;
            m /= v.size();
            double var = 0;
            for (double x : v) var += (x - m) * (x - m);
            return std::pair<double, double>{m, std::sqrt(var / v.size())};
        };
        const auto [ml, sl] = ms(lens);
        const auto [mt, st] = ms(times);
        stats.emplace_back(p, MeanStd{ml, sl, mt, st});
    }
    if (stats.empty()) return;

    double x0 = kInf, x1 = -kInf, y0 = 0, y1 = -kInf;
    for (const auto& [p, s] : stats) {
        x0 = std::min(x0, s.mean_len - s.std_len);
        x1 = std::max(x1, s.mean_len + s.std_len);
        y1 = std::max(y1, s.mean_time + s.std_time);
    }
    Frame fr;
    fr.begin("Cost/time tradeoff (mean +- std)", x0, x1 > x0 ? x1 : x0 + 1, y0,
             y1 > 0 ? y1 * 1.1 : 1, "path length", "time [s]");
    for (const auto& [p, s] : stats) {
        const double rx = fr.x(s.mean_len - s.std_len);
        const double rw = std::max(2.0, fr.x(s.mean_len + s.std_len) - rx);
        const double ry = fr.y(s.mean_time + s.std_time);
        const double rh = std::max(2.0, fr.y(std::max(0.0, s.mean_time - s.std_time)) - ry);
        fr.svg.rect(rx, ry, rw, rh, planner_color(p), "#303030", 1, 0.30);
        const double cx = fr.x(s.mean_len), cy = fr.y(s.mean_time);
        fr.svg.line(cx - 5, cy, cx + 5, cy, planner_color(p), 2);
        fr.svg.line(cx, cy - 5, cx, cy + 5, planner_color(p), 2);
        fr.svg.line(cx - 4, cy - 4, cx + 4, cy + 4, planner_color(p), 2);
        fr.svg.line(cx - 4, cy + 4, cx + 4, cy - 4, planner_color(p), 2);
    }
    fr.legend(planners);
    write_file(dir + "/cost_time_summary.svg", fr.svg.finish(), written);
}

}  // namespace

std::vector<std::string> emit_plots(const std::vector<RunRecord>& records,
                                    const std::string& out_dir) {
    if (records.empty()) throw EmptyInput("no records to plot");
    const std::vector<Planner> planners = planners_in(records);

    std::vector<std::string> groups;
    for (const RunRecord& r : records)
        if (std::find(groups.begin(), groups.end(), r.group) == groups.end())
            groups.push_back(r.group);

    std::vector<std::string> written;
    plot_ratio_histogram(records, out_dir, written);
    for (const std::string& g : groups)
        plot_group_scatter(records, planners, g, out_dir, written);
    plot_time_boxes(records, planners, out_dir, written);
    plot_cost_time_rects(records, planners, out_dir, written);
    return written;
}

}  // namespace erastar
