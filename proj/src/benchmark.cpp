#include "simvote/benchmark.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>

#include "simvote/datagen.hpp"
#include "simvote/defuzzifier.hpp"
#include "simvote/error.hpp"
#include "simvote/format.hpp"

namespace simvote {

namespace {

void notify(const BenchObserver& observer, BenchPhase phase) {
    if (observer) observer(phase);
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string xml_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

// Round an axis maximum up to 1, 2, or 5 times a power of ten.
double nice_ceiling(double v) {
    if (v <= 0.0) return 1.0;
    const double p = std::pow(10.0, std::floor(std::log10(v)));
    for (double m : {1.0, 2.0, 5.0, 10.0})
        if (m * p >= v) return m * p;
    return 10.0 * p;
}

constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                                 "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

}  // namespace

double median(std::vector<double> values) {
    if (values.empty()) return 0.0;
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    return values.size() % 2 == 1 ? values[mid] : (values[mid - 1] + values[mid]) / 2.0;
}

BenchResult run_benchmark(const BenchPlan& plan, const BenchObserver& observer) {
    if (plan.record_counts.empty()) throw Error(ErrorKind::InfeasibleSpec, "no record counts given");
    for (std::size_t i = 1; i < plan.record_counts.size(); ++i)
        if (plan.record_counts[i] <= plan.record_counts[i - 1])
            throw Error(ErrorKind::InfeasibleSpec, "record counts must be strictly ascending");
    if (plan.repetitions == 0) throw Error(ErrorKind::InfeasibleSpec, "repetitions must be at least 1");

    using Clock = std::chrono::steady_clock;
    const BatchOptions options{UnknownLabelPolicy::Error, plan.threads};
    struct Point {
        const NamedTree* tree;
        std::size_t count;
        std::vector<FuzzyRecord> records;
        std::vector<double> samples;
    };
    std::vector<Point> points;
    for (const auto& named : plan.trees) {
        for (std::size_t count : plan.record_counts) {
            notify(observer, BenchPhase::Generate);
            auto records = generate_records(named.tree, {count, plan.values_per_record, plan.seed});
            (void)defuzzify_batch(named.tree, records, options);
            points.push_back({&named, count, std::move(records), {}});
        }
    }
    // Repetitions go round-robin over all points so slow drift on the host
    // spreads across every point instead of skewing one of them.
    for (std::size_t rep = 0; rep < plan.repetitions; ++rep) {
        for (auto& point : points) {
            notify(observer, BenchPhase::TimerStart);
            const auto start = Clock::now();
            notify(observer, BenchPhase::Batch);
            const auto out = defuzzify_batch(point.tree->tree, point.records, options);
            (void)out;
            const auto stop = Clock::now();
            notify(observer, BenchPhase::TimerStop);
            point.samples.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
        }
    }
    BenchResult result;
    for (auto& point : points) {
        const double total = median(std::move(point.samples));
        result.rows.push_back({point.tree->name, point.tree->tree.depth(), point.count, plan.values_per_record, total,
                               1000.0 * total / static_cast<double>(point.count)});
    }
    return result;
}

LinearFit fit_line(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = std::min(x.size(), y.size());
    if (n < 2) throw Error(ErrorKind::InsufficientPoints, "a line fit needs at least two points");
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0) throw Error(ErrorKind::InsufficientPoints, "all x values are equal");
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    if (syy == 0.0) {
        fit.r_squared = 1.0;
        return fit;
    }
    double ss_res = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = y[i] - (fit.slope * x[i] + fit.intercept);
        ss_res += r * r;
    }
    fit.r_squared = std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
    return fit;
}

ScalingReport analyze_scaling(const BenchResult& result) {
    std::vector<std::string> order;
    std::map<std::string, std::vector<const BenchRow*>> by_tree;
    for (const auto& row : result.rows) {
        auto& rows = by_tree[row.tree];
        if (rows.empty()) order.push_back(row.tree);
        rows.push_back(&row);
    }
    ScalingReport report;
    for (const auto& name : order) {
        auto rows = by_tree[name];
        std::sort(rows.begin(), rows.end(), [](const BenchRow* a, const BenchRow* b) { return a->records < b->records; });
        std::vector<double> x;
        std::vector<double> y;
        for (const BenchRow* r : rows) {
            if (!x.empty() && x.back() == static_cast<double>(r->records)) continue;
            x.push_back(static_cast<double>(r->records));
            y.push_back(r->total_ms);
        }
        if (x.size() < 3)
            throw Error(ErrorKind::InsufficientPoints,
                        "tree '" + name + "' has " + std::to_string(x.size()) + " distinct record counts, need 3");
        const std::size_t last = x.size() - 1;
        const double avg_last = y[last] / x[last];
        const double avg_prev = y[last - 1] / x[last - 1];
        report.trees.push_back({name, fit_line(x, y), avg_prev > 0.0 ? avg_last / avg_prev : 0.0});
    }
    return report;
}

std::string emit_bench_csv(const BenchResult& result) {
    std::string out = "tree,levels,records,values_per_record,total_ms,avg_us_per_record\n";
    for (const auto& r : result.rows)
        out += r.tree + "," + std::to_string(r.levels) + "," + std::to_string(r.records) + "," +
               std::to_string(r.values_per_record) + "," + format_decimal(r.total_ms) + "," +
               format_decimal(r.avg_us_per_record) + "\n";
    return out;
}

std::string emit_plot_svg(const BenchResult& result, PlotMode mode) {
    constexpr double width = 800, height = 500;
    constexpr double left = 90, right = 180, top = 50, bottom = 70;
    constexpr double plot_w = width - left - right, plot_h = height - top - bottom;

    std::vector<std::string> order;
    std::map<std::string, std::vector<std::pair<double, double>>> series;
    double max_x = 0.0;
    double max_y = 0.0;
    for (const auto& r : result.rows) {
        auto& pts = series[r.tree];
        if (pts.empty()) order.push_back(r.tree);
        const double y = mode == PlotMode::Total ? r.total_ms : r.avg_us_per_record;
        pts.emplace_back(static_cast<double>(r.records), y);
        max_x = std::max(max_x, static_cast<double>(r.records));
        max_y = std::max(max_y, y);
    }
    max_x = nice_ceiling(max_x);
    max_y = nice_ceiling(max_y);
    const auto px = [&](double x) { return left + plot_w * x / max_x; };
    const auto py = [&](double y) { return top + plot_h - plot_h * y / max_y; };

    const std::string title = mode == PlotMode::Total ? "Defuzzification time" : "Average time per record";
    const std::string y_label = mode == PlotMode::Total ? "Total time (ms)" : "Time per record (us)";

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" + num(height) +
           "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    svg += "  <rect x=\"0\" y=\"0\" width=\"" + num(width) + "\" height=\"" + num(height) + "\" fill=\"white\"/>\n";
    svg += "  <text x=\"" + num(left + plot_w / 2) + "\" y=\"28\" text-anchor=\"middle\" font-size=\"16\">" +
           xml_escape(title) + "</text>\n";

    svg += "  <g class=\"axes\" stroke=\"black\" stroke-width=\"1\">\n";
    svg += "    <line x1=\"" + num(left) + "\" y1=\"" + num(top + plot_h) + "\" x2=\"" + num(left + plot_w) +
           "\" y2=\"" + num(top + plot_h) + "\"/>\n";
    svg += "    <line x1=\"" + num(left) + "\" y1=\"" + num(top) + "\" x2=\"" + num(left) + "\" y2=\"" +
           num(top + plot_h) + "\"/>\n";
    svg += "  </g>\n";

    constexpr int ticks = 5;
    svg += "  <g class=\"ticks\" text-anchor=\"middle\">\n";
    for (int t = 0; t <= ticks; ++t) {
        const double xv = max_x * t / ticks;
        const double yv = max_y * t / ticks;
        svg += "    <line x1=\"" + num(px(xv)) + "\" y1=\"" + num(top + plot_h) + "\" x2=\"" + num(px(xv)) +
               "\" y2=\"" + num(top + plot_h + 5) + "\" stroke=\"black\"/>\n";
        svg += "    <text x=\"" + num(px(xv)) + "\" y=\"" + num(top + plot_h + 20) + "\">" + format_decimal(xv) +
               "</text>\n";
        svg += "    <line x1=\"" + num(left - 5) + "\" y1=\"" + num(py(yv)) + "\" x2=\"" + num(left) + "\" y2=\"" +
               num(py(yv)) + "\" stroke=\"black\"/>\n";
        svg += "    <text x=\"" + num(left - 8) + "\" y=\"" + num(py(yv) + 4) + "\" text-anchor=\"end\">" +
               format_decimal(yv) + "</text>\n";
    }
    svg += "  </g>\n";
    svg += "  <text x=\"" + num(left + plot_w / 2) + "\" y=\"" + num(height - 20) +
           "\" text-anchor=\"middle\">Number of fuzzy records</text>\n";
    svg += "  <text x=\"20\" y=\"" + num(top + plot_h / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 20 " +
           num(top + plot_h / 2) + ")\">" + xml_escape(y_label) + "</text>\n";

    svg += "  <g class=\"series\" fill=\"none\" stroke-width=\"2\">\n";
    for (std::size_t s = 0; s < order.size(); ++s) {
        auto pts = series[order[s]];
        std::sort(pts.begin(), pts.end());
        std::string points;
        for (const auto& [x, y] : pts) points += (points.empty() ? "" : " ") + num(px(x)) + "," + num(py(y));
        const char* color = kPalette[s % kPalette.size()];
        svg += "    <polyline data-series=\"" + xml_escape(order[s]) + "\" stroke=\"" + color + "\" points=\"" +
               points + "\"/>\n";
        for (const auto& [x, y] : pts)
            svg += "    <circle cx=\"" + num(px(x)) + "\" cy=\"" + num(py(y)) + "\" r=\"3\" fill=\"" + color +
                   "\" stroke=\"none\"/>\n";
    }
    svg += "  </g>\n";

    svg += "  <g class=\"legend\">\n";
    for (std::size_t s = 0; s < order.size(); ++s) {
        const double ly = top + 10 + 20.0 * static_cast<double>(s);
        const double lx = left + plot_w + 20;
        svg += "    <line x1=\"" + num(lx) + "\" y1=\"" + num(ly) + "\" x2=\"" + num(lx + 25) + "\" y2=\"" + num(ly) +
               "\" stroke=\"" + kPalette[s % kPalette.size()] + "\" stroke-width=\"2\"/>\n";
        svg += "    <text x=\"" + num(lx + 32) + "\" y=\"" + num(ly + 4) + "\">" + xml_escape(order[s]) + "</text>\n";
    }
    svg += "  </g>\n";
    svg += "</svg>\n";
    return svg;
}

}  // namespace simvote
