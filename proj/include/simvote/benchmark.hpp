#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "simvote/partition_tree.hpp"

namespace simvote {

struct NamedTree {
    std::string name;
    PartitionTree tree;
};

struct BenchPlan {
    std::vector<NamedTree> trees;
    std::vector<std::size_t> record_counts;  // strictly ascending
    std::size_t values_per_record = 0;
    std::uint64_t seed = 0;
    std::size_t repetitions = 5;
    unsigned threads = 1;
};

struct BenchRow {
    std::string tree;
    std::size_t levels = 0;
    std::size_t records = 0;
    std::size_t values_per_record = 0;
    double total_ms = 0.0;
    double avg_us_per_record = 0.0;
};

struct BenchResult {
    std::vector<BenchRow> rows;
};

/// Phases reported to a BenchObserver, in the order they happen.
enum class BenchPhase { Generate, TimerStart, Batch, TimerStop };

using BenchObserver = std::function<void(BenchPhase)>;

/// For each (tree, count): generate records and run one discarded warm-up
/// batch. Then time `repetitions` rounds over all points and keep each
/// point's median. Only the defuzzify_batch call sits between TimerStart and
/// TimerStop. Rows come out grouped by tree, counts ascending.
BenchResult run_benchmark(const BenchPlan& plan, const BenchObserver& observer = {});

double median(std::vector<double> values);

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

/// Ordinary least squares y = slope*x + intercept with R^2 = 1 - SSres/SStot,
/// clamped to [0,1]. Zero variance in y counts as a perfect fit (R^2 = 1).
LinearFit fit_line(std::span<const double> x, std::span<const double> y);

struct TreeScaling {
    std::string tree;
    LinearFit fit;         // total_ms against record count
    double plateau_ratio;  // avg per record at the largest count / second largest
};

struct ScalingReport {
    std::vector<TreeScaling> trees;
};

/// Throws InsufficientPoints when a tree has fewer than three distinct counts.
ScalingReport analyze_scaling(const BenchResult& result);

std::string emit_bench_csv(const BenchResult& result);

enum class PlotMode { Total, PerRecord };

/// Line chart with one series per tree (record count on x).
std::string emit_plot_svg(const BenchResult& result, PlotMode mode);

}  // namespace simvote
