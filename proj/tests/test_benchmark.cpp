#include "simvote/benchmark.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "simvote/datagen.hpp"
#include "simvote/error.hpp"

namespace simvote {
namespace {

BenchResult synthetic_result(std::size_t trees, const std::vector<std::size_t>& counts) {
    BenchResult r;
    for (std::size_t t = 0; t < trees; ++t)
        for (std::size_t n : counts) {
            const double total = 0.01 * static_cast<double>((t + 1) * n);
            r.rows.push_back({"H" + std::to_string(t + 1), t + 2, n, 24, total, 1000.0 * total / static_cast<double>(n)});
        }
    return r;
}

std::size_t count_of(const std::string& haystack, const std::string& needle) {
    std::size_t c = 0;
    for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++c;
    return c;
}

void expect_well_formed_svg(const std::string& svg) {
    std::istringstream in(svg);
    boost::property_tree::ptree pt;
    ASSERT_NO_THROW(boost::property_tree::read_xml(in, pt)) << svg;
    EXPECT_EQ(pt.count("svg"), 1U);
}

TEST(RunBenchmarkTest, OneRowPerTreeAndCount) {
    BenchPlan plan;
    plan.trees.push_back({"H1", generate_tree(default_tree_spec(2), 1)});
    plan.trees.push_back({"H4", generate_tree(default_tree_spec(5), 1)});
    plan.record_counts = {1000};
    plan.values_per_record = 4;
    plan.seed = 3;
    plan.repetitions = 3;
    const auto result = run_benchmark(plan);
    ASSERT_EQ(result.rows.size(), 2U);
    EXPECT_EQ(result.rows[0].tree, "H1");
    EXPECT_EQ(result.rows[0].levels, 2U);
    EXPECT_EQ(result.rows[1].levels, 5U);
    for (const auto& row : result.rows) {
        EXPECT_EQ(row.records, 1000U);
        EXPECT_EQ(row.values_per_record, 4U);
        EXPECT_GT(row.total_ms, 0.0);
        EXPECT_NEAR(row.avg_us_per_record, 1000.0 * row.total_ms / 1000.0, 1e-9);
    }
}

TEST(RunBenchmarkTest, TimedRegionContainsOnlyTheBatch) {
    BenchPlan plan;
    plan.trees.push_back({"H2", generate_tree(default_tree_spec(3), 1)});
    plan.record_counts = {100, 200};
    plan.values_per_record = 8;
    plan.repetitions = 4;
    std::vector<BenchPhase> phases;
    run_benchmark(plan, [&](BenchPhase p) { phases.push_back(p); });

    bool timing = false;
    std::size_t batches = 0;
    std::size_t generations = 0;
    for (BenchPhase p : phases) {
        switch (p) {
            case BenchPhase::TimerStart:
                EXPECT_FALSE(timing);
                timing = true;
                break;
            case BenchPhase::TimerStop:
                EXPECT_TRUE(timing);
                timing = false;
                break;
            case BenchPhase::Batch:
                EXPECT_TRUE(timing);
                ++batches;
                break;
            case BenchPhase::Generate:
                EXPECT_FALSE(timing);
                ++generations;
                break;
        }
    }
    EXPECT_EQ(batches, 8U);
    EXPECT_EQ(generations, 2U);
}

TEST(RunBenchmarkTest, RejectsBadPlans) {
    BenchPlan plan;
    plan.trees.push_back({"H1", generate_tree(default_tree_spec(2), 1)});
    plan.values_per_record = 4;
    EXPECT_THROW(run_benchmark(plan), Error);
    plan.record_counts = {200, 100};
    EXPECT_THROW(run_benchmark(plan), Error);
    plan.record_counts = {100};
    plan.repetitions = 0;
    EXPECT_THROW(run_benchmark(plan), Error);
}

TEST(MedianTest, OrderInvariant) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> v(1 + rng() % 9);
        for (auto& x : v) x = static_cast<double>(rng() % 1000) / 7.0;
        const double m = median(v);
        std::shuffle(v.begin(), v.end(), rng);
        EXPECT_EQ(median(v), m);
    }
    EXPECT_EQ(median({3.0, 1.0, 2.0}), 2.0);
    EXPECT_EQ(median({4.0, 1.0, 2.0, 3.0}), 2.5);
}

TEST(FitLineTest, ExactLinear) {
    const std::vector<double> x{1000, 2000, 4000, 8000};
    std::vector<double> y;
    for (double v : x) y.push_back(2.0 * v);
    const auto fit = fit_line(x, y);
    EXPECT_DOUBLE_EQ(fit.slope, 2.0);
    EXPECT_NEAR(fit.intercept, 0.0, 1e-9);
    EXPECT_DOUBLE_EQ(fit.r_squared, 1.0);
}

TEST(FitLineTest, NoExplainedVariance) {
    const std::vector<double> x{1, 2, 3};
    const std::vector<double> y{5, 7, 5};
    const auto fit = fit_line(x, y);
    EXPECT_DOUBLE_EQ(fit.slope, 0.0);
    EXPECT_DOUBLE_EQ(fit.r_squared, 0.0);
}

TEST(FitLineTest, ConstantIsPerfectFit) {
    const std::vector<double> x{1, 2, 3};
    const std::vector<double> y{4, 4, 4};
    EXPECT_DOUBLE_EQ(fit_line(x, y).r_squared, 1.0);
    EXPECT_THROW(fit_line(std::vector<double>{1, 1}, std::vector<double>{1, 2}), Error);
}

TEST(AnalyzeScalingTest, PerTreeFitsAndPlateau) {
    auto result = synthetic_result(2, {1000, 2000, 4000});
    result.rows[2].total_ms *= 1.1;  // H1 at 4000
    const auto report = analyze_scaling(result);
    ASSERT_EQ(report.trees.size(), 2U);
    EXPECT_EQ(report.trees[0].tree, "H1");
    EXPECT_NEAR(report.trees[0].plateau_ratio, 1.1, 1e-12);
    EXPECT_LT(report.trees[0].fit.r_squared, 1.0);
    EXPECT_NEAR(report.trees[1].fit.slope, 0.02, 1e-12);
    EXPECT_NEAR(report.trees[1].fit.r_squared, 1.0, 1e-12);
    EXPECT_NEAR(report.trees[1].plateau_ratio, 1.0, 1e-12);
}

TEST(AnalyzeScalingTest, NeedsThreeCounts) {
    try {
        analyze_scaling(synthetic_result(1, {1000, 2000}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InsufficientPoints);
    }
}

TEST(EmitBenchCsvTest, Rows) {
    const auto csv = emit_bench_csv(synthetic_result(2, {1000, 2000, 4000}));
    EXPECT_EQ(count_of(csv, "\n"), 7U);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "tree,levels,records,values_per_record,total_ms,avg_us_per_record");
    EXPECT_NE(csv.find("\nH2,3,2000,24,40,20\n"), std::string::npos) << csv;
    EXPECT_EQ(emit_bench_csv({}), "tree,levels,records,values_per_record,total_ms,avg_us_per_record\n");
}

TEST(EmitPlotSvgTest, SeriesPerTree) {
    const auto result = synthetic_result(4, {2000, 4000, 8000, 16000, 30000});
    for (PlotMode mode : {PlotMode::Total, PlotMode::PerRecord}) {
        const auto svg = emit_plot_svg(result, mode);
        expect_well_formed_svg(svg);
        EXPECT_EQ(count_of(svg, "<polyline"), 4U);
        EXPECT_EQ(svg, emit_plot_svg(result, mode));
    }
    EXPECT_NE(emit_plot_svg(result, PlotMode::Total).find("Number of fuzzy records"), std::string::npos);
}

TEST(EmitPlotSvgTest, EmptyResultHasAxesOnly) {
    const auto svg = emit_plot_svg({}, PlotMode::Total);
    expect_well_formed_svg(svg);
    EXPECT_EQ(count_of(svg, "<polyline"), 0U);
    EXPECT_NE(svg.find("class=\"axes\""), std::string::npos);
}

TEST(EmitPlotSvgTest, EscapesTreeNames) {
    BenchResult r;
    r.rows.push_back({"a<&>\"b", 2, 10, 1, 1.0, 100.0});
    expect_well_formed_svg(emit_plot_svg(r, PlotMode::PerRecord));
}

}  // namespace
}  // namespace simvote
