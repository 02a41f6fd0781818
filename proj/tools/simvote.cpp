// simvote: command-line front end for similarity matrices, partition trees,
// record defuzzification, synthetic data, and scalability benchmarks.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "simvote/benchmark.hpp"
#include "simvote/datagen.hpp"
#include "simvote/defuzzifier.hpp"
#include "simvote/error.hpp"
#include "simvote/format.hpp"
#include "simvote/partition_tree.hpp"
#include "simvote/records_io.hpp"
#include "simvote/similarity.hpp"

namespace {

using namespace simvote;

struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path + "' for reading");
    return in;
}

void write_out(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open '" + path + "' for writing");
    out << content;
}

SimilarityMatrix load_matrix(const std::string& path) {
    auto in = open_in(path);
    return parse_similarity_matrix(in);
}

PartitionTree load_tree(const std::string& path) {
    auto in = open_in(path);
    return parse_tree(in);
}

// Fails with every violation listed when the matrix is not max-min transitive.
PartitionTree tree_from_matrix(const SimilarityMatrix& m) {
    const auto report = check_max_min_transitivity(m);
    if (!report.ok()) {
        std::string msg = "matrix is not max-min transitive";
        for (const auto& v : report.violations) msg += "\n  violation " + describe(m, v);
        throw DataError(msg);
    }
    return build_partition_tree(m);
}

int run_validate(const std::string& matrix_path) {
    const auto m = load_matrix(matrix_path);
    const auto report = check_max_min_transitivity(m);
    if (!report.ok()) {
        for (const auto& v : report.violations) std::cout << "violation " << describe(m, v) << "\n";
        std::cerr << "error: " << report.violations.size() << " max-min transitivity violations\n";
        return 1;
    }
    std::cout << "OK\nlevels:";
    for (double a : distinct_levels(m)) std::cout << ' ' << format_alpha(a);
    std::cout << "\n";
    return 0;
}

struct ApplyArgs {
    std::string matrix, tree, records, out, on_unknown = "error";
    bool show_table = false;
    unsigned threads = 1;
};

int run_apply(const ApplyArgs& a) {
    const PartitionTree tree = a.tree.empty() ? tree_from_matrix(load_matrix(a.matrix)) : load_tree(a.tree);
    auto in = open_in(a.records);
    const auto records = parse_records(in);
    BatchOptions options;
    options.on_unknown = a.on_unknown == "skip" ? UnknownLabelPolicy::Skip : UnknownLabelPolicy::Error;
    options.threads = a.threads;
    const auto items = defuzzify_batch(tree, records, options);

    if (a.show_table) {
        for (std::size_t i = 0; i < records.size(); ++i) {
            std::cout << "record " << items[i].id << "\n";
            if (const auto* s = std::get_if<Skipped>(&items[i].outcome)) {
                std::cout << "SKIPPED\tunknown label " << s->label << "\n\n";
                continue;
            }
            std::vector<TraceEvent> trace;
            extract_resemblances(tree, resolve_query(tree, records[i]), &trace);
            std::cout << format_trace(tree.domain(), trace) << "\n";
        }
    }
    std::ostringstream csv;
    write_distribution_csv(csv, tree.domain(), items);
    write_out(a.out, csv.str());
    return 0;
}

std::string stem(const std::string& path) { return std::filesystem::path(path).stem().string(); }

struct BenchArgs {
    std::vector<std::string> trees;
    std::vector<std::size_t> counts;
    std::size_t values = 0;
    std::uint64_t seed = 0;
    std::size_t reps = 5;
    unsigned threads = 1;
    std::string csv, svg, per_record_svg;
};

int run_bench(const BenchArgs& a) {
    BenchPlan plan;
    for (const auto& path : a.trees) plan.trees.push_back({stem(path), load_tree(path)});
    plan.record_counts = a.counts;
    plan.values_per_record = a.values;
    plan.seed = a.seed;
    plan.repetitions = a.reps;
    plan.threads = a.threads;
    const auto result = run_benchmark(plan);

    std::printf("# threads=%u reps=%zu values_per_record=%zu\n", a.threads, a.reps, a.values);
    std::printf("%-16s %6s %10s %12s %14s\n", "tree", "levels", "records", "total_ms", "avg_us/record");
    for (const auto& r : result.rows)
        std::printf("%-16s %6zu %10zu %12.3f %14.4f\n", r.tree.c_str(), r.levels, r.records, r.total_ms,
                    r.avg_us_per_record);
    if (a.counts.size() >= 3) {
        std::printf("\n%-16s %14s %12s %8s %9s\n", "tree", "slope_ms/rec", "intercept", "R^2", "plateau");
        for (const auto& t : analyze_scaling(result).trees)
            std::printf("%-16s %14.6g %12.4f %8.5f %9.4f\n", t.tree.c_str(), t.fit.slope, t.fit.intercept,
                        t.fit.r_squared, t.plateau_ratio);
    }
    if (!a.csv.empty()) write_out(a.csv, emit_bench_csv(result));
    if (!a.svg.empty()) write_out(a.svg, emit_plot_svg(result, PlotMode::Total));
    if (!a.per_record_svg.empty()) write_out(a.per_record_svg, emit_plot_svg(result, PlotMode::PerRecord));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Similarity-driven defuzzification of multi-valued categorical records"};
    app.require_subcommand(1);

    std::string matrix_path, out_path;

    auto* validate = app.add_subcommand("validate", "Check a similarity matrix and list its alpha levels");
    validate->add_option("--matrix", matrix_path, "Similarity CSV file")->required();

    auto* tree_cmd = app.add_subcommand("tree", "Build the partition tree of a similarity matrix");
    tree_cmd->add_option("--matrix", matrix_path, "Similarity CSV file")->required();
    tree_cmd->add_option("--out", out_path, "Write the tree as JSON instead of printing it");

    ApplyArgs apply_args;
    auto* apply = app.add_subcommand("apply", "Defuzzify a records file");
    auto* apply_matrix = apply->add_option("--matrix", apply_args.matrix, "Similarity CSV file");
    auto* apply_tree = apply->add_option("--tree", apply_args.tree, "Tree JSON file");
    apply_matrix->excludes(apply_tree);
    apply->add_option("--records", apply_args.records, "Records file")->required();
    apply->add_option("--out", apply_args.out, "Output CSV (default: standard output)");
    apply->add_option("--on-unknown", apply_args.on_unknown, "error or skip")
        ->check(CLI::IsMember({"error", "skip"}));
    apply->add_flag("--show-table", apply_args.show_table, "Print each record's traversal table");
    apply->add_option("--threads", apply_args.threads, "Worker threads")->check(CLI::PositiveNumber);

    TreeSpec tree_spec;
    std::uint64_t seed = 0;
    auto* gen_tree = app.add_subcommand("gen-tree", "Generate a synthetic partition tree");
    gen_tree->add_option("--domain-size", tree_spec.domain_size, "Number of labels")->required();
    gen_tree->add_option("--alphas", tree_spec.level_alphas, "Comma-separated level alphas")
        ->required()
        ->delimiter(',');
    gen_tree->add_option("--branching", tree_spec.branching, "Comma-separated class counts per level")
        ->required()
        ->delimiter(',');
    gen_tree->add_option("--seed", seed, "Random seed")->required();
    gen_tree->add_option("--out", out_path, "Output JSON (default: standard output)");

    std::string tree_path;
    DatasetSpec dataset;
    auto* gen_records = app.add_subcommand("gen-records", "Generate random fuzzy records over a tree's domain");
    gen_records->add_option("--tree", tree_path, "Tree JSON file")->required();
    gen_records->add_option("--count", dataset.record_count, "Number of records")->required();
    gen_records->add_option("--values", dataset.values_per_record, "Values per record")->required();
    gen_records->add_option("--seed", dataset.seed, "Random seed")->required();
    gen_records->add_option("--out", out_path, "Output file (default: standard output)");

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "Time batch defuzzification and report scaling");
    bench->add_option("--trees", bench_args.trees, "Comma-separated tree JSON files")->required()->delimiter(',');
    bench->add_option("--counts", bench_args.counts, "Comma-separated ascending record counts")
        ->required()
        ->delimiter(',');
    bench->add_option("--values", bench_args.values, "Values per record")->required();
    bench->add_option("--seed", bench_args.seed, "Random seed")->required();
    bench->add_option("--reps", bench_args.reps, "Timed repetitions per point")->required()->check(CLI::PositiveNumber);
    bench->add_option("--threads", bench_args.threads, "Worker threads in the timed batch")->check(CLI::PositiveNumber);
    bench->add_option("--csv", bench_args.csv, "Write results as CSV");
    bench->add_option("--svg", bench_args.svg, "Write a total-time chart");
    bench->add_option("--per-record-svg", bench_args.per_record_svg, "Write a per-record-time chart");

    try {
        app.parse(argc, argv);
        if (apply->parsed() && apply_args.matrix.empty() && apply_args.tree.empty())
            throw CLI::RequiredError("--matrix or --tree");
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (validate->parsed()) return run_validate(matrix_path);
        if (tree_cmd->parsed()) {
            const auto tree = tree_from_matrix(load_matrix(matrix_path));
            write_out(out_path, out_path.empty() ? render_tree(tree) : serialize_tree(tree));
            return 0;
        }
        if (apply->parsed()) return run_apply(apply_args);
        if (gen_tree->parsed()) {
            write_out(out_path, serialize_tree(generate_tree(tree_spec, seed)));
            return 0;
        }
        if (gen_records->parsed()) {
            const auto records = generate_records(load_tree(tree_path), dataset);
            std::ostringstream text;
            write_records(text, records);
            write_out(out_path, text.str());
            return 0;
        }
        if (bench->parsed()) return run_bench(bench_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
