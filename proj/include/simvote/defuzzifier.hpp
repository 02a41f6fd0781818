#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "simvote/label_set.hpp"
#include "simvote/partition_tree.hpp"

namespace simvote {

/// One imprecise observation: a set of candidate labels. Duplicates are
/// collapsed when the record is resolved against a tree.
struct FuzzyRecord {
    std::optional<std::string> id;
    std::vector<std::string> values;
    std::size_t line = 0;  // source line, 0 when not read from a file
};

/// Maps record labels onto the tree's domain. Throws UnknownLabel or EmptyQuery.
LabelSet resolve_query(const PartitionTree& tree, const FuzzyRecord& record);

/// A subset of the query that co-occurs in one tree class, with the highest
/// alpha at which it does.
struct Resemblance {
    LabelSet subset;
    double alpha = 0.0;

    friend bool operator==(const Resemblance&, const Resemblance&) = default;
};

/// Subsets of resemblance in canonical order (size descending, then
/// lexicographic in domain order). Keys are unique.
struct ResemblanceTable {
    std::vector<Resemblance> entries;

    std::optional<double> find(const LabelSet& subset) const;
    friend bool operator==(const ResemblanceTable&, const ResemblanceTable&) = default;
};

/// One step of the traversal in visiting order. `updated` is set when the
/// node matched the same subset as its parent and raised that entry's alpha.
struct TraceEvent {
    LabelSet subset;
    double alpha = 0.0;
    bool updated = false;
};

/// Pruned preorder traversal: a node's match is the query restricted to its
/// class; children disjoint from the match are skipped and sibling iteration
/// stops once the match is covered. A match equal to the parent's raises the
/// parent's entry, a smaller one adds a new entry.
ResemblanceTable extract_resemblances(const PartitionTree& tree, const LabelSet& query,
                                      std::vector<TraceEvent>* trace = nullptr);
ResemblanceTable extract_resemblances(const PartitionTree& tree, const FuzzyRecord& record);

/// Visits every node without pruning and keeps the maximum alpha per distinct
/// non-empty intersection.
ResemblanceTable extract_resemblances_oracle(const PartitionTree& tree, const LabelSet& query);
ResemblanceTable extract_resemblances_oracle(const PartitionTree& tree, const FuzzyRecord& record);

inline constexpr std::size_t kMaxEnumeratedQuery = 20;

/// All 2^k - 1 non-empty subsets of the query in canonical order. Throws
/// QueryTooLarge above kMaxEnumeratedQuery labels.
std::vector<LabelSet> enumerate_query_subsets(const LabelSet& query);

struct LabelGrade {
    std::size_t label = 0;
    double grade = 0.0;
};

/// Per-label alpha sums, in domain order of the query labels.
struct GradeVector {
    std::vector<LabelGrade> grades;
    double total = 0.0;
};

GradeVector grade(const ResemblanceTable& table, const LabelSet& query);

struct Vote {
    std::size_t label = 0;
    double weight = 0.0;

    friend bool operator==(const Vote&, const Vote&) = default;
};

/// Defuzzified record: weights summing to 1, ordered by descending weight and
/// then domain order.
struct VoteDistribution {
    std::vector<Vote> votes;

    std::optional<double> weight(std::size_t label) const;
    friend bool operator==(const VoteDistribution&, const VoteDistribution&) = default;
};

VoteDistribution normalize(const GradeVector& grades);

VoteDistribution defuzzify_record(const PartitionTree& tree, const LabelSet& query);
VoteDistribution defuzzify_record(const PartitionTree& tree, const FuzzyRecord& record);

enum class UnknownLabelPolicy { Error, Skip };

struct Skipped {
    std::string label;
    friend bool operator==(const Skipped&, const Skipped&) = default;
};

struct BatchItem {
    std::string id;
    std::variant<VoteDistribution, Skipped> outcome;
};

struct BatchOptions {
    UnknownLabelPolicy on_unknown = UnknownLabelPolicy::Error;
    unsigned threads = 1;
};

/// Defuzzifies records in input order. Records without an id get their line
/// number (or 1-based position when line is 0). With Error policy the first
/// bad record in input order aborts the batch; empty records always do.
std::vector<BatchItem> defuzzify_batch(const PartitionTree& tree, std::span<const FuzzyRecord> records,
                                       const BatchOptions& options = {});

}  // namespace simvote
