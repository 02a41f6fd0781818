#include "simvote/defuzzifier.hpp"

#include <algorithm>
#include <exception>
#include <thread>
#include <unordered_map>

#include "simvote/error.hpp"

namespace simvote {

namespace {

constexpr std::size_t kNoEntry = static_cast<std::size_t>(-1);

// Resolves labels into `query`; returns the first unknown label, if any.
std::optional<std::string> try_resolve(const PartitionTree& tree, const FuzzyRecord& record, LabelSet& query) {
    query = LabelSet(tree.domain().size());
    for (const auto& v : record.values) {
        const auto idx = tree.domain().find(v);
        if (!idx) return v;
        query.insert(*idx);
    }
    return std::nullopt;
}

class PrunedTraversal {
public:
    PrunedTraversal(const PartitionTree& tree, std::vector<TraceEvent>* trace) : tree_(tree), trace_(trace) {}

    void visit(const TreeNode& node, const LabelSet& matched, std::size_t search_size, std::size_t search_entry) {
        const double alpha = tree_.alpha(node.level);
        std::size_t entry = search_entry;
        const bool updated = search_entry != kNoEntry && matched.size() == search_size;
        if (updated) {
            entries_[entry].alpha = alpha;
        } else {
            entry = entries_.size();
            entries_.push_back({matched, alpha});
        }
        if (trace_ != nullptr) trace_->push_back({matched, alpha, updated});

        const std::size_t matched_size = matched.size();
        LabelSet remaining = matched;
        for (const TreeNode& child : node.children) {
            if (!child.members.intersects(remaining)) continue;
            visit(child, matched & child.members, matched_size, entry);
            remaining -= child.members;
            if (remaining.empty()) break;
        }
    }

    ResemblanceTable finish() && {
        std::sort(entries_.begin(), entries_.end(), [](const Resemblance& a, const Resemblance& b) {
            return LabelSet::canonical_less(a.subset, b.subset);
        });
        return ResemblanceTable{std::move(entries_)};
    }

private:
    const PartitionTree& tree_;
    std::vector<TraceEvent>* trace_;
    std::vector<Resemblance> entries_;
};

void visit_all(const TreeNode& node, const PartitionTree& tree, const LabelSet& query,
               std::unordered_map<LabelSet, double, LabelSetHash>& best) {
    LabelSet m = query & node.members;
    if (!m.empty()) {
        const double alpha = tree.alpha(node.level);
        auto [it, inserted] = best.emplace(std::move(m), alpha);
        if (!inserted) it->second = std::max(it->second, alpha);
    }
    for (const TreeNode& child : node.children) visit_all(child, tree, query, best);
}

std::string record_id(const FuzzyRecord& record, std::size_t position) {
    if (record.id) return *record.id;
    return std::to_string(record.line != 0 ? record.line : position + 1);
}

std::string record_location(const FuzzyRecord& record, std::size_t position) {
    if (record.line != 0) return "line " + std::to_string(record.line);
    return "record " + std::to_string(position + 1);
}

}  // namespace

LabelSet resolve_query(const PartitionTree& tree, const FuzzyRecord& record) {
    LabelSet query;
    if (auto unknown = try_resolve(tree, record, query))
        throw Error(ErrorKind::UnknownLabel, "'" + *unknown + "' is not a label of the tree's domain");
    if (query.empty()) throw Error(ErrorKind::EmptyQuery, "record has no values");
    return query;
}

std::optional<double> ResemblanceTable::find(const LabelSet& subset) const {
    for (const auto& e : entries)
        if (e.subset == subset) return e.alpha;
    return std::nullopt;
}

ResemblanceTable extract_resemblances(const PartitionTree& tree, const LabelSet& query, std::vector<TraceEvent>* trace) {
    if (query.universe() != tree.domain().size())
        throw Error(ErrorKind::UnknownLabel, "query is not over the tree's domain");
    if (query.empty()) throw Error(ErrorKind::EmptyQuery, "query has no values");
    PrunedTraversal traversal(tree, trace);
    // The root class is the whole domain, so the root match is the query.
    traversal.visit(tree.root(), query, query.size(), kNoEntry);
    return std::move(traversal).finish();
}

ResemblanceTable extract_resemblances(const PartitionTree& tree, const FuzzyRecord& record) {
    return extract_resemblances(tree, resolve_query(tree, record));
}

ResemblanceTable extract_resemblances_oracle(const PartitionTree& tree, const LabelSet& query) {
    if (query.universe() != tree.domain().size())
        throw Error(ErrorKind::UnknownLabel, "query is not over the tree's domain");
    if (query.empty()) throw Error(ErrorKind::EmptyQuery, "query has no values");
    std::unordered_map<LabelSet, double, LabelSetHash> best;
    visit_all(tree.root(), tree, query, best);
    ResemblanceTable table;
    for (auto& [subset, alpha] : best) table.entries.push_back({subset, alpha});
    std::sort(table.entries.begin(), table.entries.end(), [](const Resemblance& a, const Resemblance& b) {
        return LabelSet::canonical_less(a.subset, b.subset);
    });
    return table;
}

ResemblanceTable extract_resemblances_oracle(const PartitionTree& tree, const FuzzyRecord& record) {
    return extract_resemblances_oracle(tree, resolve_query(tree, record));
}

std::vector<LabelSet> enumerate_query_subsets(const LabelSet& query) {
    const auto members = query.members();
    if (members.size() > kMaxEnumeratedQuery)
        throw Error(ErrorKind::QueryTooLarge, std::to_string(members.size()) + " values exceed the limit of " +
                                                  std::to_string(kMaxEnumeratedQuery) + " for subset enumeration");
    const std::size_t k = members.size();
    std::vector<LabelSet> subsets;
    subsets.reserve((std::size_t{1} << k) - 1);
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
        LabelSet s(query.universe());
        for (std::size_t b = 0; b < k; ++b)
            if ((mask >> b) & 1U) s.insert(members[b]);
        subsets.push_back(std::move(s));
    }
    std::sort(subsets.begin(), subsets.end(), LabelSet::canonical_less);
    return subsets;
}

GradeVector grade(const ResemblanceTable& table, const LabelSet& query) {
    std::vector<double> sums(query.universe(), 0.0);
    for (const auto& e : table.entries) e.subset.for_each([&](std::size_t i) { sums[i] += e.alpha; });
    GradeVector g;
    query.for_each([&](std::size_t i) {
        g.grades.push_back({i, sums[i]});
        g.total += sums[i];
    });
    return g;
}

std::optional<double> VoteDistribution::weight(std::size_t label) const {
    for (const auto& v : votes)
        if (v.label == label) return v.weight;
    return std::nullopt;
}

VoteDistribution normalize(const GradeVector& grades) {
    VoteDistribution d;
    d.votes.reserve(grades.grades.size());
    for (const auto& g : grades.grades) d.votes.push_back({g.label, g.grade / grades.total});
    std::stable_sort(d.votes.begin(), d.votes.end(), [](const Vote& a, const Vote& b) { return a.weight > b.weight; });
    return d;
}

VoteDistribution defuzzify_record(const PartitionTree& tree, const LabelSet& query) {
    return normalize(grade(extract_resemblances(tree, query), query));
}

VoteDistribution defuzzify_record(const PartitionTree& tree, const FuzzyRecord& record) {
    return defuzzify_record(tree, resolve_query(tree, record));
}

std::vector<BatchItem> defuzzify_batch(const PartitionTree& tree, std::span<const FuzzyRecord> records,
                                       const BatchOptions& options) {
    std::vector<BatchItem> out(records.size());
    std::vector<std::exception_ptr> errors(records.size());

    auto process = [&](std::size_t begin, std::size_t end) {
        LabelSet query;
        for (std::size_t i = begin; i < end; ++i) {
            const FuzzyRecord& r = records[i];
            out[i].id = record_id(r, i);
            try {
                if (auto unknown = try_resolve(tree, r, query)) {
                    if (options.on_unknown == UnknownLabelPolicy::Skip) {
                        out[i].outcome = Skipped{*unknown};
                        continue;
                    }
                    throw Error(ErrorKind::UnknownLabel, record_location(r, i) + ": '" + *unknown +
                                                             "' is not a label of the tree's domain");
                }
                if (query.empty()) throw Error(ErrorKind::EmptyQuery, record_location(r, i) + ": record has no values");
                out[i].outcome = defuzzify_record(tree, query);
            } catch (...) {
                errors[i] = std::current_exception();
                return;  // later records in this chunk cannot precede this one
            }
        }
    };

    const unsigned threads = std::max(1U, std::min<unsigned>(options.threads, static_cast<unsigned>(records.size())));
    if (threads <= 1) {
        process(0, records.size());
    } else {
        std::vector<std::jthread> workers;
        const std::size_t chunk = (records.size() + threads - 1) / threads;
        for (std::size_t begin = 0; begin < records.size(); begin += chunk)
            workers.emplace_back(process, begin, std::min(records.size(), begin + chunk));
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace simvote
