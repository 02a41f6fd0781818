#include "simvote/datagen.hpp"

#include <algorithm>
#include <cmath>

#include "simvote/error.hpp"
#include "simvote/similarity.hpp"

namespace simvote {

namespace {

std::string pad(std::size_t value, std::size_t width) {
    std::string s = std::to_string(value);
    if (s.size() < width) s.insert(0, width - s.size(), '0');
    return s;
}

void validate(const TreeSpec& spec) {
    const auto fail = [](const std::string& msg) { throw Error(ErrorKind::InfeasibleSpec, msg); };
    if (spec.domain_size == 0) fail("domain size must be at least 1");
    if (spec.level_alphas.empty()) fail("at least one level is required");
    if (spec.level_alphas.size() != spec.branching.size())
        fail("got " + std::to_string(spec.level_alphas.size()) + " alphas but " +
             std::to_string(spec.branching.size()) + " branching entries");
    for (std::size_t l = 0; l < spec.level_alphas.size(); ++l) {
        const double a = spec.level_alphas[l];
        if (!(a >= 0.0 && a <= 1.0)) fail("alpha outside [0,1]");
        if (l > 0 && !(a - spec.level_alphas[l - 1] > kAlphaTolerance)) fail("alphas must be strictly increasing");
    }
    if (std::abs(spec.level_alphas.back() - 1.0) > kAlphaTolerance) fail("deepest alpha must be 1.0");
    if (spec.branching.front() != 1) fail("the root level must have exactly one class");
    for (std::size_t l = 1; l < spec.branching.size(); ++l)
        if (spec.branching[l] < spec.branching[l - 1]) fail("branching must be non-decreasing");
    if (spec.branching.back() != spec.domain_size)
        fail("deepest level needs " + std::to_string(spec.domain_size) + " singleton classes, got " +
             std::to_string(spec.branching.back()));
}

using Classes = std::vector<std::vector<std::size_t>>;

Classes split_level(const Classes& prev, std::size_t target, SplitMix64& rng) {
    std::vector<std::size_t> parts(prev.size(), 1);
    for (std::size_t extra = target - prev.size(); extra > 0; --extra) {
        std::size_t best = prev.size();
        std::size_t best_part = 0;
        for (std::size_t c = 0; c < prev.size(); ++c) {
            if (parts[c] >= prev[c].size()) continue;
            const std::size_t largest = (prev[c].size() + parts[c] - 1) / parts[c];
            if (largest > best_part) {
                best = c;
                best_part = largest;
            }
        }
        if (best == prev.size())
            throw Error(ErrorKind::InfeasibleSpec, "cannot reach " + std::to_string(target) + " classes");
        ++parts[best];
    }

    Classes next;
    next.reserve(target);
    for (std::size_t c = 0; c < prev.size(); ++c) {
        if (parts[c] == 1) {
            next.push_back(prev[c]);
            continue;
        }
        std::vector<std::size_t> members = prev[c];
        for (std::size_t i = members.size() - 1; i > 0; --i) std::swap(members[i], members[rng.bounded(i + 1)]);
        const std::size_t base = members.size() / parts[c];
        const std::size_t larger = members.size() % parts[c];
        std::size_t pos = 0;
        for (std::size_t p = 0; p < parts[c]; ++p) {
            const std::size_t len = base + (p < larger ? 1 : 0);
            std::vector<std::size_t> chunk(members.begin() + static_cast<std::ptrdiff_t>(pos),
                                           members.begin() + static_cast<std::ptrdiff_t>(pos + len));
            std::sort(chunk.begin(), chunk.end());
            next.push_back(std::move(chunk));
            pos += len;
        }
    }
    std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return next;
}

TreeNode assemble(const std::vector<Partition>& levels, const LabelSet& members, std::size_t level) {
    TreeNode node{members, level, {}};
    if (level + 1 < levels.size())
        for (const auto& cls : levels[level + 1])
            if (cls.is_subset_of(members)) node.children.push_back(assemble(levels, cls, level + 1));
    return node;
}

}  // namespace

std::uint64_t SplitMix64::bounded(std::uint64_t bound) noexcept {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
        const std::uint64_t r = next();
        if (r >= threshold) return r % bound;
    }
}

TreeSpec default_tree_spec(std::size_t levels, std::size_t domain_size) {
    TreeSpec spec;
    spec.domain_size = domain_size;
    if (levels <= 1) {
        spec.level_alphas = {1.0};
        spec.branching = {1};
        return spec;
    }
    for (std::size_t l = 0; l < levels; ++l) {
        spec.level_alphas.push_back(static_cast<double>(l) / static_cast<double>(levels - 1));
        spec.branching.push_back(l + 1 == levels ? domain_size : std::min(domain_size, std::size_t{1} << l));
    }
    return spec;
}

std::vector<std::string> generated_labels(std::size_t domain_size) {
    const std::size_t width = std::max<std::size_t>(2, std::to_string(domain_size == 0 ? 0 : domain_size - 1).size());
    std::vector<std::string> labels;
    labels.reserve(domain_size);
    for (std::size_t i = 0; i < domain_size; ++i) labels.push_back("v" + pad(i, width));
    return labels;
}

PartitionTree generate_tree(const TreeSpec& spec, std::uint64_t seed) {
    validate(spec);
    SplitMix64 rng(seed);
    const std::size_t n = spec.domain_size;

    Classes current(1);
    for (std::size_t i = 0; i < n; ++i) current.front().push_back(i);
    std::vector<Partition> levels;
    auto record_level = [&](const Classes& classes) {
        Partition p;
        for (const auto& cls : classes) {
            LabelSet s(n);
            for (std::size_t m : cls) s.insert(m);
            p.push_back(std::move(s));
        }
        levels.push_back(std::move(p));
    };
    record_level(current);
    for (std::size_t l = 1; l < spec.branching.size(); ++l) {
        current = split_level(current, spec.branching[l], rng);
        record_level(current);
    }
    TreeNode root = assemble(levels, levels.front().front(), 0);
    return PartitionTree(Domain(generated_labels(n)), spec.level_alphas, std::move(root));
}

std::vector<FuzzyRecord> generate_records(const PartitionTree& tree, const DatasetSpec& spec) {
    const std::size_t n = tree.domain().size();
    const std::size_t k = spec.values_per_record;
    if (spec.record_count == 0) throw Error(ErrorKind::InfeasibleSpec, "record count must be at least 1");
    if (k == 0 || k > n)
        throw Error(ErrorKind::InfeasibleSpec, "values per record must be in [1, " + std::to_string(n) + "], got " +
                                                   std::to_string(k));
    const std::size_t id_width = std::max<std::size_t>(6, std::to_string(spec.record_count).size());

    std::vector<FuzzyRecord> records(spec.record_count);
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < spec.record_count; ++i) {
        SplitMix64 rng(SplitMix64::at(spec.seed, i));
        for (std::size_t j = 0; j < n; ++j) pool[j] = j;
        for (std::size_t j = 0; j < k; ++j) std::swap(pool[j], pool[j + rng.bounded(n - j)]);
        std::sort(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));

        FuzzyRecord& r = records[i];
        r.id = "r" + pad(i + 1, id_width);
        r.values.reserve(k);
        for (std::size_t j = 0; j < k; ++j) r.values.push_back(tree.domain().label(pool[j]));
    }
    return records;
}

}  // namespace simvote
