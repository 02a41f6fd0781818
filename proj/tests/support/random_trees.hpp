#pragma once

// Test-only random generators. Independent of the datagen module: classes are
// refined by random assignment with unbalanced sizes and random alpha grids.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "simvote/partition_tree.hpp"

namespace simvote::testing {

inline std::size_t uniform(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

/// Random uniform-depth tree over labels "L0".."L{n-1}". Deepest classes are
/// singletons unless `multi_member_leaves` is set.
inline PartitionTree random_tree(std::mt19937_64& rng, std::size_t n, std::size_t max_levels = 6,
                                 bool multi_member_leaves = false) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("L" + std::to_string(i));

    const std::size_t levels = n == 1 ? 1 : 2 + uniform(rng, max_levels - 1);
    // Distinct alphas from a 0.05 grid below 1.0, plus 1.0 at the bottom.
    std::vector<int> grid(20);
    for (int i = 0; i < 20; ++i) grid[static_cast<std::size_t>(i)] = i;
    std::shuffle(grid.begin(), grid.end(), rng);
    std::vector<int> picked(grid.begin(), grid.begin() + static_cast<std::ptrdiff_t>(levels - 1));
    std::sort(picked.begin(), picked.end());
    std::vector<double> alphas;
    for (int g : picked) alphas.push_back(g * 0.05);
    alphas.push_back(1.0);

    std::vector<std::vector<std::vector<std::size_t>>> partitions(levels);
    partitions[0].push_back({});
    for (std::size_t i = 0; i < n; ++i) partitions[0][0].push_back(i);
    for (std::size_t l = 1; l < levels; ++l) {
        const bool deepest = l + 1 == levels;
        for (const auto& cls : partitions[l - 1]) {
            if (deepest && !multi_member_leaves) {
                for (std::size_t m : cls) partitions[l].push_back({m});
                continue;
            }
            const std::size_t parts = 1 + uniform(rng, std::min<std::size_t>(cls.size(), 4));
            std::vector<std::vector<std::size_t>> split(parts);
            for (std::size_t m : cls) split[uniform(rng, parts)].push_back(m);
            for (auto& s : split)
                if (!s.empty()) partitions[l].push_back(std::move(s));
        }
    }

    auto to_set = [n](const std::vector<std::size_t>& cls) {
        LabelSet s(n);
        for (std::size_t m : cls) s.insert(m);
        return s;
    };
    std::function<TreeNode(const std::vector<std::size_t>&, std::size_t)> build =
        [&](const std::vector<std::size_t>& cls, std::size_t level) {
            TreeNode node{to_set(cls), level, {}};
            if (level + 1 < levels)
                for (const auto& child : partitions[level + 1])
                    if (to_set(child).is_subset_of(node.members)) node.children.push_back(build(child, level + 1));
            return node;
        };
    TreeNode root = build(partitions[0][0], 0);
    return PartitionTree(Domain(labels), alphas, std::move(root));
}

/// Uniform random subset of size k of {0..n-1}.
inline LabelSet random_query(std::mt19937_64& rng, std::size_t n, std::size_t k) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    LabelSet q(n);
    for (std::size_t i = 0; i < k; ++i) q.insert(idx[i]);
    return q;
}

}  // namespace simvote::testing
