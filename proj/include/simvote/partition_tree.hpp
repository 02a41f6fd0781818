#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <vector>

#include "simvote/domain.hpp"
#include "simvote/label_set.hpp"
#include "simvote/similarity.hpp"

namespace simvote {

/// One equivalence class at one level of a partition tree. Children are
/// ordered by their first member and partition `members`.
struct TreeNode {
    LabelSet members;
    std::size_t level = 0;
    std::vector<TreeNode> children;

    bool is_leaf() const noexcept { return children.empty(); }
    friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

/// Zadeh partition tree: nested alpha-cut partitions of a domain, one level per
/// distinct alpha, all root-to-leaf paths of equal length. A class that does
/// not split between two levels is repeated as a single pass-through child.
class PartitionTree {
public:
    /// Validates every structural invariant and puts children in canonical
    /// order. Levels in `root` are recomputed from depth. Throws
    /// InvariantViolation.
    PartitionTree(Domain domain, std::vector<double> level_alphas, TreeNode root);

    const Domain& domain() const noexcept { return domain_; }
    const std::vector<double>& level_alphas() const noexcept { return level_alphas_; }
    std::size_t depth() const noexcept { return level_alphas_.size(); }
    double alpha(std::size_t level) const { return level_alphas_.at(level); }
    const TreeNode& root() const noexcept { return root_; }

    std::size_t node_count() const noexcept;

    /// Node classes at one level, ordered by first member.
    Partition level_classes(std::size_t level) const;

    friend bool operator==(const PartitionTree&, const PartitionTree&) = default;

private:
    Domain domain_;
    std::vector<double> level_alphas_;
    TreeNode root_;
};

/// One level per distinct similarity value, root at the minimum. Throws
/// NotTransitive if some alpha-cut is not an equivalence relation.
PartitionTree build_partition_tree(const SimilarityMatrix& m);

/// s(x,y) = alpha of the deepest level at which x and y share a class.
SimilarityMatrix induced_similarity(const PartitionTree& tree);

/// JSON tree file: {"labels", "level_alphas", "root"} with nodes
/// {"members", "children"}; two-space indentation, deterministic.
std::string serialize_tree(const PartitionTree& tree);

/// Throws MalformedInput on bad JSON or schema, InvariantViolation when the
/// described structure is not a partition tree.
PartitionTree parse_tree(std::istream& in);
PartitionTree parse_tree(const std::string& text);

/// Indented text rendering, one node per line: "[alpha] {members}".
std::string render_tree(const PartitionTree& tree);

}  // namespace simvote
