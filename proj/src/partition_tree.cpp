#include "simvote/partition_tree.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "simvote/error.hpp"
#include "simvote/format.hpp"

namespace simvote {

namespace {

void validate_node(TreeNode& node, std::size_t level, const std::vector<double>& alphas, const Domain& domain) {
    node.level = level;
    if (node.members.universe() != domain.size())
        throw Error(ErrorKind::InvariantViolation, "node class is not over the tree's domain");
    if (node.members.empty()) throw Error(ErrorKind::InvariantViolation, "empty class at level " + std::to_string(level));
    const bool deepest = level + 1 == alphas.size();
    if (deepest && !node.children.empty())
        throw Error(ErrorKind::InvariantViolation,
                    "class " + domain.format_set(node.members) + " at the deepest level has children");
    if (!deepest && node.children.empty())
        throw Error(ErrorKind::InvariantViolation, "class " + domain.format_set(node.members) + " at level " +
                                                       std::to_string(level) + " has no children");
    LabelSet covered(domain.size());
    for (TreeNode& child : node.children) {
        validate_node(child, level + 1, alphas, domain);
        if (covered.intersects(child.members))
            throw Error(ErrorKind::InvariantViolation, "sibling classes overlap on " +
                                                           domain.format_set(covered & child.members) + " under " +
                                                           domain.format_set(node.members));
        covered |= child.members;
    }
    if (!deepest && !(covered == node.members))
        throw Error(ErrorKind::InvariantViolation, "children of " + domain.format_set(node.members) +
                                                       " do not partition it");
    std::sort(node.children.begin(), node.children.end(),
              [](const TreeNode& a, const TreeNode& b) { return a.members.first() < b.members.first(); });
}

std::size_t count_nodes(const TreeNode& node) {
    std::size_t n = 1;
    for (const auto& c : node.children) n += count_nodes(c);
    return n;
}

void collect_level(const TreeNode& node, std::size_t level, Partition& out) {
    if (node.level == level) {
        out.push_back(node.members);
        return;
    }
    for (const auto& c : node.children) collect_level(c, level, out);
}

TreeNode build_node(const LabelSet& members, std::size_t level, const std::vector<Partition>& cuts) {
    TreeNode node{members, level, {}};
    if (level + 1 < cuts.size())
        for (const LabelSet& cls : cuts[level + 1])
            if (cls.is_subset_of(members)) node.children.push_back(build_node(cls, level + 1, cuts));
    return node;
}

void induce(const TreeNode& node, const std::vector<double>& alphas, std::vector<double>& values, std::size_t n) {
    const double a = alphas[node.level];
    const auto members = node.members.members();
    for (std::size_t x : members)
        for (std::size_t y : members) values[x * n + y] = a;
    for (const auto& c : node.children) induce(c, alphas, values, n);
}

nlohmann::ordered_json node_to_json(const TreeNode& node, const Domain& domain) {
    nlohmann::ordered_json j;
    auto members = nlohmann::ordered_json::array();
    node.members.for_each([&](std::size_t i) { members.push_back(domain.label(i)); });
    j["members"] = std::move(members);
    if (!node.children.empty()) {
        auto children = nlohmann::ordered_json::array();
        for (const auto& c : node.children) children.push_back(node_to_json(c, domain));
        j["children"] = std::move(children);
    }
    return j;
}

TreeNode node_from_json(const nlohmann::json& j, const Domain& domain, std::size_t depth, std::size_t max_depth) {
    if (depth >= max_depth)
        throw Error(ErrorKind::InvariantViolation, "tree is deeper than level_alphas allows");
    if (!j.is_object() || !j.contains("members") || !j["members"].is_array())
        throw Error(ErrorKind::MalformedInput, "node must be an object with a \"members\" array");
    TreeNode node{LabelSet(domain.size()), depth, {}};
    for (const auto& m : j["members"]) {
        if (!m.is_string()) throw Error(ErrorKind::MalformedInput, "node members must be strings");
        const auto name = m.get<std::string>();
        const auto idx = domain.find(name);
        if (!idx) throw Error(ErrorKind::InvariantViolation, "node member '" + name + "' is not a domain label");
        if (node.members.contains(*idx))
            throw Error(ErrorKind::InvariantViolation, "node lists '" + name + "' twice");
        node.members.insert(*idx);
    }
    if (j.contains("children")) {
        if (!j["children"].is_array()) throw Error(ErrorKind::MalformedInput, "\"children\" must be an array");
        for (const auto& c : j["children"]) node.children.push_back(node_from_json(c, domain, depth + 1, max_depth));
    }
    return node;
}

void render(const TreeNode& node, const PartitionTree& tree, std::string& out) {
    out.append(node.level * 2, ' ');
    out += "[" + format_alpha(tree.alpha(node.level)) + "] " + tree.domain().format_set(node.members) + "\n";
    for (const auto& c : node.children) render(c, tree, out);
}

}  // namespace

PartitionTree::PartitionTree(Domain domain, std::vector<double> level_alphas, TreeNode root)
    : domain_(std::move(domain)), level_alphas_(std::move(level_alphas)), root_(std::move(root)) {
    if (domain_.size() == 0) throw Error(ErrorKind::InvariantViolation, "tree domain is empty");
    if (level_alphas_.empty()) throw Error(ErrorKind::InvariantViolation, "tree has no levels");
    for (std::size_t l = 0; l < level_alphas_.size(); ++l) {
        const double a = level_alphas_[l];
        if (!(a >= 0.0 && a <= 1.0))
            throw Error(ErrorKind::InvariantViolation, "level alpha " + format_decimal(a) + " is outside [0,1]");
        if (l > 0 && !(a - level_alphas_[l - 1] > kAlphaTolerance))
            throw Error(ErrorKind::InvariantViolation, "level alphas must be strictly increasing");
    }
    if (std::abs(level_alphas_.back() - 1.0) > kAlphaTolerance)
        throw Error(ErrorKind::InvariantViolation, "deepest level alpha must be 1.0");
    if (!(root_.members == LabelSet::full(domain_.size())))
        throw Error(ErrorKind::InvariantViolation, "root class must be the entire domain");
    validate_node(root_, 0, level_alphas_, domain_);
}

std::size_t PartitionTree::node_count() const noexcept { return count_nodes(root_); }

Partition PartitionTree::level_classes(std::size_t level) const {
    Partition out;
    collect_level(root_, level, out);
    return out;
}

PartitionTree build_partition_tree(const SimilarityMatrix& m) {
    const auto levels = distinct_levels(m);
    std::vector<Partition> cuts;
    cuts.reserve(levels.size());
    for (double a : levels) cuts.push_back(alpha_cut(m, a));
    if (cuts.front().size() != 1)
        throw Error(ErrorKind::InvariantViolation, "cut at the minimum level is not a single class");
    for (std::size_t l = 1; l < cuts.size(); ++l) {
        for (const LabelSet& cls : cuts[l]) {
            const auto parents = std::count_if(cuts[l - 1].begin(), cuts[l - 1].end(),
                                               [&](const LabelSet& p) { return cls.is_subset_of(p); });
            if (parents != 1)
                throw Error(ErrorKind::NotTransitive, "class " + m.domain().format_set(cls) + " at alpha " +
                                                          format_alpha(levels[l]) + " is not nested in one class");
        }
    }
    TreeNode root = build_node(cuts.front().front(), 0, cuts);
    return PartitionTree(m.domain(), levels, std::move(root));
}

SimilarityMatrix induced_similarity(const PartitionTree& tree) {
    const std::size_t n = tree.domain().size();
    std::vector<double> values(n * n, 0.0);
    induce(tree.root(), tree.level_alphas(), values, n);
    return SimilarityMatrix(tree.domain(), std::move(values));
}

std::string serialize_tree(const PartitionTree& tree) {
    nlohmann::ordered_json j;
    j["labels"] = tree.domain().labels();
    j["level_alphas"] = tree.level_alphas();
    j["root"] = node_to_json(tree.root(), tree.domain());
    return j.dump(2) + "\n";
}

PartitionTree parse_tree(std::istream& in) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::MalformedInput, std::string("tree file is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("labels") || !j.contains("level_alphas") || !j.contains("root"))
        throw Error(ErrorKind::MalformedInput, "tree file needs \"labels\", \"level_alphas\", and \"root\"");
    std::vector<std::string> labels;
    std::vector<double> alphas;
    try {
        labels = j["labels"].get<std::vector<std::string>>();
        alphas = j["level_alphas"].get<std::vector<double>>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::MalformedInput, std::string("bad labels or level_alphas: ") + e.what());
    }
    Domain domain;
    try {
        domain = Domain(std::move(labels));
    } catch (const Error& e) {
        throw Error(ErrorKind::MalformedInput, e.what());
    }
    if (alphas.empty()) throw Error(ErrorKind::InvariantViolation, "level_alphas is empty");
    TreeNode root = node_from_json(j["root"], domain, 0, alphas.size());
    return PartitionTree(std::move(domain), std::move(alphas), std::move(root));
}

PartitionTree parse_tree(const std::string& text) {
    std::istringstream in(text);
    return parse_tree(in);
}

std::string render_tree(const PartitionTree& tree) {
    std::string out;
    render(tree.root(), tree, out);
    return out;
}

}  // namespace simvote
