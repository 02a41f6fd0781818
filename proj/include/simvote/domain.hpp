#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "simvote/label_set.hpp"

namespace simvote {

/// Throws MalformedInput for empty labels, surrounding whitespace, commas, or
/// line breaks.
void validate_label(std::string_view label);

/// Ordered, duplicate-free list of categorical labels. Position in the list is
/// the canonical order used everywhere else.
class Domain {
public:
    Domain() = default;
    /// Throws DuplicateLabel or MalformedInput.
    explicit Domain(std::vector<std::string> labels);

    std::size_t size() const noexcept { return labels_.size(); }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    std::optional<std::size_t> find(std::string_view label) const;

    /// Renders "{a, b, c}" in domain order.
    std::string format_set(const LabelSet& set) const;

    friend bool operator==(const Domain& a, const Domain& b) { return a.labels_ == b.labels_; }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace simvote
