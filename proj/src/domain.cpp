#include "simvote/domain.hpp"

#include "simvote/error.hpp"

namespace simvote {

void validate_label(std::string_view label) {
    if (label.empty()) throw Error(ErrorKind::MalformedInput, "empty label");
    if (label.front() == ' ' || label.front() == '\t' || label.back() == ' ' || label.back() == '\t')
        throw Error(ErrorKind::MalformedInput, "label '" + std::string(label) + "' has surrounding whitespace");
    if (label.find_first_of(",\r\n") != std::string_view::npos)
        throw Error(ErrorKind::MalformedInput, "label '" + std::string(label) + "' contains a comma or line break");
}

Domain::Domain(std::vector<std::string> labels) : labels_(std::move(labels)) {
    index_.reserve(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        validate_label(labels_[i]);
        if (!index_.emplace(labels_[i], i).second)
            throw Error(ErrorKind::DuplicateLabel, "label '" + labels_[i] + "' appears more than once");
    }
}

std::optional<std::size_t> Domain::find(std::string_view label) const {
    // Heterogeneous lookup on unordered_map needs C++20 library support that
    // libstdc++ 11 lacks.
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::string Domain::format_set(const LabelSet& set) const {
    std::string out = "{";
    bool first = true;
    set.for_each([&](std::size_t i) {
        if (!first) out += ", ";
        out += labels_[i];
        first = false;
    });
    out += "}";
    return out;
}

}  // namespace simvote
