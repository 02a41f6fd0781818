#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace simvote {

enum class ErrorKind {
    MalformedInput,
    DuplicateLabel,
    NotReflexive,
    NotSymmetric,
    ValueOutOfRange,
    NotTransitive,
    InvariantViolation,
    UnknownLabel,
    EmptyQuery,
    QueryTooLarge,
    InfeasibleSpec,
    InsufficientPoints,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every library failure is reported as an Error carrying its kind; the
/// message names the offending cell, label, or line.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace simvote
