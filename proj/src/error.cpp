#include "simvote/error.hpp"

namespace simvote {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::MalformedInput: return "MalformedInput";
        case ErrorKind::DuplicateLabel: return "DuplicateLabel";
        case ErrorKind::NotReflexive: return "NotReflexive";
        case ErrorKind::NotSymmetric: return "NotSymmetric";
        case ErrorKind::ValueOutOfRange: return "ValueOutOfRange";
        case ErrorKind::NotTransitive: return "NotTransitive";
        case ErrorKind::InvariantViolation: return "InvariantViolation";
        case ErrorKind::UnknownLabel: return "UnknownLabel";
        case ErrorKind::EmptyQuery: return "EmptyQuery";
        case ErrorKind::QueryTooLarge: return "QueryTooLarge";
        case ErrorKind::InfeasibleSpec: return "InfeasibleSpec";
        case ErrorKind::InsufficientPoints: return "InsufficientPoints";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace simvote
