#pragma once

#include <string>

namespace simvote {

/// Shortest decimal text that parses back to exactly the same double.
std::string format_decimal(double value);

/// Like format_decimal but always shows a fractional part ("1.0", "0.4").
std::string format_alpha(double value);

}  // namespace simvote
