#include "simvote/format.hpp"

#include <array>
#include <charconv>

namespace simvote {

std::string format_decimal(double value) {
    std::array<char, 32> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), end);
}

std::string format_alpha(double value) {
    std::string s = format_decimal(value);
    if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
    return s;
}

}  // namespace simvote
