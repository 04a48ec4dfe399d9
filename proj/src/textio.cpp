#include "wcite/textio.hpp"

#include <cmath>

#include <fmt/format.h>

namespace wcite {

std::string format_shortest(double value) {
    return fmt::format("{}", value);
}

std::string format_fixed(double value, int decimals) {
    std::string s = fmt::format("{:.{}f}", value, decimals);
    if (!s.empty() && s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos)
        s.erase(0, 1);
    return s;
}

} // namespace wcite
