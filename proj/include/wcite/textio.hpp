#pragma once

// Number formatting shared by the writers.

#include <string>

namespace wcite {

// Shortest decimal representation that round-trips to the same double.
std::string format_shortest(double value);

// Fixed notation with `decimals` digits. Values that round to zero are
// printed without a sign so outputs never contain "-0.00".
std::string format_fixed(double value, int decimals);

} // namespace wcite
