#pragma once

#include <span>

namespace wcite {

// Ordinary least squares fit of y = intercept + slope * x.
struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;  // in [0, 1]; 0 when y has no variance
};

// Two-pass centered sums. Throws DegenerateX when all x are equal and
// std::invalid_argument on size mismatch or fewer than two points.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

} // namespace wcite
