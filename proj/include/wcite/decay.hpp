#pragma once

// Citation-age weighting: w(interval) = exp(-lambda * interval), and the
// log-linear least-squares estimate of lambda from a citation-age histogram.

#include <cstddef>
#include <map>
#include <optional>

#include "wcite/corpus.hpp"

namespace wcite {

inline constexpr double kDefaultDecayLambda = 0.117;

class DecayParams {
public:
    DecayParams() = default;
    // Throws std::invalid_argument unless lambda > 0 and finite.
    explicit DecayParams(double lambda);

    double lambda() const noexcept { return lambda_; }

private:
    double lambda_ = kDefaultDecayLambda;
};

// exp(-lambda * interval_years). Callers clamp negative intervals first.
double weight(int interval_years, const DecayParams& params);

// Citation counts by age in years. Counts are real so that noiseless
// model curves can be fitted exactly.
struct AgeHistogram {
    std::map<int, double> counts;
};

// Histogram of (citation year - publication year) over all events, with
// negative ages clamped to 0 the same way scoring clamps them.
AgeHistogram age_histogram(const Corpus& corpus);

struct DecayFit {
    double lambda = 0.0;     // negated slope of ln(count) on age; may be <= 0
    double r2 = 0.0;         // coefficient of determination of the log-linear fit
    double intercept = 0.0;  // ln-amplitude, reported for diagnostics only
    int start_age = 0;
    std::size_t points = 0;
};

// Fit ln(count) = a - lambda * age over ages >= start_age with count > 0.
// With no start_age the age of the largest count is used (earliest age on
// ties). Throws InsufficientData when fewer than two points qualify.
DecayFit fit_lambda(const AgeHistogram& hist, std::optional<int> start_age = std::nullopt);

} // namespace wcite
