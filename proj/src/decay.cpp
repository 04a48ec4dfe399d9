#include "wcite/decay.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "wcite/errors.hpp"
#include "wcite/regression.hpp"

namespace wcite {

DecayParams::DecayParams(double lambda) : lambda_(lambda) {
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw std::invalid_argument("decay lambda must be positive and finite");
}

double weight(int interval_years, const DecayParams& params) {
    return std::exp(-params.lambda() * static_cast<double>(interval_years));
}

AgeHistogram age_histogram(const Corpus& corpus) {
    AgeHistogram h;
    for (const auto& e : corpus.events()) h.counts[std::max(0, e.interval())] += 1.0;
    return h;
}

DecayFit fit_lambda(const AgeHistogram& hist, std::optional<int> start_age) {
    DecayFit fit;
    if (start_age) {
        fit.start_age = *start_age;
    } else {
        double best = 0.0;
        bool any = false;
        for (const auto& [age, count] : hist.counts) {
            if (!any || count > best) {
                best = count;
                fit.start_age = age;
                any = true;
            }
        }
    }

    std::vector<double> ages, logs;
    for (auto it = hist.counts.lower_bound(fit.start_age); it != hist.counts.end(); ++it) {
        if (it->first < 0) throw std::invalid_argument("age histogram has a negative age");
        if (it->second < 0.0) throw std::invalid_argument("age histogram has a negative count");
        if (it->second > 0.0) {
            ages.push_back(static_cast<double>(it->first));
            logs.push_back(std::log(it->second));
        }
    }
    fit.points = ages.size();
    if (fit.points < 2)
        throw InsufficientData("fit_lambda: need at least two ages with positive counts at or after age " +
                               std::to_string(fit.start_age) + ", found " + std::to_string(fit.points));

    const LineFit line = fit_line(ages, logs);
    fit.lambda = line.slope == 0.0 ? 0.0 : -line.slope;
    fit.r2 = line.r2;
    fit.intercept = line.intercept;
    return fit;
}

} // namespace wcite
