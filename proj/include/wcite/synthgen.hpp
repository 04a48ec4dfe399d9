#pragma once

// Seeded synthetic corpora with known ground truth.
//
// Randomness comes from a 64-bit linear congruential generator with Knuth's
// MMIX constants,
//
//     x[n+1] = 6364136223846793005 * x[n] + 1442695040888963407   (mod 2^64)
//
// and uniforms in [0, 1) are the top 53 bits of each output times 2^-53.
// All distributions below are derived from those uniforms with closed-form
// inverse CDFs, so a GenSpec reproduces the same corpus on any platform.
//
// Draw order for each article, in index order: publication year, citation
// count, then per citation: age, citing journal, and (first time a
// journal-year is seen, for scored journals only) its Article Influence.
// Unscored journals are chosen up front, one Bernoulli draw per journal.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wcite/corpus.hpp"

namespace wcite {

class Lcg64 {
public:
    explicit Lcg64(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }  // [0, 1)
    // Uniform integer in [lo, hi].
    long long uniform_int(long long lo, long long hi);
    bool bernoulli(double p) { return uniform() < p; }

private:
    std::linear_congruential_engine<std::uint64_t, 6364136223846793005ULL, 1442695040888963407ULL, 0> engine_;
};

struct UniformAi {
    double lo = 0.1;
    double hi = 2.0;
};
struct TwoPointAi {
    double low = 0.1;
    double high = 5.0;
    double p_high = 0.1;
};
using AiDistribution = std::variant<UniformAi, TwoPointAi>;

struct FixedCount {
    long long n = 5;
};
struct UniformCount {
    long long lo = 0;
    long long hi = 10;
};
// Failures before the first success, p = 1 / (1 + mean).
struct GeometricCount {
    double mean = 5.0;
};
using CountDistribution = std::variant<FixedCount, UniformCount, GeometricCount>;

struct GenSpec {
    std::uint64_t seed = 1;
    int n_articles = 100;
    int n_journals = 20;
    int pub_year_min = 1998;
    int pub_year_max = 2007;
    double lambda_true = 0.117;
    AiDistribution ai = UniformAi{};
    CountDistribution citations = GeometricCount{};
    // Largest citation age; ages follow exp(-lambda*age) truncated here.
    // Citation years never exceed 9999 regardless.
    std::optional<int> max_age;
    // Probability that a journal has no score rows at all.
    double unscored_fraction = 0.0;
};

// Throws InvalidSpec.
void validate(const GenSpec& spec);

// "uniform:LO:HI" | "two-point:LOW:HIGH:P".
AiDistribution parse_ai_distribution(std::string_view text);
// "fixed:N" | "uniform:LO:HI" | "geometric:MEAN".
CountDistribution parse_count_distribution(std::string_view text);

struct Generated {
    std::vector<CitationEvent> events;      // generation order
    std::vector<JournalYearScore> scores;   // sorted by (journal, year)
    std::vector<ArticleId> universe;        // every generated article
    // Per cited article, accumulated by direct summation during generation
    // under the zero missing-score policy with decay lambda = lambda_true.
    std::vector<ArticleScore> ground_truth;
    Corpus corpus;
};

// Throws InvalidSpec.
Generated generate(const GenSpec& spec);

// Writes events.tsv, scores.tsv, ground_truth.tsv (score-table format with
// exact reals) and universe.txt into `dir`, creating it if needed.
void write_generated(const std::filesystem::path& dir, const Generated& gen,
                     char delimiter = '\t');

} // namespace wcite
