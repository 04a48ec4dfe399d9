#pragma once

// Corpus summary statistics, CC-vs-CW regression, popularity/prestige
// quadrants and the top-N report tables.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wcite/corpus.hpp"
#include "wcite/crsm.hpp"

namespace wcite {

struct CorpusSummary {
    long long total_articles = 0;
    long long cited_articles = 0;
    double cited_ratio = 0.0;  // fraction, not percent
    long long total_citations = 0;
    double mean_citations_per_cited_article = 0.0;
    long long citing_articles = 0;
    double cited_per_citing = 0.0;
    long long citing_journals = 0;
};

// Derive the ratios from raw counts. Ratios with a zero denominator are 0.
CorpusSummary summarize_counts(long long total_articles, long long cited_articles,
                               long long total_citations, long long citing_articles,
                               long long citing_journals);

// `universe` is every article of the collection, cited or not. Throws
// CitedArticleOutsideUniverse.
CorpusSummary corpus_summary(const Corpus& corpus, std::span<const ArticleId> universe);

// R^2 of the OLS fit of y on x. Throws DegenerateX (all x equal) and
// std::invalid_argument (fewer than two points).
double linear_r2(std::span<const std::pair<double, double>> points);

// Mean of the two central values for even sizes. Throws EmptyInput.
double median(std::vector<double> values);

enum class Quadrant { LowPop_LowPrestige, LowPop_HighPrestige, HighPop_LowPrestige, HighPop_HighPrestige };

const char* to_string(Quadrant q);

// "High" means strictly greater than the threshold; a missing threshold
// means the median of the corresponding column. Throws EmptyInput.
std::map<ArticleId, Quadrant> classify_quadrants(std::span<const ArticleScore> scores,
                                                 std::optional<double> pop_threshold = std::nullopt,
                                                 std::optional<double> prestige_threshold = std::nullopt);

enum class ReportOrder { citation, weighted, delta_desc, delta_asc };

// "citation" | "weighted" | "delta_desc" | "delta_asc". Throws std::invalid_argument.
ReportOrder parse_report_order(std::string_view text);

struct ReportRow {
    ArticleId article;
    long long citation_count = 0;
    double weighted_citation = 0.0;
    long long citation_rank = 0;
    long long weighted_rank = 0;
    double intermedium = 0.0;
    double delta = 0.0;
};

// Top n rows under `order`; ties fall back to ascending ArticleId. Every
// article in `crsm_rows` must have a row in `scores` (throws UnknownArticle).
// Throws std::invalid_argument when n < 1.
std::vector<ReportRow> top_n_report(std::span<const ArticleScore> scores,
                                    std::span<const CrsmRow> crsm_rows, std::size_t n,
                                    ReportOrder order);

// Sorted deltas paired with standard-normal quantiles at plotting
// positions (i - 0.5) / n: (theoretical, sample).
std::vector<std::pair<double, double>> qq_points(std::span<const CrsmRow> rows);

} // namespace wcite
