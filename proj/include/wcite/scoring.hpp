#pragma once

// Weighted citation ("prestige") scoring. Each citing event contributes
//
//     exp(-lambda * max(0, citation_year - pub_year)) * AI(citing journal, citation year)
//
// and an article's score is the sum over its citing events. The plain
// event count is its popularity.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wcite/corpus.hpp"
#include "wcite/decay.hpp"

namespace wcite {

// AI = 0.01 * eigenfactor / alpha. Throws NonPositiveAlpha when alpha <= 0.
double article_influence(double eigenfactor, double alpha);

// How to score a citing journal-year that has no score row.
struct MissingScorePolicy {
    enum class Mode { zero, nearest_year };
    Mode mode = Mode::zero;
    int max_year_gap = 0;  // nearest_year only

    static MissingScorePolicy zero() { return {}; }
    static MissingScorePolicy nearest(int max_gap) { return {Mode::nearest_year, max_gap}; }

    // "zero" or "nearest:K". Throws std::invalid_argument.
    static MissingScorePolicy parse(std::string_view text);
    std::string to_string() const;
};

struct ResolvedInfluence {
    double value = 0.0;
    bool missing = false;  // no usable score row; value is 0
};

// The citing journal's AI in `year`. Under nearest_year the closest scored
// year within max_year_gap is used, earlier year first on equal distance.
ResolvedInfluence resolve_influence(const Corpus& corpus, const std::string& journal, int year,
                                    const MissingScorePolicy& policy);

// Throws UnknownArticle when the article is not a cited article of the corpus.
ArticleScore weighted_citation(const ArticleId& article, const Corpus& corpus,
                               const DecayParams& params, const MissingScorePolicy& policy);

// One row per distinct cited article, ordered by ArticleId. `threads` = 0
// picks the hardware concurrency; results do not depend on it.
std::vector<ArticleScore> score_all(const Corpus& corpus, const DecayParams& params,
                                    const MissingScorePolicy& policy, unsigned threads = 1);

struct AuthorScore {
    std::string author;
    std::vector<ArticleId> publications;
    double weighted_citation_total = 0.0;
    long long weighted_h_index = 0;
};

// Largest h such that at least h values are >= h.
long long weighted_h_index(std::span<const double> values);

// Sum and weighted h-index over an author's publications. Every
// publication needs a row in `scores` (uncited articles carry a zero row);
// throws UnknownArticle otherwise.
AuthorScore author_weighted_citation(std::string author, std::vector<ArticleId> publications,
                                     std::span<const ArticleScore> scores);

} // namespace wcite
