#pragma once

// Citation ranking similarity measure (CRSM).
//
// The citation-count list (CC) is discrete and full of ties; the weighted
// citation list (CW) is nearly continuous. CRSM aligns the two by position:
//
//   1. Sort articles descending by CC; equal counts form tie groups. A group
//      of size k occupies positions p .. p+k-1 (competition ranking).
//   2. Sort articles descending by CW with ties broken by ascending
//      ArticleId, giving strict positions 1..N.
//   3. Each CW position q inherits the factor of the CC group covering q:
//        singleton group:  F_q = CC_q / CW_q
//        size-k group:     F   = k * CC_group / (sum of CW over the group)
//   4. intermedium(q) = CW_q * F_q, and an article at CW position q has
//        delta = its own citation count - intermedium(q).
//
// The "sum of CW over the group" in step 3 is configurable: FactorRule::
// positional sums the CW values at positions p .. p+k-1 (so the group's
// intermediums add up to k * CC_group), while FactorRule::member_sum sums
// the CW values of the group's own articles, wherever they sit in the CW
// list. Singletons use CW_q under both rules.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "wcite/corpus.hpp"

namespace wcite {

struct RankedRow {
    ArticleId article;
    double value = 0.0;
    long long rank = 0;  // 1-based competition rank
};

// Half-open range of row positions sharing one value.
struct TieGroup {
    std::size_t begin = 0;
    std::size_t end = 0;
    std::size_t size() const noexcept { return end - begin; }
};

class RankedTable {
public:
    const std::vector<RankedRow>& rows() const noexcept { return rows_; }
    const std::vector<TieGroup>& groups() const noexcept { return groups_; }
    // Throws UnknownArticle.
    long long rank_of(const ArticleId& article) const;
    std::size_t size() const noexcept { return rows_.size(); }

private:
    friend RankedTable rank_descending(std::vector<std::pair<ArticleId, double>>,
                                       const std::function<bool(const ArticleId&, const ArticleId&)>&);
    std::vector<RankedRow> rows_;
    std::vector<TieGroup> groups_;
    std::map<ArticleId, std::size_t> index_;
};

// Descending order, exact-equality tie groups, competition ranks. Within a
// group rows follow `tiebreak` (ascending ArticleId by default). Throws
// DuplicateArticle.
RankedTable rank_descending(
    std::vector<std::pair<ArticleId, double>> values,
    const std::function<bool(const ArticleId&, const ArticleId&)>& tiebreak = std::less<ArticleId>());

enum class FactorRule { positional, member_sum };

// "positional" / "member". Throws std::invalid_argument.
FactorRule parse_factor_rule(std::string_view text);
const char* to_string(FactorRule rule);

struct CrsmRow {
    ArticleId article;
    long long citation_count = 0;
    double weighted_citation = 0.0;
    long long citation_rank = 0;  // competition rank in the CC list
    long long weighted_rank = 0;  // strict position in the CW list
    double factor = 0.0;          // factor at the article's CW position
    double intermedium = 0.0;     // CW at that position times factor
    double delta = 0.0;           // citation_count - intermedium
    // The CC group covering this article's CW position had a zero CW sum;
    // factor and intermedium are then 0 and delta equals citation_count.
    bool zero_weight_denominator = false;
};

// Rows in CC-list order (count descending, then ArticleId). Throws
// EmptyInput, DuplicateArticle.
std::vector<CrsmRow> crsm(std::span<const ArticleScore> scores,
                          FactorRule rule = FactorRule::positional);

struct DeltaDistribution {
    std::size_t n = 0;
    double mean = 0.0;
    double std = 0.0;  // population standard deviation
    // Population excess kurtosis m4 / m2^2 - 3; empty when std == 0.
    std::optional<double> excess_kurtosis;
    double bin_width = 1.0;
    // Bin index -> count. Bin i covers [(i - 0.5) w, (i + 0.5) w), so bin 0
    // is centered at zero.
    std::map<long long, std::size_t> histogram;
};

// Throws EmptyInput; std::invalid_argument unless bin_width > 0.
DeltaDistribution delta_distribution(std::span<const CrsmRow> rows, double bin_width = 1.0);

} // namespace wcite
