#include "wcite/crsm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "wcite/errors.hpp"

namespace wcite {

long long RankedTable::rank_of(const ArticleId& article) const {
    auto it = index_.find(article);
    if (it == index_.end()) throw UnknownArticle(article.str());
    return rows_[it->second].rank;
}

RankedTable rank_descending(std::vector<std::pair<ArticleId, double>> values,
                            const std::function<bool(const ArticleId&, const ArticleId&)>& tiebreak) {
    RankedTable t;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (std::isnan(values[i].second))
            throw std::invalid_argument("rank_descending: NaN value for " + values[i].first.str());
        if (!t.index_.emplace(values[i].first, i).second) throw DuplicateArticle(values[i].first.str());
    }
    std::stable_sort(values.begin(), values.end(), [&](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return tiebreak(a.first, b.first);
    });

    t.rows_.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i == 0 || values[i].second != values[i - 1].second) t.groups_.push_back({i, i});
        t.groups_.back().end = i + 1;
        t.rows_.push_back({std::move(values[i].first), values[i].second,
                           static_cast<long long>(t.groups_.back().begin + 1)});
        t.index_[t.rows_.back().article] = i;
    }
    return t;
}

FactorRule parse_factor_rule(std::string_view text) {
    if (text == "positional") return FactorRule::positional;
    if (text == "member") return FactorRule::member_sum;
    throw std::invalid_argument("factor rule must be 'positional' or 'member', got '" +
                                std::string(text) + "'");
}

const char* to_string(FactorRule rule) {
    return rule == FactorRule::positional ? "positional" : "member";
}

std::vector<CrsmRow> crsm(std::span<const ArticleScore> scores, FactorRule rule) {
    if (scores.empty()) throw EmptyInput("crsm");
    const std::size_t n = scores.size();
    {
        std::set<ArticleId> seen;
        for (const auto& s : scores)
            if (!seen.insert(s.article).second) throw DuplicateArticle(s.article.str());
    }

    std::vector<std::size_t> cc_order(n), cw_order(n);
    std::iota(cc_order.begin(), cc_order.end(), 0);
    std::iota(cw_order.begin(), cw_order.end(), 0);
    std::sort(cc_order.begin(), cc_order.end(), [&](std::size_t a, std::size_t b) {
        if (scores[a].citation_count != scores[b].citation_count)
            return scores[a].citation_count > scores[b].citation_count;
        return scores[a].article < scores[b].article;
    });
    std::sort(cw_order.begin(), cw_order.end(), [&](std::size_t a, std::size_t b) {
        if (scores[a].weighted_citation != scores[b].weighted_citation)
            return scores[a].weighted_citation > scores[b].weighted_citation;
        return scores[a].article < scores[b].article;
    });
    std::vector<std::size_t> cw_position(n);
    for (std::size_t q = 0; q < n; ++q) cw_position[cw_order[q]] = q;

    auto cw_at = [&](std::size_t q) { return scores[cw_order[q]].weighted_citation; };

    std::vector<double> factor(n, 0.0);
    std::vector<bool> zero_denominator(n, false);
    std::vector<long long> cc_rank(n, 0);

    for (std::size_t begin = 0; begin < n;) {
        const long long count = scores[cc_order[begin]].citation_count;
        std::size_t end = begin;
        while (end < n && scores[cc_order[end]].citation_count == count) ++end;
        if (end > n) throw InternalConsistency("crsm: tie group runs past the weighted list");

        const std::size_t k = end - begin;
        double denominator = 0.0;
        if (k == 1 || rule == FactorRule::positional) {
            for (std::size_t q = begin; q < end; ++q) denominator += cw_at(q);
        } else {
            for (std::size_t p = begin; p < end; ++p) denominator += scores[cc_order[p]].weighted_citation;
        }
        const double numerator = static_cast<double>(k) * static_cast<double>(count);
        for (std::size_t q = begin; q < end; ++q) {
            if (denominator == 0.0) {
                zero_denominator[q] = true;
            } else {
                factor[q] = numerator / denominator;
            }
        }
        for (std::size_t p = begin; p < end; ++p) cc_rank[cc_order[p]] = static_cast<long long>(begin + 1);
        begin = end;
    }

    std::vector<CrsmRow> rows;
    rows.reserve(n);
    for (std::size_t i : cc_order) {
        const auto& s = scores[i];
        const std::size_t q = cw_position[i];
        CrsmRow r;
        r.article = s.article;
        r.citation_count = s.citation_count;
        r.weighted_citation = s.weighted_citation;
        r.citation_rank = cc_rank[i];
        r.weighted_rank = static_cast<long long>(q + 1);
        r.zero_weight_denominator = zero_denominator[q];
        r.factor = factor[q];
        r.intermedium = r.zero_weight_denominator ? 0.0 : cw_at(q) * factor[q];
        r.delta = static_cast<double>(s.citation_count) - r.intermedium;
        rows.push_back(std::move(r));
    }
    return rows;
}

DeltaDistribution delta_distribution(std::span<const CrsmRow> rows, double bin_width) {
    if (rows.empty()) throw EmptyInput("delta_distribution");
    if (!(bin_width > 0.0) || !std::isfinite(bin_width))
        throw std::invalid_argument("delta_distribution: bin width must be positive");

    DeltaDistribution d;
    d.n = rows.size();
    d.bin_width = bin_width;
    const double n = static_cast<double>(d.n);
    for (const auto& r : rows) d.mean += r.delta;
    d.mean /= n;
    double m2 = 0.0, m4 = 0.0;
    for (const auto& r : rows) {
        const double c = r.delta - d.mean;
        const double c2 = c * c;
        m2 += c2;
        m4 += c2 * c2;
    }
    m2 /= n;
    m4 /= n;
    d.std = std::sqrt(m2);
    if (m2 > 0.0) d.excess_kurtosis = m4 / (m2 * m2) - 3.0;

    for (const auto& r : rows)
        ++d.histogram[static_cast<long long>(std::floor(r.delta / bin_width + 0.5))];
    return d;
}

} // namespace wcite
