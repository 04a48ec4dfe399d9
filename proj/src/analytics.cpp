#include "wcite/analytics.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <boost/math/distributions/normal.hpp>

#include "wcite/errors.hpp"
#include "wcite/regression.hpp"

namespace wcite {

CorpusSummary summarize_counts(long long total_articles, long long cited_articles,
                               long long total_citations, long long citing_articles,
                               long long citing_journals) {
    auto ratio = [](long long a, long long b) {
        return b == 0 ? 0.0 : static_cast<double>(a) / static_cast<double>(b);
    };
    CorpusSummary s;
    s.total_articles = total_articles;
    s.cited_articles = cited_articles;
    s.total_citations = total_citations;
    s.citing_articles = citing_articles;
    s.citing_journals = citing_journals;
    s.cited_ratio = ratio(cited_articles, total_articles);
    s.mean_citations_per_cited_article = ratio(total_citations, cited_articles);
    s.cited_per_citing = ratio(total_citations, citing_articles);
    return s;
}

CorpusSummary corpus_summary(const Corpus& corpus, std::span<const ArticleId> universe) {
    std::set<ArticleId> all(universe.begin(), universe.end());
    for (const auto& [article, year] : corpus.article_pub_year())
        if (!all.contains(article)) throw CitedArticleOutsideUniverse(article.str());

    std::set<ArticleId> citing;
    std::set<std::string> journals;
    for (const auto& e : corpus.events()) {
        citing.insert(e.citing_article);
        journals.insert(e.citing_journal);
    }
    return summarize_counts(static_cast<long long>(all.size()),
                            static_cast<long long>(corpus.article_pub_year().size()),
                            static_cast<long long>(corpus.events().size()),
                            static_cast<long long>(citing.size()),
                            static_cast<long long>(journals.size()));
}

double linear_r2(std::span<const std::pair<double, double>> points) {
    std::vector<double> x, y;
    x.reserve(points.size());
    y.reserve(points.size());
    for (const auto& [px, py] : points) {
        x.push_back(px);
        y.push_back(py);
    }
    return fit_line(x, y).r2;
}

double median(std::vector<double> values) {
    if (values.empty()) throw EmptyInput("median");
    const std::size_t mid = values.size() / 2;
    std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid), values.end());
    const double upper = values[mid];
    if (values.size() % 2 == 1) return upper;
    const double lower = *std::max_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid));
    return (lower + upper) / 2.0;
}

const char* to_string(Quadrant q) {
    switch (q) {
    case Quadrant::LowPop_LowPrestige: return "LowPop_LowPrestige";
    case Quadrant::LowPop_HighPrestige: return "LowPop_HighPrestige";
    case Quadrant::HighPop_LowPrestige: return "HighPop_LowPrestige";
    case Quadrant::HighPop_HighPrestige: return "HighPop_HighPrestige";
    }
    return "?";
}

std::map<ArticleId, Quadrant> classify_quadrants(std::span<const ArticleScore> scores,
                                                 std::optional<double> pop_threshold,
                                                 std::optional<double> prestige_threshold) {
    if (scores.empty()) throw EmptyInput("classify_quadrants");
    if (!pop_threshold || !prestige_threshold) {
        std::vector<double> counts, weights;
        for (const auto& s : scores) {
            counts.push_back(static_cast<double>(s.citation_count));
            weights.push_back(s.weighted_citation);
        }
        if (!pop_threshold) pop_threshold = median(std::move(counts));
        if (!prestige_threshold) prestige_threshold = median(std::move(weights));
    }

    std::map<ArticleId, Quadrant> out;
    for (const auto& s : scores) {
        const bool high_pop = static_cast<double>(s.citation_count) > *pop_threshold;
        const bool high_prestige = s.weighted_citation > *prestige_threshold;
        Quadrant q = high_pop ? (high_prestige ? Quadrant::HighPop_HighPrestige : Quadrant::HighPop_LowPrestige)
                              : (high_prestige ? Quadrant::LowPop_HighPrestige : Quadrant::LowPop_LowPrestige);
        if (!out.emplace(s.article, q).second) throw DuplicateArticle(s.article.str());
    }
    return out;
}

ReportOrder parse_report_order(std::string_view text) {
    if (text == "citation") return ReportOrder::citation;
    if (text == "weighted") return ReportOrder::weighted;
    if (text == "delta_desc") return ReportOrder::delta_desc;
    if (text == "delta_asc") return ReportOrder::delta_asc;
    throw std::invalid_argument("unknown report order '" + std::string(text) + "'");
}

std::vector<ReportRow> top_n_report(std::span<const ArticleScore> scores,
                                    std::span<const CrsmRow> crsm_rows, std::size_t n,
                                    ReportOrder order) {
    if (n < 1) throw std::invalid_argument("top_n_report: n must be at least 1");
    std::map<ArticleId, const ArticleScore*> by_id;
    for (const auto& s : scores) by_id.emplace(s.article, &s);

    std::vector<ReportRow> rows;
    rows.reserve(crsm_rows.size());
    for (const auto& c : crsm_rows) {
        auto it = by_id.find(c.article);
        if (it == by_id.end()) throw UnknownArticle(c.article.str());
        rows.push_back({c.article, it->second->citation_count, it->second->weighted_citation,
                        c.citation_rank, c.weighted_rank, c.intermedium, c.delta});
    }

    auto key_less = [order](const ReportRow& a, const ReportRow& b) {
        switch (order) {
        case ReportOrder::citation:
            if (a.citation_count != b.citation_count) return a.citation_count > b.citation_count;
            break;
        case ReportOrder::weighted:
            if (a.weighted_citation != b.weighted_citation) return a.weighted_citation > b.weighted_citation;
            break;
        case ReportOrder::delta_desc:
            if (a.delta != b.delta) return a.delta > b.delta;
            break;
        case ReportOrder::delta_asc:
            if (a.delta != b.delta) return a.delta < b.delta;
            break;
        }
        return a.article < b.article;
    };
    std::sort(rows.begin(), rows.end(), key_less);
    if (rows.size() > n) rows.resize(n);
    return rows;
}

std::vector<std::pair<double, double>> qq_points(std::span<const CrsmRow> rows) {
    std::vector<double> deltas;
    deltas.reserve(rows.size());
    for (const auto& r : rows) deltas.push_back(r.delta);
    std::sort(deltas.begin(), deltas.end());

    const boost::math::normal_distribution<double> standard;
    const double n = static_cast<double>(deltas.size());
    std::vector<std::pair<double, double>> out;
    out.reserve(deltas.size());
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        const double p = (static_cast<double>(i) + 0.5) / n;
        out.emplace_back(boost::math::quantile(standard, p), deltas[i]);
    }
    return out;
}

} // namespace wcite
