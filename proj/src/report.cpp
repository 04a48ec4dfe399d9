#include "wcite/report.hpp"

#include <ostream>

#include "wcite/textio.hpp"

namespace wcite {

namespace {

// Join header names with the delimiter.
void header(std::ostream& out, std::initializer_list<const char*> names, char d) {
    bool first = true;
    for (const char* n : names) {
        if (!first) out << d;
        out << n;
        first = false;
    }
    out << '\n';
}

} // namespace

void write_score_file(std::ostream& out, std::span<const ArticleScore> scores, char d) {
    header(out, {"cited_id", "citation_count", "weighted_citation", "missing_journal_events"}, d);
    for (const auto& s : scores)
        out << s.article.str() << d << s.citation_count << d << format_fixed(s.weighted_citation, 6) << d
            << s.missing_journal_events << '\n';
}

void write_summary_file(std::ostream& out, const CorpusSummary& s, int decimals, char d) {
    header(out, {"statistic", "value"}, d);
    out << "total_articles" << d << s.total_articles << '\n';
    out << "cited_articles" << d << s.cited_articles << '\n';
    out << "cited_ratio_percent" << d << format_fixed(100.0 * s.cited_ratio, decimals) << '\n';
    out << "total_citations" << d << s.total_citations << '\n';
    out << "mean_citations_per_cited_article" << d << format_fixed(s.mean_citations_per_cited_article, decimals)
        << '\n';
    out << "citing_articles" << d << s.citing_articles << '\n';
    out << "cited_per_citing" << d << format_fixed(s.cited_per_citing, decimals) << '\n';
    out << "citing_journals" << d << s.citing_journals << '\n';
}

void write_crsm_file(std::ostream& out, std::span<const CrsmRow> rows, char d) {
    header(out, {"cited_id", "citation_count", "weighted_citation", "citation_rank", "weighted_rank", "factor",
                 "intermedium", "delta"},
           d);
    for (const auto& r : rows)
        out << r.article.str() << d << r.citation_count << d << format_fixed(r.weighted_citation, 6) << d
            << r.citation_rank << d << r.weighted_rank << d << format_fixed(r.factor, 6) << d
            << format_fixed(r.intermedium, 6) << d << format_fixed(r.delta, 6) << '\n';
}

void write_delta_distribution(std::ostream& out, const DeltaDistribution& dist, char d) {
    header(out, {"statistic", "value"}, d);
    out << "n" << d << dist.n << '\n';
    out << "mean" << d << format_fixed(dist.mean, 6) << '\n';
    out << "std" << d << format_fixed(dist.std, 6) << '\n';
    out << "excess_kurtosis" << d << (dist.excess_kurtosis ? format_fixed(*dist.excess_kurtosis, 6) : "NA")
        << '\n';
    out << "bin_width" << d << format_fixed(dist.bin_width, 6) << '\n';
    out << '\n';
    header(out, {"bin_center", "count"}, d);
    for (const auto& [bin, count] : dist.histogram)
        out << format_fixed(static_cast<double>(bin) * dist.bin_width, 6) << d << count << '\n';
}

void write_report_table(std::ostream& out, std::span<const ReportRow> rows, char d) {
    header(out, {"cited_id", "citation_count", "weighted_citation", "citation_rank", "weighted_rank",
                 "intermedium", "delta"},
           d);
    for (const auto& r : rows)
        out << r.article.str() << d << r.citation_count << d << format_fixed(r.weighted_citation, 2) << d
            << r.citation_rank << d << r.weighted_rank << d << format_fixed(r.intermedium, 2) << d
            << format_fixed(r.delta, 2) << '\n';
}

void write_quadrants(std::ostream& out, std::span<const ArticleScore> scores,
                     const std::map<ArticleId, Quadrant>& labels, char d) {
    header(out, {"cited_id", "citation_count", "weighted_citation", "quadrant"}, d);
    for (const auto& s : scores) {
        auto it = labels.find(s.article);
        if (it == labels.end()) continue;
        out << s.article.str() << d << s.citation_count << d << format_fixed(s.weighted_citation, 6) << d
            << to_string(it->second) << '\n';
    }
}

void write_qq_points(std::ostream& out, std::span<const std::pair<double, double>> points, char d) {
    header(out, {"normal_quantile", "delta"}, d);
    for (const auto& [q, v] : points) out << format_fixed(q, 6) << d << format_fixed(v, 6) << '\n';
}

void write_decay_fit(std::ostream& out, const DecayFit& fit, char d) {
    header(out, {"statistic", "value"}, d);
    out << "lambda" << d << format_fixed(fit.lambda, 6) << '\n';
    out << "r2" << d << format_fixed(fit.r2, 6) << '\n';
    out << "intercept" << d << format_fixed(fit.intercept, 6) << '\n';
    out << "start_age" << d << fit.start_age << '\n';
    out << "points" << d << fit.points << '\n';
}

void write_age_histogram(std::ostream& out, const AgeHistogram& hist, char d) {
    header(out, {"age", "count"}, d);
    for (const auto& [age, count] : hist.counts) out << age << d << format_shortest(count) << '\n';
}

} // namespace wcite
