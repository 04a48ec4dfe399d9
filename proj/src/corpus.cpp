#include "wcite/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "wcite/errors.hpp"

namespace wcite {

std::string normalize_key(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    bool pending_space = false;
    for (char c : raw) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
    return out;
}

double JournalYearScore::influence() const {
    if (article_influence) return *article_influence;
    if (eigenfactor && alpha) {
        if (!(*alpha > 0.0)) throw NonPositiveAlpha();
        return 0.01 * *eigenfactor / *alpha;
    }
    throw Error("score row for " + journal + " has no Article Influence");
}

void validate_score_row(const JournalYearScore& row) {
    if (!is_valid_year(row.year))
        throw InvalidYear("score row year is not a 4-digit year: " + std::to_string(row.year));
    if (row.alpha && !(*row.alpha > 0.0)) throw NonPositiveAlpha();
    if (row.eigenfactor && !(*row.eigenfactor >= 0.0))
        throw Error("eigenfactor must be non-negative for " + row.journal);
    if (row.article_influence && !(*row.article_influence >= 0.0))
        throw Error("article_influence must be non-negative for " + row.journal);
    const bool pair = row.eigenfactor && row.alpha;
    if (!row.article_influence && !pair)
        throw Error("score row for " + row.journal + " has neither AI nor eigenfactor+alpha");
    if (row.article_influence && pair) {
        const double derived = 0.01 * *row.eigenfactor / *row.alpha;
        const double given = *row.article_influence;
        const double scale = std::max(std::abs(derived), std::abs(given));
        if (std::abs(derived - given) > kInfluenceConsistencyTol * scale)
            throw Error("article_influence disagrees with eigenfactor/alpha for " + row.journal);
    }
}

std::span<const CitationEvent> Corpus::events_for(const ArticleId& article) const {
    auto lo = std::lower_bound(events_.begin(), events_.end(), article,
                               [](const CitationEvent& e, const ArticleId& a) { return e.cited < a; });
    auto hi = std::upper_bound(lo, events_.end(), article,
                               [](const ArticleId& a, const CitationEvent& e) { return a < e.cited; });
    return {lo, hi};
}

const JournalYearScore* Corpus::find_score(const std::string& journal, int year) const {
    auto it = scores_.find({journal, year});
    return it == scores_.end() ? nullptr : &it->second;
}

const std::map<int, double>* Corpus::influence_by_year(const std::string& journal) const {
    auto it = influence_.find(journal);
    return it == influence_.end() ? nullptr : &it->second;
}

Corpus build_corpus(std::vector<CitationEvent> events, std::vector<JournalYearScore> scores) {
    Corpus c;
    for (auto& row : scores) {
        validate_score_row(row);
        JournalYear key{row.journal, row.year};
        if (c.scores_.contains(key)) throw DuplicateScoreRow(row.journal, row.year);
        const double ai = row.influence();
        row.article_influence = ai;
        c.influence_[row.journal][row.year] = ai;
        c.max_influence_ = std::max(c.max_influence_, ai);
        c.scores_.emplace(std::move(key), std::move(row));
    }

    for (const auto& e : events) {
        if (!is_valid_year(e.cited_pub_year) || !is_valid_year(e.citation_year))
            throw InvalidYear("event for " + e.cited.str() + " has a non 4-digit year");
        auto [it, inserted] = c.pub_year_.emplace(e.cited, e.cited_pub_year);
        if (!inserted && it->second != e.cited_pub_year) throw InconsistentPubYear(e.cited.str());
    }
    std::sort(events.begin(), events.end());
    c.events_ = std::move(events);
    return c;
}

} // namespace wcite
