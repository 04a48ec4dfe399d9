#pragma once

// In-memory citation corpus: citation events, journal-year score rows and
// the publication year of every cited article. A Corpus is immutable once
// built and may be shared read-only between threads.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wcite {

// Collapse runs of whitespace to one space, trim, and uppercase (ASCII).
std::string normalize_key(std::string_view raw);

// Opaque article identifier, e.g. "SPINK A, 2001, JASIST, V52, P226".
// Stored normalized so that identity is exact string equality.
class ArticleId {
public:
    ArticleId() = default;
    explicit ArticleId(std::string_view raw) : key_(normalize_key(raw)) {}

    const std::string& str() const noexcept { return key_; }
    bool empty() const noexcept { return key_.empty(); }

    friend auto operator<=>(const ArticleId&, const ArticleId&) = default;
    friend bool operator==(const ArticleId&, const ArticleId&) = default;

private:
    std::string key_;
};

inline bool is_valid_year(int year) { return year >= 1000 && year <= 9999; }

struct CitationEvent {
    ArticleId cited;
    int cited_pub_year = 0;
    ArticleId citing_article;
    std::string citing_journal;
    int citation_year = 0;

    // Citation year minus publication year; may be negative for preprints.
    int interval() const noexcept { return citation_year - cited_pub_year; }

    friend auto operator<=>(const CitationEvent&, const CitationEvent&) = default;
    friend bool operator==(const CitationEvent&, const CitationEvent&) = default;
};

// One row of a journal score table. At least article_influence or the
// eigenfactor/alpha pair must be present.
struct JournalYearScore {
    std::string journal;
    int year = 0;
    std::optional<double> eigenfactor;
    std::optional<double> alpha;
    std::optional<double> article_influence;

    // The Article Influence score, derived from eigenfactor/alpha when the
    // explicit column is absent.
    double influence() const;

    friend bool operator==(const JournalYearScore&, const JournalYearScore&) = default;
};

// Relative tolerance for the AI = 0.01*EF/alpha consistency check.
inline constexpr double kInfluenceConsistencyTol = 1e-9;

// Throws NonPositiveAlpha, InvalidYear or Error on a row that breaks the
// JournalYearScore invariants.
void validate_score_row(const JournalYearScore& row);

struct ArticleScore {
    ArticleId article;
    long long citation_count = 0;
    double weighted_citation = 0.0;
    long long missing_journal_events = 0;
    // Events whose citation year preceded publication; scored at interval 0.
    long long clamped_intervals = 0;

    friend bool operator==(const ArticleScore&, const ArticleScore&) = default;
};

using JournalYear = std::pair<std::string, int>;

class Corpus {
public:
    Corpus() = default;

    const std::vector<CitationEvent>& events() const noexcept { return events_; }
    const std::map<JournalYear, JournalYearScore>& scores() const noexcept { return scores_; }
    const std::map<ArticleId, int>& article_pub_year() const noexcept { return pub_year_; }

    // Events citing `article`, contiguous because events are kept sorted
    // by cited article. Empty when the article is never cited.
    std::span<const CitationEvent> events_for(const ArticleId& article) const;

    const JournalYearScore* find_score(const std::string& journal, int year) const;

    // Article Influence by year for one journal, or nullptr when the
    // journal has no score rows at all.
    const std::map<int, double>* influence_by_year(const std::string& journal) const;

    double max_influence() const noexcept { return max_influence_; }
    bool contains(const ArticleId& article) const { return pub_year_.contains(article); }

    friend bool operator==(const Corpus& a, const Corpus& b) {
        return a.events_ == b.events_ && a.scores_ == b.scores_ && a.pub_year_ == b.pub_year_;
    }

private:
    friend Corpus build_corpus(std::vector<CitationEvent> events,
                               std::vector<JournalYearScore> scores);

    std::vector<CitationEvent> events_;
    std::map<JournalYear, JournalYearScore> scores_;
    std::map<ArticleId, int> pub_year_;
    std::map<std::string, std::map<int, double>> influence_;
    double max_influence_ = 0.0;
};

// Build a corpus. Input order does not matter: events are stored in a
// canonical sorted order. Throws DuplicateScoreRow, InconsistentPubYear,
// InvalidYear.
Corpus build_corpus(std::vector<CitationEvent> events, std::vector<JournalYearScore> scores);

} // namespace wcite
