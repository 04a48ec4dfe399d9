#pragma once

// Reading and writing the delimiter-separated interchange files:
//
//   events:  cited_id  cited_pub_year  citing_id  citing_journal  citation_year
//   scores:  journal   year  eigenfactor  alpha  article_influence
//   aliases: raw  canonical
//
// Every file starts with its header row. In the scores file the last three
// cells may be empty. Malformed event rows are skipped and reported; the
// scores file is strict and throws on the first bad row.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "wcite/corpus.hpp"

namespace wcite {

inline constexpr char kDefaultDelimiter = '\t';

// Raw journal string -> canonical journal name. Keys and values are stored
// normalized, and every canonical name maps to itself, so applying the
// table is idempotent.
class AliasTable {
public:
    AliasTable() = default;

    // Throws InvalidAlias when the mapping would break idempotence (the raw
    // name is already a canonical name of another entry, or the canonical
    // name is itself aliased elsewhere).
    void add(std::string_view raw, std::string_view canonical);

    // Lookup on an already-normalized key; unknown keys pass through.
    const std::string& apply(const std::string& normalized) const;

    std::size_t size() const noexcept { return map_.size(); }

private:
    std::map<std::string, std::string> map_;
};

// Whitespace-collapse, uppercase, then alias-map.
std::string normalize_journal(std::string_view raw, const AliasTable& aliases);

struct RowReject {
    std::size_t line = 0;
    std::string reason;
    friend bool operator==(const RowReject&, const RowReject&) = default;
};

struct IngestReport {
    std::size_t rows_read = 0;
    std::size_t rows_rejected = 0;
    std::vector<RowReject> rejects;
    std::set<std::string> journals_unmatched;

    std::size_t rows_accepted() const noexcept { return rows_read - rows_rejected; }
};

struct EventsParse {
    std::vector<CitationEvent> events;
    IngestReport report;
};

inline constexpr std::string_view kEventsHeader[] = {"cited_id", "cited_pub_year", "citing_id",
                                                     "citing_journal", "citation_year"};
inline constexpr std::string_view kScoresHeader[] = {"journal", "year", "eigenfactor", "alpha",
                                                     "article_influence"};
inline constexpr std::string_view kAliasHeader[] = {"raw", "canonical"};

// Throws FileUnreadable, HeaderMismatch.
EventsParse parse_events(const std::filesystem::path& path, const AliasTable& aliases,
                         char delimiter = kDefaultDelimiter);
EventsParse parse_events(std::istream& in, const AliasTable& aliases,
                         char delimiter = kDefaultDelimiter);

// Throws FileUnreadable, HeaderMismatch, MissingBothScoreForms,
// NonPositiveAlpha, MalformedScoreRow, InconsistentArticleInfluence.
std::vector<JournalYearScore> parse_scores(const std::filesystem::path& path,
                                           const AliasTable& aliases,
                                           char delimiter = kDefaultDelimiter);
std::vector<JournalYearScore> parse_scores(std::istream& in, const AliasTable& aliases,
                                           char delimiter = kDefaultDelimiter);

AliasTable parse_aliases(const std::filesystem::path& path, char delimiter = kDefaultDelimiter);
AliasTable parse_aliases(std::istream& in, char delimiter = kDefaultDelimiter);

// Fill report.journals_unmatched with citing journals that have no score row
// for the citation year of some event.
void flag_unmatched_journals(IngestReport& report, const std::vector<CitationEvent>& events,
                             const std::vector<JournalYearScore>& scores);

// Writers for the interchange formats. Reals use the shortest decimal form
// that parses back to the same double, so write -> parse is lossless.
void write_events(std::ostream& out, const std::vector<CitationEvent>& events,
                  char delimiter = kDefaultDelimiter);
void write_scores(std::ostream& out, const std::vector<JournalYearScore>& scores,
                  char delimiter = kDefaultDelimiter);

// Serialize a whole corpus (events in canonical order, scores by key).
void write_corpus(std::ostream& events_out, std::ostream& scores_out, const Corpus& corpus,
                  char delimiter = kDefaultDelimiter);

// Score tables (cited_id, citation_count, weighted_citation,
// missing_journal_events), as produced by the score command. Used to run
// the ranking comparison without a corpus. Throws FileUnreadable,
// HeaderMismatch, MalformedScoreRow.
std::vector<ArticleScore> parse_score_table(const std::filesystem::path& path,
                                            char delimiter = kDefaultDelimiter);
std::vector<ArticleScore> parse_score_table(std::istream& in, char delimiter = kDefaultDelimiter);

// Split one line on `delimiter`, dropping a trailing '\r'.
std::vector<std::string> split_fields(std::string_view line, char delimiter);

} // namespace wcite
