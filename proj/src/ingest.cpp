#include "wcite/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <span>

#include "wcite/errors.hpp"
#include "wcite/textio.hpp"

namespace wcite {

namespace {

std::ifstream open_or_throw(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileUnreadable(path.string());
    return in;
}

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

bool is_blank(std::string_view line) { return trim(line).empty(); }

void check_header(std::istream& in, char delimiter, std::span<const std::string_view> expected,
                  const char* what) {
    std::string line;
    if (!std::getline(in, line)) throw HeaderMismatch(std::string(what) + ": missing header row");
    // Tolerate a UTF-8 byte order mark on the header.
    if (line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    auto fields = split_fields(line, delimiter);
    bool ok = fields.size() == expected.size();
    for (std::size_t i = 0; ok && i < fields.size(); ++i) ok = trim(fields[i]) == expected[i];
    if (!ok) {
        std::string want;
        for (auto f : expected) {
            if (!want.empty()) want += delimiter;
            want += f;
        }
        throw HeaderMismatch(std::string(what) + ": header does not match '" + want + "'");
    }
}

// Exactly four ASCII digits.
std::optional<int> parse_year(std::string_view s) {
    s = trim(s);
    if (s.size() != 4 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
        return std::nullopt;
    int y = 0;
    std::from_chars(s.data(), s.data() + s.size(), y);
    return is_valid_year(y) ? std::optional<int>(y) : std::nullopt;
}

std::optional<double> parse_real(std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty() || !std::isfinite(v))
        return std::nullopt;
    return v;
}

std::optional<long long> parse_count(std::string_view s) {
    s = trim(s);
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty() || v < 0) return std::nullopt;
    return v;
}

} // namespace

std::vector<std::string> split_fields(std::string_view line, char delimiter) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto pos = line.find(delimiter, start);
        if (pos == std::string_view::npos) {
            out.emplace_back(line.substr(start));
            break;
        }
        out.emplace_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

void AliasTable::add(std::string_view raw, std::string_view canonical) {
    std::string r = normalize_key(raw);
    std::string c = normalize_key(canonical);
    if (r.empty() || c.empty()) throw InvalidAlias("alias entries must be non-empty");
    if (auto it = map_.find(c); it != map_.end() && it->second != c)
        throw InvalidAlias("canonical name '" + c + "' is itself an alias of '" + it->second + "'");
    if (auto it = map_.find(r); it != map_.end() && it->second != c)
        throw InvalidAlias("'" + r + "' already maps to '" + it->second + "'");
    if (r != c) {
        for (const auto& [k, v] : map_)
            if (v == r) throw InvalidAlias("'" + r + "' is the canonical name of '" + k + "'");
    }
    map_[r] = c;
    map_[c] = c;
}

const std::string& AliasTable::apply(const std::string& normalized) const {
    auto it = map_.find(normalized);
    return it == map_.end() ? normalized : it->second;
}

std::string normalize_journal(std::string_view raw, const AliasTable& aliases) {
    return aliases.apply(normalize_key(raw));
}

EventsParse parse_events(const std::filesystem::path& path, const AliasTable& aliases,
                         char delimiter) {
    auto in = open_or_throw(path);
    return parse_events(in, aliases, delimiter);
}

EventsParse parse_events(std::istream& in, const AliasTable& aliases, char delimiter) {
    check_header(in, delimiter, kEventsHeader, "events file");
    EventsParse result;
    auto& report = result.report;
    std::string line;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_blank(line)) continue;
        ++report.rows_read;
        auto reject = [&](std::string reason) {
            ++report.rows_rejected;
            report.rejects.push_back({lineno, std::move(reason)});
        };
        auto f = split_fields(line, delimiter);
        if (f.size() != std::size(kEventsHeader)) {
            reject("expected " + std::to_string(std::size(kEventsHeader)) + " fields, found " +
                   std::to_string(f.size()));
            continue;
        }
        auto pub = parse_year(f[1]);
        auto cit = parse_year(f[4]);
        if (!pub || !cit) {
            reject("invalid year");
            continue;
        }
        CitationEvent e{ArticleId(f[0]), *pub, ArticleId(f[2]), normalize_journal(f[3], aliases), *cit};
        if (e.cited.empty()) {
            reject("empty cited_id");
            continue;
        }
        if (e.citing_article.empty()) {
            reject("empty citing_id");
            continue;
        }
        if (e.citing_journal.empty()) {
            reject("empty citing_journal");
            continue;
        }
        result.events.push_back(std::move(e));
    }
    return result;
}

std::vector<JournalYearScore> parse_scores(const std::filesystem::path& path,
                                           const AliasTable& aliases, char delimiter) {
    auto in = open_or_throw(path);
    return parse_scores(in, aliases, delimiter);
}

std::vector<JournalYearScore> parse_scores(std::istream& in, const AliasTable& aliases,
                                           char delimiter) {
    check_header(in, delimiter, kScoresHeader, "scores file");
    std::vector<JournalYearScore> rows;
    std::string line;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_blank(line)) continue;
        auto f = split_fields(line, delimiter);
        if (f.size() != std::size(kScoresHeader))
            throw MalformedScoreRow("expected " + std::to_string(std::size(kScoresHeader)) +
                                        " fields, found " + std::to_string(f.size()),
                                    lineno);
        JournalYearScore row;
        row.journal = normalize_journal(f[0], aliases);
        if (row.journal.empty()) throw MalformedScoreRow("empty journal", lineno);
        auto year = parse_year(f[1]);
        if (!year) throw MalformedScoreRow("invalid year", lineno);
        row.year = *year;

        auto optional_real = [&](const std::string& cell, const char* name) -> std::optional<double> {
            if (trim(cell).empty()) return std::nullopt;
            auto v = parse_real(cell);
            if (!v) throw MalformedScoreRow(std::string("invalid ") + name, lineno);
            return v;
        };
        row.eigenfactor = optional_real(f[2], "eigenfactor");
        row.alpha = optional_real(f[3], "alpha");
        row.article_influence = optional_real(f[4], "article_influence");

        if (row.alpha && !(*row.alpha > 0.0)) throw NonPositiveAlpha();
        if (!row.article_influence && !(row.eigenfactor && row.alpha))
            throw MissingBothScoreForms(lineno);
        if (row.eigenfactor && *row.eigenfactor < 0.0)
            throw MalformedScoreRow("negative eigenfactor", lineno);
        if (row.article_influence && *row.article_influence < 0.0)
            throw MalformedScoreRow("negative article_influence", lineno);
        if (!row.article_influence) {
            row.article_influence = 0.01 * *row.eigenfactor / *row.alpha;
        } else if (row.eigenfactor && row.alpha) {
            const double derived = 0.01 * *row.eigenfactor / *row.alpha;
            const double scale = std::max(std::abs(derived), std::abs(*row.article_influence));
            if (std::abs(derived - *row.article_influence) > kInfluenceConsistencyTol * scale)
                throw InconsistentArticleInfluence(lineno);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

AliasTable parse_aliases(const std::filesystem::path& path, char delimiter) {
    auto in = open_or_throw(path);
    return parse_aliases(in, delimiter);
}

AliasTable parse_aliases(std::istream& in, char delimiter) {
    check_header(in, delimiter, kAliasHeader, "alias file");
    AliasTable table;
    std::string line;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_blank(line)) continue;
        auto f = split_fields(line, delimiter);
        if (f.size() != 2) throw InvalidAlias("alias file line " + std::to_string(lineno) + ": expected 2 fields");
        table.add(f[0], f[1]);
    }
    return table;
}

void flag_unmatched_journals(IngestReport& report, const std::vector<CitationEvent>& events,
                             const std::vector<JournalYearScore>& scores) {
    std::set<JournalYear> have;
    for (const auto& s : scores) have.emplace(s.journal, s.year);
    for (const auto& e : events)
        if (!have.contains({e.citing_journal, e.citation_year}))
            report.journals_unmatched.insert(e.citing_journal);
}

void write_events(std::ostream& out, const std::vector<CitationEvent>& events, char delimiter) {
    for (std::size_t i = 0; i < std::size(kEventsHeader); ++i)
        out << (i ? std::string(1, delimiter) : "") << kEventsHeader[i];
    out << '\n';
    for (const auto& e : events) {
        out << e.cited.str() << delimiter << e.cited_pub_year << delimiter << e.citing_article.str()
            << delimiter << e.citing_journal << delimiter << e.citation_year << '\n';
    }
}

void write_scores(std::ostream& out, const std::vector<JournalYearScore>& scores, char delimiter) {
    for (std::size_t i = 0; i < std::size(kScoresHeader); ++i)
        out << (i ? std::string(1, delimiter) : "") << kScoresHeader[i];
    out << '\n';
    auto opt = [](const std::optional<double>& v) { return v ? format_shortest(*v) : std::string(); };
    for (const auto& s : scores) {
        out << s.journal << delimiter << s.year << delimiter << opt(s.eigenfactor) << delimiter
            << opt(s.alpha) << delimiter << opt(s.article_influence) << '\n';
    }
}

void write_corpus(std::ostream& events_out, std::ostream& scores_out, const Corpus& corpus,
                  char delimiter) {
    write_events(events_out, corpus.events(), delimiter);
    std::vector<JournalYearScore> rows;
    rows.reserve(corpus.scores().size());
    for (const auto& [key, row] : corpus.scores()) rows.push_back(row);
    write_scores(scores_out, rows, delimiter);
}

std::vector<ArticleScore> parse_score_table(const std::filesystem::path& path, char delimiter) {
    auto in = open_or_throw(path);
    return parse_score_table(in, delimiter);
}

std::vector<ArticleScore> parse_score_table(std::istream& in, char delimiter) {
    static constexpr std::string_view header[] = {"cited_id", "citation_count", "weighted_citation",
                                                  "missing_journal_events"};
    check_header(in, delimiter, header, "score table");
    std::vector<ArticleScore> rows;
    std::string line;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_blank(line)) continue;
        auto f = split_fields(line, delimiter);
        if (f.size() != std::size(header))
            throw MalformedScoreRow("expected 4 fields, found " + std::to_string(f.size()), lineno);
        ArticleScore s;
        s.article = ArticleId(f[0]);
        if (s.article.empty()) throw MalformedScoreRow("empty cited_id", lineno);
        auto count = parse_count(f[1]);
        auto weighted = parse_real(f[2]);
        auto missing = parse_count(f[3]);
        if (!count) throw MalformedScoreRow("invalid citation_count", lineno);
        if (!weighted || *weighted < 0.0) throw MalformedScoreRow("invalid weighted_citation", lineno);
        if (!missing) throw MalformedScoreRow("invalid missing_journal_events", lineno);
        s.citation_count = *count;
        s.weighted_citation = *weighted;
        s.missing_journal_events = *missing;
        rows.push_back(std::move(s));
    }
    return rows;
}

} // namespace wcite
