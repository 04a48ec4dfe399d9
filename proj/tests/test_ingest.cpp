#include <doctest.h>

#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "wcite/errors.hpp"
#include "wcite/ingest.hpp"

using namespace wcite;

namespace {

AliasTable jasist_aliases() { return parse_aliases(fixture("aliases.tsv")); }

std::vector<JournalYearScore> scores_from(const std::string& body) {
    std::istringstream in("journal\tyear\teigenfactor\talpha\tarticle_influence\n" + body);
    return parse_scores(in, AliasTable{});
}

} // namespace

TEST_CASE("normalize_journal collapses, uppercases and maps aliases") {
    auto aliases = jasist_aliases();
    CHECK(normalize_journal("  j am soc inf sci tec ", aliases) == "JASIST");
    CHECK(normalize_journal("J AM SOC INFORM SCI", aliases) == "JASIST");
    CHECK(normalize_journal("JASIST", aliases) == "JASIST");
    CHECK(normalize_journal("OBSCURE REV", aliases) == "OBSCURE REV");
    CHECK(normalize_journal("obscure   rev", aliases) == "OBSCURE REV");
}

TEST_CASE("normalize_journal is idempotent on random strings") {
    auto aliases = jasist_aliases();
    std::mt19937 rng(42);
    const std::string alphabet = "abcJASIST \t xyzAMSOCINF";
    std::vector<std::string> samples = {"J AM SOC INF SCI", " j am soc information ", "", "   "};
    for (int i = 0; i < 500; ++i) {
        std::string s;
        const int len = static_cast<int>(rng() % 24);
        for (int k = 0; k < len; ++k) s.push_back(alphabet[rng() % alphabet.size()]);
        samples.push_back(s);
    }
    for (const auto& s : samples) {
        auto once = normalize_journal(s, aliases);
        CHECK(normalize_journal(once, aliases) == once);
    }
}

TEST_CASE("alias tables refuse mappings that would break idempotence") {
    AliasTable t;
    t.add("A", "B");
    CHECK_THROWS_AS(t.add("B", "C"), InvalidAlias);  // canonical B would be re-aliased
    CHECK_THROWS_AS(t.add("C", "A"), InvalidAlias);  // A is an alias, not canonical
    CHECK_THROWS_AS(t.add("A", "D"), InvalidAlias);  // conflicting target
    CHECK_NOTHROW(t.add("a", "b"));                  // same mapping after normalization
    CHECK(t.apply("B") == "B");
}

TEST_CASE("parse_events reads a clean fixture") {
    auto parsed = parse_events(fixture("clean_events.tsv"), jasist_aliases());
    CHECK(parsed.events.size() == 5);
    CHECK(parsed.report.rows_read == 5);
    CHECK(parsed.report.rows_rejected == 0);
    CHECK(parsed.events[0].citing_journal == "JASIST");
    CHECK(parsed.events[2].citing_journal == "JASIST");
    CHECK(parsed.events[3].citing_journal == "OBSCURE REV");
    CHECK(parsed.events[0].cited == ArticleId("SPINK A, 2001, JASIST, V52, P226"));
}

TEST_CASE("parse_events rejects a row with a malformed year") {
    auto parsed = parse_events(fixture("bad_events.tsv"), AliasTable{});
    CHECK(parsed.events.size() == 1);
    CHECK(parsed.report.rows_read == 2);
    CHECK(parsed.report.rows_rejected == 1);
    REQUIRE(parsed.report.rejects.size() == 1);
    CHECK(parsed.report.rejects[0].line == 3);
    CHECK(parsed.report.rejects[0].reason == "invalid year");
    CHECK(parsed.report.rows_read == parsed.report.rows_accepted() + parsed.report.rows_rejected);
}

TEST_CASE("parse_events reports every kind of malformed row") {
    std::istringstream in("cited_id,cited_pub_year,citing_id,citing_journal,citation_year\n"
                          "A,2000,C1,J,2001\n"
                          "A,2000,C2,J\n"            // too few fields
                          "A,99,C3,J,2001\n"         // 2-digit year
                          ",2000,C4,J,2001\n"        // empty cited id
                          "A,2000, ,J,2001\n"        // empty citing id
                          "A,2000,C6,,2001\n"        // empty journal
                          "\n"                       // blank lines are not rows
                          "A,2000,C7,J,1999\n");     // negative interval is accepted
    auto parsed = parse_events(in, AliasTable{}, ',');
    CHECK(parsed.report.rows_read == 7);
    CHECK(parsed.report.rows_rejected == 5);
    CHECK(parsed.events.size() == 2);
    CHECK(parsed.report.rows_accepted() == 2);
    for (const auto& e : parsed.events) {
        CHECK(is_valid_year(e.cited_pub_year));
        CHECK(is_valid_year(e.citation_year));
    }
}

TEST_CASE("parse_events header and file errors") {
    std::istringstream wrong("cited\tyear\n");
    CHECK_THROWS_AS(parse_events(wrong, AliasTable{}), HeaderMismatch);
    std::istringstream empty("");
    CHECK_THROWS_AS(parse_events(empty, AliasTable{}), HeaderMismatch);
    CHECK_THROWS_AS(parse_events(fixture("no_such_file.tsv"), AliasTable{}), FileUnreadable);
}

TEST_CASE("parse_scores computes AI when only eigenfactor and alpha are given") {
    auto rows = scores_from("J\t2005\t0.02\t0.001\t\n");
    REQUIRE(rows.size() == 1);
    CHECK(*rows[0].article_influence == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("parse_scores stores an explicit AI as-is") {
    auto rows = scores_from("science\t2007\t\t\t17.353\n");
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].journal == "SCIENCE");
    CHECK(rows[0].year == 2007);
    CHECK(*rows[0].article_influence == 17.353);
    CHECK_FALSE(rows[0].eigenfactor.has_value());
}

TEST_CASE("parse_scores errors") {
    CHECK_THROWS_AS(scores_from("J\t2005\t0.02\t0\t\n"), NonPositiveAlpha);
    CHECK_THROWS_AS(scores_from("J\t2005\t0.02\t-1\t0.5\n"), NonPositiveAlpha);
    CHECK_THROWS_AS(scores_from("J\t2005\t0.02\t\t\n"), MissingBothScoreForms);
    CHECK_THROWS_AS(scores_from("J\t2005\t\t\t\n"), MissingBothScoreForms);
    CHECK_THROWS_AS(scores_from("J\t2005\t0.02\t0.001\t0.3\n"), InconsistentArticleInfluence);
    CHECK_THROWS_AS(scores_from("J\t20O5\t\t\t1\n"), MalformedScoreRow);
    CHECK_THROWS_AS(scores_from("J\t2005\t\t\tabc\n"), MalformedScoreRow);
    CHECK_THROWS_AS(scores_from("J\t2005\t1\n"), MalformedScoreRow);
    try {
        scores_from("J\t2005\t\t\t1\nK\t2005\t\t\t\n");
        FAIL("expected MissingBothScoreForms");
    } catch (const MissingBothScoreForms& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("flag_unmatched_journals lists journals without a score row for the year") {
    auto aliases = jasist_aliases();
    auto parsed = parse_events(fixture("clean_events.tsv"), aliases);
    auto scores = parse_scores(fixture("clean_scores.tsv"), aliases);
    flag_unmatched_journals(parsed.report, parsed.events, scores);
    CHECK(parsed.report.journals_unmatched == std::set<std::string>{"OBSCURE REV"});
}

TEST_CASE("score tables parse and validate") {
    auto rows = parse_score_table(fixture("table2_scores.tsv"));
    CHECK(rows.size() == 22);
    CHECK(rows[0].article == ArticleId("SPINK A, 2001, JASIST, V52, P226"));
    CHECK(rows[0].citation_count == 152);
    CHECK(rows[0].weighted_citation == 76.71);

    std::istringstream bad("cited_id\tcitation_count\tweighted_citation\tmissing_journal_events\nA\t-1\t2\t0\n");
    CHECK_THROWS_AS(parse_score_table(bad), MalformedScoreRow);
}

TEST_CASE("split_fields keeps empty cells and strips carriage returns") {
    auto f = split_fields("a\t\tb\t\r", '\t');
    REQUIRE(f.size() == 4);
    CHECK(f[1].empty());
    CHECK(f[3].empty());
}
