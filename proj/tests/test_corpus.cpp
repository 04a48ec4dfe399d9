#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "wcite/corpus.hpp"
#include "wcite/errors.hpp"
#include "wcite/ingest.hpp"
#include "wcite/synthgen.hpp"

using namespace wcite;

namespace {

CitationEvent ev(const char* cited, int pub, const char* citing, const char* journal, int year) {
    return {ArticleId(cited), pub, ArticleId(citing), journal, year};
}

JournalYearScore ai_row(const char* journal, int year, double ai) {
    JournalYearScore r;
    r.journal = journal;
    r.year = year;
    r.article_influence = ai;
    return r;
}

} // namespace

TEST_CASE("article ids are whitespace-collapsed and uppercased") {
    CHECK(ArticleId("  spink a,  2001, JASIST ").str() == "SPINK A, 2001, JASIST");
    CHECK(ArticleId("van der Eijk CC") == ArticleId("VAN DER EIJK CC"));
    CHECK(ArticleId("   ").empty());
}

TEST_CASE("build_corpus on empty input") {
    auto c = build_corpus({}, {});
    CHECK(c.events().empty());
    CHECK(c.scores().empty());
    CHECK(c.article_pub_year().empty());
}

TEST_CASE("build_corpus counts cited articles and events") {
    auto c = build_corpus({ev("X", 2000, "A", "J1", 2001), ev("X", 2000, "B", "J2", 2002),
                           ev("X", 2000, "C", "J1", 2003)},
                          {ai_row("J1", 2001, 1.0), ai_row("J2", 2002, 2.0)});
    CHECK(c.article_pub_year().size() == 1);
    CHECK(c.events().size() == 3);
    CHECK(c.scores().size() == 2);
    CHECK(c.events_for(ArticleId("X")).size() == 3);
    CHECK(c.events_for(ArticleId("Y")).empty());
    CHECK(c.max_influence() == 2.0);
}

TEST_CASE("build_corpus rejects inconsistent publication years") {
    CHECK_THROWS_AS(build_corpus({ev("X", 2000, "A", "J", 2001), ev("X", 2001, "B", "J", 2002)}, {}),
                    InconsistentPubYear);
}

TEST_CASE("build_corpus rejects duplicate score rows") {
    CHECK_THROWS_AS(build_corpus({}, {ai_row("J", 2001, 1.0), ai_row("J", 2001, 2.0)}), DuplicateScoreRow);
}

TEST_CASE("build_corpus rejects rows that break the score invariants") {
    JournalYearScore none;
    none.journal = "J";
    none.year = 2001;
    CHECK_THROWS_AS(build_corpus({}, {none}), Error);

    JournalYearScore bad = none;
    bad.eigenfactor = 0.02;
    bad.alpha = 0.001;
    bad.article_influence = 0.3;  // derived value is 0.2
    CHECK_THROWS_AS(build_corpus({}, {bad}), Error);

    bad.article_influence = 0.2;
    CHECK_NOTHROW(build_corpus({}, {bad}));

    CHECK_THROWS_AS(build_corpus({ev("X", 200, "A", "J", 2001)}, {}), InvalidYear);
}

TEST_CASE("build_corpus fills in Article Influence from eigenfactor and alpha") {
    JournalYearScore r;
    r.journal = "J";
    r.year = 2005;
    r.eigenfactor = 0.02;
    r.alpha = 0.001;
    auto c = build_corpus({}, {r});
    const auto* row = c.find_score("J", 2005);
    REQUIRE(row != nullptr);
    REQUIRE(row->article_influence.has_value());
    CHECK(*row->article_influence == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("build_corpus is independent of input order") {
    GenSpec spec;
    spec.seed = 99;
    spec.n_articles = 30;
    auto gen = generate(spec);
    auto events = gen.events;
    auto scores = gen.scores;
    std::mt19937 shuffler(7);
    for (int round = 0; round < 5; ++round) {
        std::shuffle(events.begin(), events.end(), shuffler);
        std::shuffle(scores.begin(), scores.end(), shuffler);
        CHECK(build_corpus(events, scores) == gen.corpus);
    }
}

TEST_CASE("corpus survives a write/parse round trip") {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL, 12345ULL}) {
        GenSpec spec;
        spec.seed = seed;
        spec.n_articles = 40;
        spec.ai = UniformAi{0.0, 3.0};
        auto gen = generate(spec);

        std::stringstream events_io, scores_io;
        write_corpus(events_io, scores_io, gen.corpus);
        auto parsed = parse_events(events_io, AliasTable{});
        CHECK(parsed.report.rows_rejected == 0);
        auto rows = parse_scores(scores_io, AliasTable{});
        CHECK(build_corpus(parsed.events, rows) == gen.corpus);
    }
}
