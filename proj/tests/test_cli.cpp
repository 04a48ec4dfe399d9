#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "fixtures.hpp"
#include "wcite/cli.hpp"
#include "wcite/ingest.hpp"

namespace fs = std::filesystem;
using wcite::cli::run_cli;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path scratch(const std::string& name) {
    auto dir = fs::temp_directory_path() / ("wcite_cli_" + name);
    fs::remove_all(dir);
    return dir;
}

std::string fx(const char* name) { return fixture(name).string(); }

std::vector<std::string> crsm_args(const fs::path& out, const char* rule) {
    return {"crsm", "--score-table", fx("table2_scores.tsv"), "--factor-rule", rule, "--out", out.string()};
}

} // namespace

TEST_CASE("delimiter names") {
    using wcite::cli::parse_delimiter;
    CHECK(parse_delimiter("\\t") == '\t');
    CHECK(parse_delimiter("tab") == '\t');
    CHECK(parse_delimiter("comma") == ',');
    CHECK(parse_delimiter(";") == ';');
    CHECK_THROWS_AS(parse_delimiter("ab"), std::invalid_argument);
}

TEST_CASE("validate exit codes") {
    auto clean = run({"validate", "--events", fx("clean_events.tsv"), "--scores", fx("clean_scores.tsv"),
                      "--aliases", fx("aliases.tsv")});
    CHECK(clean.code == 0);
    CHECK(clean.out.find("status: OK") != std::string::npos);
    CHECK(clean.out.find("OBSCURE REV") != std::string::npos);

    auto bad = run({"validate", "--events", fx("bad_events.tsv"), "--scores", fx("worked_scores.tsv")});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("reject line 3: invalid year") != std::string::npos);

    auto missing = run({"validate", "--events", fx("nope.tsv"), "--scores", fx("worked_scores.tsv")});
    CHECK(missing.code == 2);
}

TEST_CASE("score on the worked example") {
    auto dir = scratch("worked");
    auto r = run({"score", "--events", fx("worked_events.tsv"), "--scores", fx("worked_scores.tsv"), "--out",
                  dir.string()});
    REQUIRE(r.code == 0);
    auto rows = wcite::parse_score_table(dir / "scores.tsv");
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].citation_count == 3);
    CHECK(std::abs(rows[0].weighted_citation - 2.680947) < 5e-7);
    CHECK(slurp(dir / "scores.tsv").find("2.680947") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("score on an empty events file writes a header-only table") {
    auto dir = scratch("empty");
    auto r = run({"score", "--events", fx("empty_events.tsv"), "--scores", fx("worked_scores.tsv"), "--out",
                  dir.string()});
    REQUIRE(r.code == 0);
    CHECK(wcite::parse_score_table(dir / "scores.tsv").empty());
    fs::remove_all(dir);
}

TEST_CASE("score counts citing events from unscored journals") {
    auto dir = scratch("unscored");
    auto r = run({"score", "--events", fx("clean_events.tsv"), "--scores", fx("clean_scores.tsv"), "--aliases",
                  fx("aliases.tsv"), "--out", dir.string()});
    REQUIRE(r.code == 0);
    long long missing = 0;
    for (const auto& row : wcite::parse_score_table(dir / "scores.tsv")) missing += row.missing_journal_events;
    CHECK(missing > 0);
    fs::remove_all(dir);
}

TEST_CASE("fit-decay on generated data, flat data and too little data") {
    auto gen_dir = scratch("gen");
    REQUIRE(run({"generate", "--seed", "77", "--articles", "6000", "--citations", "geometric:10", "--max-age", "30",
                 "--out", gen_dir.string()})
                .code == 0);
    auto fit_dir = scratch("fit");
    auto r = run({"fit-decay", "--events", (gen_dir / "events.tsv").string(), "--scores",
                  (gen_dir / "scores.tsv").string(), "--start-age", "0", "--out", fit_dir.string()});
    REQUIRE(r.code == 0);
    const auto pos = r.out.find("lambda ");
    REQUIRE(pos != std::string::npos);
    CHECK(std::abs(std::stod(r.out.substr(pos + 7)) - 0.117) <= 0.01);

    // Two citations at each of ages 0 and 1: a flat histogram.
    auto flat_dir = scratch("flat");
    fs::create_directories(flat_dir);
    {
        std::ofstream e(flat_dir / "events.tsv");
        e << "cited_id\tcited_pub_year\tciting_id\tciting_journal\tcitation_year\n"
          << "A\t2000\tC1\tJ\t2000\nA\t2000\tC2\tJ\t2000\nA\t2000\tC3\tJ\t2001\nA\t2000\tC4\tJ\t2001\n";
        std::ofstream s(flat_dir / "scores.tsv");
        s << "journal\tyear\teigenfactor\talpha\tarticle_influence\n";
    }
    auto flat = run({"fit-decay", "--events", (flat_dir / "events.tsv").string(), "--scores",
                     (flat_dir / "scores.tsv").string(), "--out", flat_dir.string()});
    CHECK(flat.code == 0);
    CHECK(flat.err.find("warning") != std::string::npos);

    auto thin = run({"fit-decay", "--events", fx("clean_events.tsv"), "--scores", fx("clean_scores.tsv"),
                     "--start-age", "3", "--out", flat_dir.string()});
    CHECK(thin.code != 0);

    fs::remove_all(gen_dir);
    fs::remove_all(fit_dir);
    fs::remove_all(flat_dir);
}

TEST_CASE("crsm on the 22-article score table") {
    auto dir = scratch("crsm");
    auto r = run(crsm_args(dir, "member"));
    REQUIRE(r.code == 0);
    std::map<std::string, double> delta;
    std::istringstream in(slurp(dir / "crsm.tsv"));
    std::string line;
    std::getline(in, line);
    CHECK(line == "cited_id\tcitation_count\tweighted_citation\tcitation_rank\tweighted_rank\tfactor\tintermedium\tdelta");
    while (std::getline(in, line)) {
        auto f = wcite::split_fields(line, '\t');
        REQUIRE(f.size() == 8);
        delta[f[0].substr(0, f[0].find(','))] = std::stod(f[7]);
    }
    CHECK(std::abs(delta.at("SPINK A") - 0.00) < 0.005);
    CHECK(std::abs(delta.at("SMALL H") - 3.00) < 0.005);
    CHECK(std::abs(delta.at("KLING R") - 3.01) < 0.005);
    for (const char* f : {"delta_distribution.tsv", "top_delta_desc.tsv", "top_delta_asc.tsv", "quadrants.tsv", "qq.tsv"})
        CHECK(fs::exists(dir / f));
    fs::remove_all(dir);
}

TEST_CASE("crsm of a single article gives zero delta") {
    auto dir = scratch("single");
    fs::create_directories(dir);
    {
        std::ofstream t(dir / "one.tsv");
        t << "cited_id\tcitation_count\tweighted_citation\tmissing_journal_events\nONLY\t9\t4.5\t0\n";
    }
    auto r = run({"crsm", "--score-table", (dir / "one.tsv").string(), "--out", dir.string()});
    REQUIRE(r.code == 0);
    CHECK(slurp(dir / "crsm.tsv").find("ONLY\t9\t4.500000\t1\t1\t2.000000\t9.000000\t0.000000") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("report prints the summary and tables") {
    auto dir = scratch("report");
    auto r = run({"report", "--events", fx("clean_events.tsv"), "--scores", fx("clean_scores.tsv"), "--aliases",
                  fx("aliases.tsv"), "--out", dir.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("== summary ==") != std::string::npos);
    CHECK(r.out.find("linear_r2") != std::string::npos);
    for (const char* f : {"report_summary.tsv", "report_top_citation.tsv", "report_top_weighted.tsv",
                          "report_top_delta_desc.tsv", "report_top_delta_asc.tsv"})
        CHECK(fs::exists(dir / f));
    fs::remove_all(dir);
}

TEST_CASE("bad arguments are data errors") {
    CHECK(run({"score", "--events", fx("worked_events.tsv"), "--scores", fx("worked_scores.tsv"), "--missing-policy",
               "sometimes", "--out", scratch("x").string()})
              .code == 1);
    CHECK(run({"crsm", "--score-table", fx("table2_scores.tsv"), "--factor-rule", "other", "--out",
               scratch("x").string()})
              .code == 1);
    CHECK(run({"generate", "--journals", "0", "--out", scratch("x").string()}).code == 1);
    CHECK(run({"score", "--events", fx("worked_events.tsv")}).code == 1);
    CHECK(run({}).code != 0);
    fs::remove_all(scratch("x"));
}

TEST_CASE("every command is deterministic") {
    auto a = scratch("det_a"), b = scratch("det_b");
    for (const auto& dir : {a, b}) {
        REQUIRE(run({"generate", "--seed", "5", "--articles", "200", "--unscored-fraction", "0.2", "--out",
                     (dir / "gen").string()})
                    .code == 0);
        const std::string ev = (dir / "gen" / "events.tsv").string(), sc = (dir / "gen" / "scores.tsv").string();
        REQUIRE(run({"score", "--events", ev, "--scores", sc, "--universe", (dir / "gen" / "universe.txt").string(),
                     "--out", (dir / "score").string()})
                    .code == 0);
        REQUIRE(run({"fit-decay", "--events", ev, "--scores", sc, "--out", (dir / "fit").string()}).code == 0);
        REQUIRE(run({"crsm", "--events", ev, "--scores", sc, "--out", (dir / "crsm").string()}).code == 0);
        REQUIRE(run({"report", "--events", ev, "--scores", sc, "--out", (dir / "report").string()}).code == 0);
    }
    std::size_t compared = 0;
    for (const auto& entry : fs::recursive_directory_iterator(a)) {
        if (!entry.is_regular_file()) continue;
        const auto rel = fs::relative(entry.path(), a);
        CHECK(slurp(entry.path()) == slurp(b / rel));
        ++compared;
    }
    CHECK(compared >= 18);
    fs::remove_all(a);
    fs::remove_all(b);
}
