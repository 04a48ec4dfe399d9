#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "wcite/decay.hpp"
#include "wcite/errors.hpp"
#include "wcite/scoring.hpp"
#include "wcite/synthgen.hpp"

using namespace wcite;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path scratch(const std::string& name) {
    auto dir = fs::temp_directory_path() / ("wcite_synthgen_" + name);
    fs::remove_all(dir);
    return dir;
}

} // namespace

TEST_CASE("lcg matches the MMIX recurrence") {
    Lcg64 rng(1);
    CHECK(rng.next() == 7806831264735756412ULL);
    CHECK(rng.next() == 9396908728118811419ULL);
    CHECK(rng.next() == 11960119808228829710ULL);
    Lcg64 again(1);
    CHECK(again.uniform() == 0.42320917087271326);
    for (int i = 0; i < 1000; ++i) {
        const double u = again.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        const long long k = again.uniform_int(-3, 4);
        CHECK(k >= -3);
        CHECK(k <= 4);
    }
}

TEST_CASE("generate with zero articles is empty") {
    GenSpec spec;
    spec.n_articles = 0;
    auto gen = generate(spec);
    CHECK(gen.events.empty());
    CHECK(gen.scores.empty());
    CHECK(gen.universe.empty());
    CHECK(gen.ground_truth.empty());
}

TEST_CASE("generate rejects invalid specs") {
    GenSpec spec;
    spec.n_journals = 0;
    CHECK_THROWS_AS(generate(spec), InvalidSpec);
    spec = GenSpec{};
    spec.lambda_true = 0.0;
    CHECK_THROWS_AS(generate(spec), InvalidSpec);
    spec = GenSpec{};
    spec.pub_year_min = 2010;
    spec.pub_year_max = 2000;
    CHECK_THROWS_AS(generate(spec), InvalidSpec);
    spec = GenSpec{};
    spec.unscored_fraction = 1.5;
    CHECK_THROWS_AS(generate(spec), InvalidSpec);
    spec = GenSpec{};
    spec.ai = UniformAi{2.0, 1.0};
    CHECK_THROWS_AS(generate(spec), InvalidSpec);
    CHECK_THROWS_AS(parse_ai_distribution("gamma:1:2"), InvalidSpec);
    CHECK_THROWS_AS(parse_count_distribution("fixed"), InvalidSpec);
    CHECK_THROWS_AS(parse_count_distribution("uniform:1"), InvalidSpec);
}

TEST_CASE("distribution parsing") {
    auto ai = parse_ai_distribution("two-point:0.5:4:0.25");
    REQUIRE(std::holds_alternative<TwoPointAi>(ai));
    CHECK(std::get<TwoPointAi>(ai).p_high == 0.25);
    auto c = parse_count_distribution("geometric:3.5");
    REQUIRE(std::holds_alternative<GeometricCount>(c));
    CHECK(std::get<GeometricCount>(c).mean == 3.5);
    CHECK(std::holds_alternative<FixedCount>(parse_count_distribution("fixed:4")));
}

TEST_CASE("unit AI and no decay gives ground truth equal to the count") {
    GenSpec spec;
    spec.seed = 4;
    spec.n_articles = 50;
    spec.ai = UniformAi{1.0, 1.0};
    spec.max_age = 0;
    auto gen = generate(spec);
    REQUIRE_FALSE(gen.ground_truth.empty());
    for (const auto& t : gen.ground_truth) CHECK(t.weighted_citation == static_cast<double>(t.citation_count));
    for (const auto& e : gen.events) CHECK(e.citation_year == e.cited_pub_year);
}

TEST_CASE("fixed counts and unscored journals") {
    GenSpec spec;
    spec.seed = 8;
    spec.n_articles = 30;
    spec.citations = FixedCount{3};
    spec.unscored_fraction = 1.0;
    auto gen = generate(spec);
    CHECK(gen.events.size() == 90);
    CHECK(gen.scores.empty());
    for (const auto& t : gen.ground_truth) {
        CHECK(t.citation_count == 3);
        CHECK(t.missing_journal_events == 3);
        CHECK(t.weighted_citation == 0.0);
    }
}

TEST_CASE("same seed gives identical files, different seeds differ") {
    GenSpec spec;
    spec.seed = 1234;
    spec.n_articles = 40;
    spec.unscored_fraction = 0.1;
    auto a = scratch("a"), b = scratch("b"), c = scratch("c");
    write_generated(a, generate(spec));
    write_generated(b, generate(spec));
    for (const char* name : {"events.tsv", "scores.tsv", "ground_truth.tsv", "universe.txt"}) {
        CHECK(slurp(a / name) == slurp(b / name));
        CHECK_FALSE(slurp(a / name).empty());
    }
    spec.seed = 1235;
    write_generated(c, generate(spec));
    CHECK(slurp(a / "events.tsv") != slurp(c / "events.tsv"));
    fs::remove_all(a);
    fs::remove_all(b);
    fs::remove_all(c);
}

TEST_CASE("ground truth agrees with score_all and the brute-force oracle") {
    for (std::uint64_t seed = 100; seed < 130; ++seed) {
        GenSpec spec;
        spec.seed = seed;
        spec.n_articles = 20;
        spec.lambda_true = 0.05 + 0.02 * static_cast<double>(seed % 10);
        spec.unscored_fraction = 0.25;
        spec.ai = TwoPointAi{0.2, 6.0, 0.3};
        auto gen = generate(spec);
        auto scores = score_all(gen.corpus, DecayParams(spec.lambda_true), MissingScorePolicy::zero());
        auto brute = oracle::brute_force_scores(gen.events, gen.scores, spec.lambda_true);
        REQUIRE(scores.size() == gen.ground_truth.size());
        for (std::size_t i = 0; i < scores.size(); ++i) {
            const auto& t = gen.ground_truth[i];
            CHECK(scores[i].article == t.article);
            CHECK(scores[i].citation_count == t.citation_count);
            CHECK(scores[i].missing_journal_events == t.missing_journal_events);
            CHECK(oracle::close_rel(scores[i].weighted_citation, t.weighted_citation, 1e-9));
            CHECK(oracle::close_rel(brute.at(t.article.str()).weighted, t.weighted_citation, 1e-9));
        }
    }
}

TEST_CASE("decay fit recovers lambda_true from a large corpus") {
    GenSpec spec;
    spec.seed = 2024;
    spec.n_articles = 6000;
    spec.citations = GeometricCount{10.0};
    spec.max_age = 30;
    auto gen = generate(spec);
    REQUIRE(gen.events.size() >= 50000);
    auto fit = fit_lambda(age_histogram(gen.corpus), 0);
    CHECK(std::abs(fit.lambda - 0.117) <= 0.01);
}
