#include "wcite/synthgen.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>

#include <fmt/format.h>

#include "wcite/errors.hpp"
#include "wcite/ingest.hpp"
#include "wcite/textio.hpp"

namespace wcite {

long long Lcg64::uniform_int(long long lo, long long hi) {
    const double span = static_cast<double>(hi - lo) + 1.0;
    return std::min(hi, lo + static_cast<long long>(std::floor(uniform() * span)));
}

void validate(const GenSpec& spec) {
    auto fail = [](const std::string& why) { throw InvalidSpec("invalid GenSpec: " + why); };
    if (spec.n_articles < 0) fail("n_articles must be >= 0");
    if (spec.n_journals < 1) fail("n_journals must be >= 1");
    if (!is_valid_year(spec.pub_year_min) || !is_valid_year(spec.pub_year_max) ||
        spec.pub_year_min > spec.pub_year_max)
        fail("publication year range must be two 4-digit years, min <= max");
    if (!(spec.lambda_true > 0.0) || !std::isfinite(spec.lambda_true)) fail("lambda_true must be positive");
    if (spec.max_age && *spec.max_age < 0) fail("max_age must be >= 0");
    if (!(spec.unscored_fraction >= 0.0 && spec.unscored_fraction <= 1.0))
        fail("unscored_fraction must lie in [0, 1]");
    std::visit(
        [&](const auto& d) {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, UniformAi>) {
                if (!(d.lo >= 0.0 && d.lo <= d.hi && std::isfinite(d.hi))) fail("uniform AI needs 0 <= lo <= hi");
            } else {
                if (!(d.low >= 0.0 && d.high >= 0.0 && std::isfinite(d.high)))
                    fail("two-point AI values must be non-negative");
                if (!(d.p_high >= 0.0 && d.p_high <= 1.0)) fail("two-point p_high must lie in [0, 1]");
            }
        },
        spec.ai);
    std::visit(
        [&](const auto& d) {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, FixedCount>) {
                if (d.n < 0) fail("fixed citation count must be >= 0");
            } else if constexpr (std::is_same_v<T, UniformCount>) {
                if (d.lo < 0 || d.lo > d.hi) fail("uniform citation count needs 0 <= lo <= hi");
            } else {
                if (!(d.mean >= 0.0) || !std::isfinite(d.mean)) fail("geometric mean must be >= 0");
            }
        },
        spec.citations);
}

namespace {

std::vector<double> parse_numbers(std::string_view text, std::string_view kind, std::size_t expected) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto pos = text.find(':', start);
        auto piece = text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start);
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
        if (ec != std::errc() || ptr != piece.data() + piece.size() || piece.empty())
            throw InvalidSpec("cannot parse " + std::string(kind) + " parameter '" + std::string(piece) + "'");
        out.push_back(v);
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    if (out.size() != expected)
        throw InvalidSpec(std::string(kind) + " expects " + std::to_string(expected) + " parameters");
    return out;
}

std::pair<std::string_view, std::string_view> split_kind(std::string_view text) {
    auto pos = text.find(':');
    if (pos == std::string_view::npos) throw InvalidSpec("distribution needs parameters: '" + std::string(text) + "'");
    return {text.substr(0, pos), text.substr(pos + 1)};
}

long long draw_count(Lcg64& rng, const CountDistribution& dist) {
    return std::visit(
        [&](const auto& d) -> long long {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, FixedCount>) {
                return d.n;
            } else if constexpr (std::is_same_v<T, UniformCount>) {
                return rng.uniform_int(d.lo, d.hi);
            } else {
                const double u = 1.0 - rng.uniform();  // (0, 1]
                if (d.mean == 0.0) return 0;
                const double q = d.mean / (1.0 + d.mean);  // failure probability
                return static_cast<long long>(std::floor(std::log(u) / std::log(q)));
            }
        },
        dist);
}

double draw_ai(Lcg64& rng, const AiDistribution& dist) {
    return std::visit(
        [&](const auto& d) -> double {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, UniformAi>) {
                return d.lo + (d.hi - d.lo) * rng.uniform();
            } else {
                return rng.bernoulli(d.p_high) ? d.high : d.low;
            }
        },
        dist);
}

// Inverse CDF of P(age = a) proportional to exp(-lambda a), a = 0..max_age.
int draw_age(Lcg64& rng, double lambda, int max_age) {
    const double u = rng.uniform();
    const double mass = -std::expm1(-lambda * (static_cast<double>(max_age) + 1.0));
    const double a = std::floor(-std::log1p(-u * mass) / lambda);
    return static_cast<int>(std::clamp(a, 0.0, static_cast<double>(max_age)));
}

} // namespace

AiDistribution parse_ai_distribution(std::string_view text) {
    auto [kind, params] = split_kind(text);
    if (kind == "uniform") {
        auto v = parse_numbers(params, "uniform AI", 2);
        return UniformAi{v[0], v[1]};
    }
    if (kind == "two-point") {
        auto v = parse_numbers(params, "two-point AI", 3);
        return TwoPointAi{v[0], v[1], v[2]};
    }
    throw InvalidSpec("unknown AI distribution '" + std::string(kind) + "'");
}

CountDistribution parse_count_distribution(std::string_view text) {
    auto [kind, params] = split_kind(text);
    if (kind == "fixed") {
        auto v = parse_numbers(params, "fixed count", 1);
        return FixedCount{static_cast<long long>(v[0])};
    }
    if (kind == "uniform") {
        auto v = parse_numbers(params, "uniform count", 2);
        return UniformCount{static_cast<long long>(v[0]), static_cast<long long>(v[1])};
    }
    if (kind == "geometric") {
        auto v = parse_numbers(params, "geometric count", 1);
        return GeometricCount{v[0]};
    }
    throw InvalidSpec("unknown citation-count distribution '" + std::string(kind) + "'");
}

Generated generate(const GenSpec& spec) {
    validate(spec);
    Lcg64 rng(spec.seed);
    Generated gen;

    std::vector<std::string> journals;
    std::vector<bool> scored;
    for (int j = 0; j < spec.n_journals; ++j) {
        journals.push_back(fmt::format("J{:04d}", j));
        scored.push_back(!rng.bernoulli(spec.unscored_fraction));
    }

    std::map<JournalYear, double> ai_table;
    long long citing_serial = 0;
    for (int i = 0; i < spec.n_articles; ++i) {
        ArticleId article(fmt::format("ART{:06d}", i));
        gen.universe.push_back(article);
        const int pub_year = static_cast<int>(rng.uniform_int(spec.pub_year_min, spec.pub_year_max));
        const long long count = draw_count(rng, spec.citations);
        const int age_cap = std::min(spec.max_age.value_or(9999), 9999 - pub_year);

        ArticleScore truth;
        truth.article = article;
        for (long long c = 0; c < count; ++c) {
            const int age = draw_age(rng, spec.lambda_true, age_cap);
            const auto j = static_cast<std::size_t>(rng.uniform_int(0, spec.n_journals - 1));
            const int year = pub_year + age;
            double ai = 0.0;
            if (scored[j]) {
                auto [it, fresh] = ai_table.try_emplace({journals[j], year}, 0.0);
                if (fresh) it->second = draw_ai(rng, spec.ai);
                ai = it->second;
            } else {
                ++truth.missing_journal_events;
            }
            gen.events.push_back({article, pub_year, ArticleId(fmt::format("CIT{:08d}", citing_serial++)),
                                  journals[j], year});
            ++truth.citation_count;
            truth.weighted_citation += std::exp(-spec.lambda_true * age) * ai;
        }
        if (truth.citation_count > 0) gen.ground_truth.push_back(std::move(truth));
    }

    for (const auto& [key, ai] : ai_table) {
        JournalYearScore row;
        row.journal = key.first;
        row.year = key.second;
        row.article_influence = ai;
        gen.scores.push_back(std::move(row));
    }
    gen.corpus = build_corpus(gen.events, gen.scores);
    return gen;
}

void write_generated(const std::filesystem::path& dir, const Generated& gen, char delimiter) {
    std::filesystem::create_directories(dir);
    auto open = [&](const char* name) {
        std::ofstream out(dir / name, std::ios::binary | std::ios::trunc);
        if (!out) throw FileUnreadable((dir / name).string());
        return out;
    };
    {
        auto out = open("events.tsv");
        write_events(out, gen.events, delimiter);
    }
    {
        auto out = open("scores.tsv");
        write_scores(out, gen.scores, delimiter);
    }
    {
        auto out = open("ground_truth.tsv");
        out << "cited_id" << delimiter << "citation_count" << delimiter << "weighted_citation" << delimiter
            << "missing_journal_events\n";
        for (const auto& t : gen.ground_truth)
            out << t.article.str() << delimiter << t.citation_count << delimiter
                << format_shortest(t.weighted_citation) << delimiter << t.missing_journal_events << '\n';
    }
    {
        auto out = open("universe.txt");
        for (const auto& a : gen.universe) out << a.str() << '\n';
    }
}

} // namespace wcite
