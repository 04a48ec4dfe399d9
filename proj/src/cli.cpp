#include "wcite/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "wcite/analytics.hpp"
#include "wcite/crsm.hpp"
#include "wcite/decay.hpp"
#include "wcite/errors.hpp"
#include "wcite/ingest.hpp"
#include "wcite/report.hpp"
#include "wcite/scoring.hpp"
#include "wcite/synthgen.hpp"
#include "wcite/textio.hpp"

namespace fs = std::filesystem;

namespace wcite::cli {

char parse_delimiter(const std::string& text) {
    if (text == "\\t" || text == "tab" || text == "\t") return '\t';
    if (text == "comma") return ',';
    if (text.size() == 1 && text[0] != '\n' && text[0] != '\r' && text[0] != '"') return text[0];
    throw std::invalid_argument("delimiter must be a single character, got '" + text + "'");
}

namespace {

struct RunConfig {
    std::string events_path;
    std::string scores_path;
    std::string alias_path;
    std::string score_table_path;
    std::string universe_path;
    double lambda = kDefaultDecayLambda;
    std::string missing_policy = "zero";
    std::string start_age = "auto";
    std::size_t top = 20;
    std::string out_dir = ".";
    std::string delimiter = "\\t";
    std::string factor_rule = "positional";
    double bin_width = 1.0;
    std::optional<double> pop_threshold;
    std::optional<double> prestige_threshold;
};

struct GenerateConfig {
    std::uint64_t seed = 1;
    int articles = 100;
    int journals = 20;
    std::string years = "1998:2007";
    double lambda_true = kDefaultDecayLambda;
    std::string ai = "uniform:0.1:2";
    std::string citations = "geometric:5";
    std::optional<int> max_age;
    double unscored_fraction = 0.0;
    std::string out_dir = ".";
    std::string delimiter = "\\t";
};

// Throws FileUnreadable for any named path that does not exist.
void require_paths(std::initializer_list<const std::string*> paths) {
    for (const auto* p : paths)
        if (!p->empty() && !fs::is_regular_file(*p)) throw FileUnreadable(*p);
}

void write_file(const fs::path& path, const std::function<void(std::ostream&)>& body) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write file: " + path.string());
    body(out);
    if (!out) throw Error("write failed: " + path.string());
}

struct Loaded {
    EventsParse events;
    std::vector<JournalYearScore> scores;
    Corpus corpus;
};

Loaded load_corpus(const RunConfig& cfg, char delim) {
    if (cfg.events_path.empty() || cfg.scores_path.empty())
        throw std::invalid_argument("--events and --scores are required");
    require_paths({&cfg.events_path, &cfg.scores_path, &cfg.alias_path});
    AliasTable aliases;
    if (!cfg.alias_path.empty()) aliases = parse_aliases(cfg.alias_path, delim);
    Loaded l;
    l.events = parse_events(cfg.events_path, aliases, delim);
    l.scores = parse_scores(cfg.scores_path, aliases, delim);
    flag_unmatched_journals(l.events.report, l.events.events, l.scores);
    l.corpus = build_corpus(l.events.events, l.scores);
    return l;
}

std::vector<ArticleId> load_universe(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileUnreadable(path);
    std::vector<ArticleId> ids;
    std::string line;
    while (std::getline(in, line)) {
        ArticleId id(line);
        if (!id.empty()) ids.push_back(std::move(id));
    }
    return ids;
}

std::vector<ArticleId> universe_for(const RunConfig& cfg, const Corpus& corpus) {
    if (!cfg.universe_path.empty()) return load_universe(cfg.universe_path);
    std::vector<ArticleId> ids;
    for (const auto& [id, year] : corpus.article_pub_year()) ids.push_back(id);
    return ids;
}

void print_report(std::ostream& out, const IngestReport& r) {
    out << "events: rows_read " << r.rows_read << ", accepted " << r.rows_accepted() << ", rejected "
        << r.rows_rejected << '\n';
    for (const auto& rej : r.rejects) out << "  reject line " << rej.line << ": " << rej.reason << '\n';
    out << "journals_unmatched: " << r.journals_unmatched.size() << '\n';
    for (const auto& j : r.journals_unmatched) out << "  " << j << '\n';
}

int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const char delim = parse_delimiter(cfg.delimiter);
    if (cfg.events_path.empty() || cfg.scores_path.empty()) {
        err << "validate: --events and --scores are required\n";
        return kExitDataError;
    }
    require_paths({&cfg.events_path, &cfg.scores_path, &cfg.alias_path});
    AliasTable aliases;
    if (!cfg.alias_path.empty()) aliases = parse_aliases(cfg.alias_path, delim);

    auto parsed = parse_events(cfg.events_path, aliases, delim);
    bool ok = parsed.report.rows_rejected == 0;
    std::vector<JournalYearScore> scores;
    std::string scores_error;
    try {
        scores = parse_scores(cfg.scores_path, aliases, delim);
    } catch (const FileUnreadable&) {
        throw;
    } catch (const Error& e) {
        scores_error = e.what();
    }
    flag_unmatched_journals(parsed.report, parsed.events, scores);
    print_report(out, parsed.report);
    if (!scores_error.empty()) {
        out << "scores: reject " << scores_error << '\n';
        ok = false;
    } else {
        out << "scores: rows " << scores.size() << '\n';
        try {
            auto corpus = build_corpus(parsed.events, scores);
            out << "corpus: " << corpus.article_pub_year().size() << " cited articles, "
                << corpus.events().size() << " events\n";
        } catch (const Error& e) {
            out << "corpus: reject " << e.what() << '\n';
            ok = false;
        }
    }
    out << "status: " << (ok ? "OK" : "REJECTS") << '\n';
    return ok ? kExitOk : kExitDataError;
}

int cmd_score(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const char delim = parse_delimiter(cfg.delimiter);
    const DecayParams params(cfg.lambda);
    const auto policy = MissingScorePolicy::parse(cfg.missing_policy);
    require_paths({&cfg.universe_path});
    auto loaded = load_corpus(cfg, delim);
    if (loaded.events.report.rows_rejected > 0)
        err << "warning: " << loaded.events.report.rows_rejected << " event rows rejected (run validate)\n";

    const auto scores = score_all(loaded.corpus, params, policy, 0);
    const auto summary = corpus_summary(loaded.corpus, universe_for(cfg, loaded.corpus));
    const fs::path dir(cfg.out_dir);
    write_file(dir / "scores.tsv", [&](std::ostream& o) { write_score_file(o, scores, delim); });
    write_file(dir / "summary.tsv", [&](std::ostream& o) { write_summary_file(o, summary, 6, delim); });

    long long missing = 0, clamped = 0;
    for (const auto& s : scores) {
        missing += s.missing_journal_events;
        clamped += s.clamped_intervals;
    }
    out << "scored " << scores.size() << " articles from " << loaded.corpus.events().size() << " events"
        << " (lambda " << format_shortest(params.lambda()) << ", missing policy " << policy.to_string() << ")\n";
    out << "missing_journal_events " << missing << ", clamped_intervals " << clamped << '\n';
    out << "wrote " << (dir / "scores.tsv").string() << " and " << (dir / "summary.tsv").string() << '\n';
    return kExitOk;
}

int cmd_fit_decay(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const char delim = parse_delimiter(cfg.delimiter);
    std::optional<int> start;
    if (cfg.start_age != "auto") {
        try {
            std::size_t used = 0;
            start = std::stoi(cfg.start_age, &used);
            if (used != cfg.start_age.size() || *start < 0) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("--start-age must be 'auto' or a non-negative integer");
        }
    }
    auto loaded = load_corpus(cfg, delim);
    const auto hist = age_histogram(loaded.corpus);
    const auto fit = fit_lambda(hist, start);

    const fs::path dir(cfg.out_dir);
    write_file(dir / "decay_fit.tsv", [&](std::ostream& o) { write_decay_fit(o, fit, delim); });
    write_file(dir / "age_histogram.tsv", [&](std::ostream& o) { write_age_histogram(o, hist, delim); });
    out << "lambda " << format_fixed(fit.lambda, 6) << '\n';
    out << "r2 " << format_fixed(fit.r2, 6) << '\n';
    out << "start_age " << fit.start_age << " (" << (start ? "fixed" : "auto") << ")\n";
    out << "points " << fit.points << '\n';
    if (!(fit.lambda > 1e-9))
        err << "warning: fitted decay is not positive (lambda " << format_fixed(fit.lambda, 6)
            << "); citations do not decrease with age\n";
    return kExitOk;
}

std::vector<ArticleScore> scores_for(const RunConfig& cfg, char delim) {
    if (!cfg.score_table_path.empty()) {
        require_paths({&cfg.score_table_path});
        return parse_score_table(cfg.score_table_path, delim);
    }
    const DecayParams params(cfg.lambda);
    const auto policy = MissingScorePolicy::parse(cfg.missing_policy);
    auto loaded = load_corpus(cfg, delim);
    return score_all(loaded.corpus, params, policy, 0);
}

int cmd_crsm(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const char delim = parse_delimiter(cfg.delimiter);
    const auto rule = parse_factor_rule(cfg.factor_rule);
    if (cfg.top < 1) throw std::invalid_argument("--top must be at least 1");
    const auto scores = scores_for(cfg, delim);
    const auto rows = crsm(scores, rule);
    const auto dist = delta_distribution(rows, cfg.bin_width);
    const auto labels = classify_quadrants(scores, cfg.pop_threshold, cfg.prestige_threshold);
    const auto desc = top_n_report(scores, rows, cfg.top, ReportOrder::delta_desc);
    const auto asc = top_n_report(scores, rows, cfg.top, ReportOrder::delta_asc);
    const auto qq = qq_points(rows);

    const fs::path dir(cfg.out_dir);
    write_file(dir / "crsm.tsv", [&](std::ostream& o) { write_crsm_file(o, rows, delim); });
    write_file(dir / "delta_distribution.tsv", [&](std::ostream& o) { write_delta_distribution(o, dist, delim); });
    write_file(dir / "top_delta_desc.tsv", [&](std::ostream& o) { write_report_table(o, desc, delim); });
    write_file(dir / "top_delta_asc.tsv", [&](std::ostream& o) { write_report_table(o, asc, delim); });
    write_file(dir / "quadrants.tsv", [&](std::ostream& o) { write_quadrants(o, scores, labels, delim); });
    write_file(dir / "qq.tsv", [&](std::ostream& o) { write_qq_points(o, qq, delim); });

    std::size_t zero_groups = 0;
    for (const auto& r : rows) zero_groups += r.zero_weight_denominator ? 1 : 0;
    std::map<Quadrant, std::size_t> per_quadrant;
    for (const auto& [id, q] : labels) ++per_quadrant[q];

    out << "crsm over " << rows.size() << " articles (factor rule " << to_string(rule) << ")\n";
    out << "delta mean " << format_fixed(dist.mean, 4) << ", std " << format_fixed(dist.std, 4)
        << ", excess kurtosis " << (dist.excess_kurtosis ? format_fixed(*dist.excess_kurtosis, 4) : "NA") << '\n';
    if (zero_groups > 0) out << "warning: " << zero_groups << " rows in zero-weight groups (delta = count)\n";
    for (const auto& [q, n] : per_quadrant) out << "  " << to_string(q) << ' ' << n << '\n';
    return kExitOk;
}

void print_table(std::ostream& out, const std::string& title, std::span<const ReportRow> rows, char delim) {
    out << "== " << title << " ==\n";
    write_report_table(out, rows, delim);
    out << '\n';
}

int cmd_report(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const char delim = parse_delimiter(cfg.delimiter);
    const auto rule = parse_factor_rule(cfg.factor_rule);
    if (cfg.top < 1) throw std::invalid_argument("--top must be at least 1");
    const fs::path dir(cfg.out_dir);

    std::vector<ArticleScore> scores;
    if (cfg.score_table_path.empty()) {
        require_paths({&cfg.universe_path});
        const DecayParams params(cfg.lambda);
        const auto policy = MissingScorePolicy::parse(cfg.missing_policy);
        auto loaded = load_corpus(cfg, delim);
        scores = score_all(loaded.corpus, params, policy, 0);
        const auto summary = corpus_summary(loaded.corpus, universe_for(cfg, loaded.corpus));
        write_file(dir / "report_summary.tsv", [&](std::ostream& o) { write_summary_file(o, summary, 2, delim); });
        out << "== summary ==\n";
        write_summary_file(out, summary, 2, delim);
        out << '\n';
    } else {
        scores = scores_for(cfg, delim);
    }
    if (scores.empty()) {
        out << "no cited articles\n";
        return kExitOk;
    }

    const auto rows = crsm(scores, rule);
    std::vector<std::pair<double, double>> points;
    for (const auto& s : scores) points.emplace_back(s.weighted_citation, static_cast<double>(s.citation_count));
    std::string r2 = "NA";
    try {
        r2 = format_fixed(linear_r2(points), 3);
    } catch (const std::exception&) {
    }

    const std::pair<const char*, ReportOrder> tables[] = {{"top_citation", ReportOrder::citation},
                                                          {"top_weighted", ReportOrder::weighted},
                                                          {"top_delta_desc", ReportOrder::delta_desc},
                                                          {"top_delta_asc", ReportOrder::delta_asc}};
    for (const auto& [name, order] : tables) {
        const auto table = top_n_report(scores, rows, cfg.top, order);
        write_file(dir / (std::string("report_") + name + ".tsv"),
                   [&](std::ostream& o) { write_report_table(o, table, delim); });
        print_table(out, name, table, delim);
    }
    out << "linear_r2(citation_count ~ weighted_citation) " << r2 << '\n';
    return kExitOk;
}

int cmd_generate(const GenerateConfig& g, std::ostream& out) {
    const char delim = parse_delimiter(g.delimiter);
    GenSpec spec;
    spec.seed = g.seed;
    spec.n_articles = g.articles;
    spec.n_journals = g.journals;
    {
        auto colon = g.years.find(':');
        if (colon == std::string::npos) throw InvalidSpec("--years must be MIN:MAX");
        try {
            spec.pub_year_min = std::stoi(g.years.substr(0, colon));
            spec.pub_year_max = std::stoi(g.years.substr(colon + 1));
        } catch (const std::exception&) {
            throw InvalidSpec("--years must be MIN:MAX");
        }
    }
    spec.lambda_true = g.lambda_true;
    spec.ai = parse_ai_distribution(g.ai);
    spec.citations = parse_count_distribution(g.citations);
    spec.max_age = g.max_age;
    spec.unscored_fraction = g.unscored_fraction;

    const auto gen = generate(spec);
    write_generated(g.out_dir, gen, delim);
    out << "generated " << gen.universe.size() << " articles, " << gen.events.size() << " events, "
        << gen.scores.size() << " score rows into " << g.out_dir << '\n';
    return kExitOk;
}

void add_input_options(CLI::App* sub, RunConfig& cfg, bool corpus_free) {
    sub->add_option("--events", cfg.events_path, "Citation events file");
    sub->add_option("--scores", cfg.scores_path, "Journal score table");
    sub->add_option("--aliases", cfg.alias_path, "Journal alias table (raw, canonical)");
    sub->add_option("--delimiter", cfg.delimiter, "Field delimiter (default tab)");
    if (corpus_free)
        sub->add_option("--score-table", cfg.score_table_path,
                        "Precomputed score table (cited_id, citation_count, weighted_citation, "
                        "missing_journal_events) used instead of --events/--scores");
}

void add_scoring_options(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--lambda", cfg.lambda, "Decay constant")->check(CLI::PositiveNumber);
    sub->add_option("--missing-policy", cfg.missing_policy, "zero | nearest:K");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"wcite: weighted citation (prestige) versus citation count (popularity) analytics"};
    app.name("wcite");
    app.require_subcommand(1);
    RunConfig cfg;
    GenerateConfig gcfg;

    auto* validate = app.add_subcommand("validate", "Parse inputs and print the ingest report");
    add_input_options(validate, cfg, false);

    auto* score = app.add_subcommand("score", "Write per-article scores and the corpus summary");
    add_input_options(score, cfg, false);
    add_scoring_options(score, cfg);
    score->add_option("--universe", cfg.universe_path, "All article ids, one per line (default: cited articles)");
    score->add_option("--out", cfg.out_dir, "Output directory");

    auto* fit = app.add_subcommand("fit-decay", "Fit the citation-age decay constant");
    add_input_options(fit, cfg, false);
    fit->add_option("--start-age", cfg.start_age, "auto | N");
    fit->add_option("--out", cfg.out_dir, "Output directory");

    auto* crsm_cmd = app.add_subcommand("crsm", "Citation ranking similarity measure and delta distribution");
    add_input_options(crsm_cmd, cfg, true);
    add_scoring_options(crsm_cmd, cfg);
    crsm_cmd->add_option("--factor-rule", cfg.factor_rule, "positional | member");
    crsm_cmd->add_option("--bin-width", cfg.bin_width, "Delta histogram bin width")->check(CLI::PositiveNumber);
    crsm_cmd->add_option("--pop-threshold", cfg.pop_threshold, "Citation-count threshold (default median)");
    crsm_cmd->add_option("--prestige-threshold", cfg.prestige_threshold, "Weighted threshold (default median)");
    crsm_cmd->add_option("--top", cfg.top, "Rows in the top-N tables");
    crsm_cmd->add_option("--out", cfg.out_dir, "Output directory");

    auto* report = app.add_subcommand("report", "Human-readable summary and top-N tables (2 decimals)");
    add_input_options(report, cfg, true);
    add_scoring_options(report, cfg);
    report->add_option("--universe", cfg.universe_path, "All article ids, one per line");
    report->add_option("--factor-rule", cfg.factor_rule, "positional | member");
    report->add_option("--top", cfg.top, "Rows per table");
    report->add_option("--out", cfg.out_dir, "Output directory");

    auto* gen = app.add_subcommand("generate", "Write a seeded synthetic corpus with ground truth");
    gen->add_option("--seed", gcfg.seed, "64-bit seed");
    gen->add_option("--articles", gcfg.articles, "Number of cited-candidate articles");
    gen->add_option("--journals", gcfg.journals, "Number of citing journals");
    gen->add_option("--years", gcfg.years, "Publication years MIN:MAX");
    gen->add_option("--lambda-true", gcfg.lambda_true, "Decay rate of citation ages");
    gen->add_option("--ai", gcfg.ai, "uniform:LO:HI | two-point:LOW:HIGH:P");
    gen->add_option("--citations", gcfg.citations, "fixed:N | uniform:LO:HI | geometric:MEAN");
    gen->add_option("--max-age", gcfg.max_age, "Largest citation age");
    gen->add_option("--unscored-fraction", gcfg.unscored_fraction, "Probability a journal has no scores");
    gen->add_option("--out", gcfg.out_dir, "Output directory");
    gen->add_option("--delimiter", gcfg.delimiter, "Field delimiter (default tab)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*validate) return cmd_validate(cfg, out, err);
        if (*score) return cmd_score(cfg, out, err);
        if (*fit) return cmd_fit_decay(cfg, out, err);
        if (*crsm_cmd) return cmd_crsm(cfg, out, err);
        if (*report) return cmd_report(cfg, out, err);
        if (*gen) return cmd_generate(gcfg, out);
    } catch (const FileUnreadable& e) {
        err << "error: " << e.what() << '\n';
        return kExitUnreadable;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitDataError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitDataError;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitDataError;
    }
    return kExitDataError;
}

} // namespace wcite::cli
