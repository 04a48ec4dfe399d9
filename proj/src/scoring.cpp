#include "wcite/scoring.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <thread>

#include "wcite/errors.hpp"

namespace wcite {

double article_influence(double eigenfactor, double alpha) {
    if (!(alpha > 0.0)) throw NonPositiveAlpha();
    if (eigenfactor < 0.0) throw std::invalid_argument("eigenfactor must be non-negative");
    return 0.01 * eigenfactor / alpha;
}

MissingScorePolicy MissingScorePolicy::parse(std::string_view text) {
    if (text == "zero") return zero();
    constexpr std::string_view prefix = "nearest:";
    if (text.starts_with(prefix)) {
        auto digits = text.substr(prefix.size());
        int gap = -1;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), gap);
        if (ec == std::errc() && ptr == digits.data() + digits.size() && gap >= 0 && !digits.empty())
            return nearest(gap);
    }
    throw std::invalid_argument("missing-score policy must be 'zero' or 'nearest:K', got '" +
                                std::string(text) + "'");
}

std::string MissingScorePolicy::to_string() const {
    return mode == Mode::zero ? "zero" : "nearest:" + std::to_string(max_year_gap);
}

ResolvedInfluence resolve_influence(const Corpus& corpus, const std::string& journal, int year,
                                    const MissingScorePolicy& policy) {
    const auto* by_year = corpus.influence_by_year(journal);
    if (!by_year) return {0.0, true};
    if (auto it = by_year->find(year); it != by_year->end()) return {it->second, false};
    if (policy.mode == MissingScorePolicy::Mode::zero) return {0.0, true};

    auto after = by_year->lower_bound(year);
    const std::pair<const int, double>* best = nullptr;
    if (after != by_year->begin()) best = &*std::prev(after);
    if (after != by_year->end()) {
        // Strictly closer wins; on equal distance keep the earlier year.
        if (!best || after->first - year < year - best->first) best = &*after;
    }
    if (best && std::abs(best->first - year) <= policy.max_year_gap) return {best->second, false};
    return {0.0, true};
}

namespace {

ArticleScore score_events(const ArticleId& article, std::span<const CitationEvent> events,
                          const Corpus& corpus, const DecayParams& params,
                          const MissingScorePolicy& policy) {
    ArticleScore s;
    s.article = article;
    s.citation_count = static_cast<long long>(events.size());
    std::vector<double> terms;
    terms.reserve(events.size());
    for (const auto& e : events) {
        int interval = e.interval();
        if (interval < 0) {
            ++s.clamped_intervals;
            interval = 0;
        }
        const auto ai = resolve_influence(corpus, e.citing_journal, e.citation_year, policy);
        if (ai.missing) ++s.missing_journal_events;
        terms.push_back(weight(interval, params) * ai.value);
    }
    // Ascending summation: equal multisets of terms give bit-equal sums.
    std::sort(terms.begin(), terms.end());
    for (double t : terms) s.weighted_citation += t;
    return s;
}

} // namespace

ArticleScore weighted_citation(const ArticleId& article, const Corpus& corpus,
                               const DecayParams& params, const MissingScorePolicy& policy) {
    if (!corpus.contains(article)) throw UnknownArticle(article.str());
    return score_events(article, corpus.events_for(article), corpus, params, policy);
}

std::vector<ArticleScore> score_all(const Corpus& corpus, const DecayParams& params,
                                    const MissingScorePolicy& policy, unsigned threads) {
    // Events are sorted by cited article, so each article owns a contiguous run.
    struct Run {
        const ArticleId* article;
        std::span<const CitationEvent> events;
    };
    std::vector<Run> runs;
    const auto& events = corpus.events();
    for (std::size_t i = 0; i < events.size();) {
        std::size_t j = i;
        while (j < events.size() && events[j].cited == events[i].cited) ++j;
        runs.push_back({&events[i].cited, std::span(events).subspan(i, j - i)});
        i = j;
    }

    std::vector<ArticleScore> out(runs.size());
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k)
            out[k] = score_events(*runs[k].article, runs[k].events, corpus, params, policy);
    };

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, runs.size() / 256 + 1));
    if (threads <= 1) {
        work(0, runs.size());
    } else {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (runs.size() + threads - 1) / threads;
        for (std::size_t b = 0; b < runs.size(); b += chunk)
            pool.emplace_back(work, b, std::min(runs.size(), b + chunk));
    }
    return out;
}

long long weighted_h_index(std::span<const double> values) {
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    long long h = 0;
    while (h < static_cast<long long>(sorted.size()) &&
           sorted[static_cast<std::size_t>(h)] >= static_cast<double>(h + 1))
        ++h;
    return h;
}

AuthorScore author_weighted_citation(std::string author, std::vector<ArticleId> publications,
                                     std::span<const ArticleScore> scores) {
    std::map<ArticleId, double> lookup;
    for (const auto& s : scores) lookup.emplace(s.article, s.weighted_citation);

    AuthorScore result;
    result.author = std::move(author);
    std::vector<double> values;
    values.reserve(publications.size());
    for (const auto& p : publications) {
        auto it = lookup.find(p);
        if (it == lookup.end()) throw UnknownArticle(p.str());
        values.push_back(it->second);
        result.weighted_citation_total += it->second;
    }
    result.weighted_h_index = weighted_h_index(values);
    result.publications = std::move(publications);
    return result;
}

} // namespace wcite
