#pragma once

// Writers for the pipeline's output files. Machine-readable files carry
// reals in fixed 6-decimal notation; the human report tables use 2 decimals
// to match the usual published layout.

#include <iosfwd>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "wcite/analytics.hpp"
#include "wcite/corpus.hpp"
#include "wcite/crsm.hpp"
#include "wcite/decay.hpp"

namespace wcite {

// cited_id, citation_count, weighted_citation, missing_journal_events
void write_score_file(std::ostream& out, std::span<const ArticleScore> scores, char delimiter = '\t');

// key/value rows; `decimals` applies to the ratio fields.
void write_summary_file(std::ostream& out, const CorpusSummary& summary, int decimals = 6,
                        char delimiter = '\t');

// cited_id, citation_count, weighted_citation, citation_rank, weighted_rank,
// factor, intermedium, delta
void write_crsm_file(std::ostream& out, std::span<const CrsmRow> rows, char delimiter = '\t');

void write_delta_distribution(std::ostream& out, const DeltaDistribution& dist, char delimiter = '\t');

// cited_id, citation_count, weighted_citation, citation_rank,
// weighted_rank, intermedium, delta (2 decimals)
void write_report_table(std::ostream& out, std::span<const ReportRow> rows, char delimiter = '\t');

void write_quadrants(std::ostream& out, std::span<const ArticleScore> scores,
                     const std::map<ArticleId, Quadrant>& labels, char delimiter = '\t');

void write_qq_points(std::ostream& out, std::span<const std::pair<double, double>> points,
                     char delimiter = '\t');

void write_decay_fit(std::ostream& out, const DecayFit& fit, char delimiter = '\t');
void write_age_histogram(std::ostream& out, const AgeHistogram& hist, char delimiter = '\t');

} // namespace wcite
