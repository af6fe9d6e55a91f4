#pragma once
// Population level analyses: distribution series, correlation, rankings,
// citation bomb detection, citer anomaly flags and include/exclude policy
// comparison.

#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include "citemetrics/corpus.hpp"

namespace citemetrics::analytics {

// Raised when a correlation is not defined (fewer than two points, length
// mismatch aside, or zero variance in either column).
struct UndefinedCorrelationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class OrderBy { h, a };

struct DistributionPoint {
  std::size_t rank = 0;  // 1-based
  AuthorKey author;
  int h = 0;
  int a = 0;

  bool operator==(const DistributionPoint&) const = default;
};

// Reports sorted descending by the chosen indicator (ties: ascending author),
// with both indicators emitted per rank.
std::vector<DistributionPoint> distribution_series(
    std::span<const IndexReport> reports, OrderBy order_by);

// Pearson product-moment coefficient, clamped to [-1, 1].
double pearson(std::span<const double> xs, std::span<const double> ys);

// Rank correlation: Pearson over fractional ranks (ties averaged).
double spearman(std::span<const double> xs, std::span<const double> ys);

enum class RankMetric { h, corrected };

// Top `top_k` reports by the metric, descending; ties resolve to ascending
// author. With the corrected metric, authors whose score is undefined sort
// after every defined score.
std::vector<IndexReport> rank_authors(std::span<const IndexReport> reports,
                                      RankMetric metric, std::size_t top_k);

// One citing paper that cites at least k distinct publications of one author.
struct BombFinding {
  PaperId citing_paper;
  AuthorKey target_author;
  int distinct_targets_cited = 0;
  int citing_author_count = 0;

  bool operator==(const BombFinding&) const = default;
};

// Every (citing paper, target author) pair where the paper cites >= k
// distinct publications of that author. Sorted by distinct_targets_cited
// descending, then citing paper, then target author. Requires k >= 2.
std::vector<BombFinding> detect_citation_bombs(const Corpus& corpus, int k);

enum class AnomalyFlag { citers_above_normal, citers_below_normal };

// Flags citer behavior far from the community normal: a above n with
// x <= high, or a below n with x <= low. Requires 0 < low <= high. Reports
// without a defined x never flag.
std::set<AnomalyFlag> anomaly_flags(const IndexReport& report,
                                    const CorrectionContext& ctx, double low,
                                    double high);

// Per-author h and a under the include policy versus a bomb-exclude policy.
// Removing citing papers can only lower both indicators.
struct PolicyDelta {
  AuthorKey author;
  int h_include = 0;
  int a_include = 0;
  int h_exclude = 0;
  int a_exclude = 0;

  int delta_h() const { return h_exclude - h_include; }
  int delta_a() const { return a_exclude - a_include; }

  bool operator==(const PolicyDelta&) const = default;
};

// Recomputes all profiles under both contexts; ctx_exclude must carry an
// exclude bomb policy. Results ordered by author.
std::vector<PolicyDelta> compare_policies(const Corpus& corpus,
                                          const CorrectionContext& ctx_include,
                                          const CorrectionContext& ctx_exclude);

}  // namespace citemetrics::analytics
