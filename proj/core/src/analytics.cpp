#include "citemetrics/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "citemetrics/citation_graph.hpp"
#include "citemetrics/indices.hpp"

namespace citemetrics::analytics {

std::vector<DistributionPoint> distribution_series(
    std::span<const IndexReport> reports, OrderBy order_by) {
  std::vector<DistributionPoint> series;
  series.reserve(reports.size());
  for (const IndexReport& report : reports) {
    series.push_back({0, report.author, report.h, report.a});
  }

  auto key = [order_by](const DistributionPoint& p) {
    return order_by == OrderBy::h ? p.h : p.a;
  };
  std::sort(series.begin(), series.end(),
            [&](const DistributionPoint& lhs, const DistributionPoint& rhs) {
              if (key(lhs) != key(rhs)) return key(lhs) > key(rhs);
              return lhs.author < rhs.author;
            });
  for (std::size_t i = 0; i < series.size(); ++i) series[i].rank = i + 1;
  return series;
}

double pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw std::invalid_argument("pearson: column lengths differ");
  }
  if (xs.size() < 2) {
    throw UndefinedCorrelationError("pearson: need at least two points");
  }

  const double count = static_cast<double>(xs.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= count;
  mean_y /= count;

  double sum_xy = 0.0;
  double sum_xx = 0.0;
  double sum_yy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mean_x;
    const double dy = ys[i] - mean_y;
    sum_xy += dx * dy;
    sum_xx += dx * dx;
    sum_yy += dy * dy;
  }
  if (sum_xx == 0.0 || sum_yy == 0.0) {
    throw UndefinedCorrelationError("pearson: zero variance column");
  }
  return std::clamp(sum_xy / std::sqrt(sum_xx * sum_yy), -1.0, 1.0);
}

namespace {

// Fractional ranks, ties averaged.
std::vector<double> rankify(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t lhs, std::size_t rhs) {
    return values[lhs] < values[rhs];
  });

  std::vector<double> ranks(values.size(), 0.0);
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    const double shared = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = shared;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

double spearman(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw std::invalid_argument("spearman: column lengths differ");
  }
  const std::vector<double> rx = rankify(xs);
  const std::vector<double> ry = rankify(ys);
  return pearson(rx, ry);
}

std::vector<IndexReport> rank_authors(std::span<const IndexReport> reports,
                                      RankMetric metric, std::size_t top_k) {
  std::vector<IndexReport> ranked(reports.begin(), reports.end());

  auto before = [metric](const IndexReport& lhs, const IndexReport& rhs) {
    if (metric == RankMetric::h) {
      if (lhs.h != rhs.h) return lhs.h > rhs.h;
    } else {
      const bool lhs_defined = lhs.corrected.has_value();
      const bool rhs_defined = rhs.corrected.has_value();
      if (lhs_defined != rhs_defined) return lhs_defined;
      if (lhs_defined && *lhs.corrected != *rhs.corrected) {
        return *lhs.corrected > *rhs.corrected;
      }
    }
    return lhs.author < rhs.author;
  };
  std::sort(ranked.begin(), ranked.end(), before);
  if (ranked.size() > top_k) ranked.resize(top_k);
  return ranked;
}

std::vector<BombFinding> detect_citation_bombs(const Corpus& corpus, int k) {
  if (k < 2) {
    throw std::invalid_argument("bomb detection threshold must be at least 2");
  }

  std::vector<BombFinding> findings;
  for (const auto& [citing_id, citing] : corpus.papers()) {
    // Distinct cited publications per target author. References are unique,
    // and author lists hold each key once, so plain counting is exact.
    std::unordered_map<AuthorKey, int> per_author;
    for (const PaperId& ref : citing.references) {
      const Paper* target = corpus.find(ref);
      for (const AuthorKey& author : target->authors) {
        ++per_author[author];
      }
    }
    for (const auto& [author, distinct] : per_author) {
      if (distinct >= k) {
        findings.push_back({citing_id, author, distinct,
                            static_cast<int>(citing.authors.size())});
      }
    }
  }

  std::sort(findings.begin(), findings.end(),
            [](const BombFinding& lhs, const BombFinding& rhs) {
              if (lhs.distinct_targets_cited != rhs.distinct_targets_cited) {
                return lhs.distinct_targets_cited > rhs.distinct_targets_cited;
              }
              if (lhs.citing_paper != rhs.citing_paper) {
                return lhs.citing_paper < rhs.citing_paper;
              }
              return lhs.target_author < rhs.target_author;
            });
  return findings;
}

std::set<AnomalyFlag> anomaly_flags(const IndexReport& report,
                                    const CorrectionContext& ctx, double low,
                                    double high) {
  if (!(low > 0.0) || !(low <= high)) {
    throw std::invalid_argument("anomaly thresholds need 0 < low <= high");
  }

  // x and n are recomputed under ctx.r; report.x may predate this context.
  std::set<AnomalyFlag> flags;
  const auto x = indices::xa_ratio(report.h, report.a, ctx.r);
  if (!x) return flags;
  const double n = static_cast<double>(report.h) / ctx.r;
  const double a = static_cast<double>(report.a);
  if (a > n && *x <= high) {
    flags.insert(AnomalyFlag::citers_above_normal);
  } else if (a < n && *x <= low) {
    flags.insert(AnomalyFlag::citers_below_normal);
  }
  return flags;
}

std::vector<PolicyDelta> compare_policies(const Corpus& corpus,
                                          const CorrectionContext& ctx_include,
                                          const CorrectionContext& ctx_exclude) {
  if (!ctx_exclude.bomb_policy.excludes()) {
    throw std::invalid_argument("ctx_exclude must carry an exclude bomb policy");
  }

  const auto include_profiles =
      graph::build_profiles(corpus, {ctx_include.bomb_policy, true});
  const auto exclude_profiles =
      graph::build_profiles(corpus, {ctx_exclude.bomb_policy, true});

  std::vector<PolicyDelta> deltas;
  deltas.reserve(include_profiles.size());
  for (const auto& [author, included] : include_profiles) {
    const AuthorProfile& excluded = exclude_profiles.at(author);

    std::vector<int> counts;
    counts.reserve(included.publication_citations.size());
    for (const auto& [id, count] : included.publication_citations) {
      counts.push_back(count);
    }
    std::vector<int> counts_excl;
    counts_excl.reserve(excluded.publication_citations.size());
    for (const auto& [id, count] : excluded.publication_citations) {
      counts_excl.push_back(count);
    }

    PolicyDelta delta;
    delta.author = author;
    delta.h_include = indices::h_index(counts);
    delta.a_include = indices::ah_index(included.citer_response);
    delta.h_exclude = indices::h_index(counts_excl);
    delta.a_exclude = indices::ah_index(excluded.citer_response);
    deltas.push_back(std::move(delta));
  }
  return deltas;
}

}  // namespace citemetrics::analytics
