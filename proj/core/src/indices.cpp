#include "citemetrics/indices.hpp"

#include <algorithm>
#include <functional>

namespace citemetrics::indices {

namespace {

int largest_qualifying_rank(std::vector<int> counts) {
  std::sort(counts.begin(), counts.end(), std::greater<>());
  int rank = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] >= static_cast<int>(i) + 1) {
      rank = static_cast<int>(i) + 1;
    } else {
      break;
    }
  }
  return rank;
}

void require_positive_r(double r) {
  if (!(r > 0.0)) {
    throw std::invalid_argument("correction coefficient must be positive");
  }
}

}  // namespace

int h_index(std::span<const int> citation_counts) {
  return largest_qualifying_rank(
      std::vector<int>(citation_counts.begin(), citation_counts.end()));
}

std::vector<PaperId> hirsch_core(
    const std::map<PaperId, int>& publication_citations) {
  std::vector<int> counts;
  counts.reserve(publication_citations.size());
  for (const auto& [id, count] : publication_citations) counts.push_back(count);

  const int h = h_index(counts);
  std::vector<PaperId> core;
  if (h == 0) return core;
  for (const auto& [id, count] : publication_citations) {
    if (count >= h) core.push_back(id);
  }
  return core;  // map order, already sorted by id
}

int ah_index(const std::map<AuthorKey, int>& citer_response) {
  std::vector<int> counts;
  counts.reserve(citer_response.size());
  for (const auto& [citer, count] : citer_response) counts.push_back(count);
  return largest_qualifying_rank(std::move(counts));
}

double correction_coefficient(std::span<const std::pair<int, int>> h_a_pairs,
                              int h_threshold, RatioDefinition definition) {
  double ratio_sum = 0.0;
  double h_sum = 0.0;
  double a_sum = 0.0;
  std::size_t eligible = 0;
  for (const auto& [h, a] : h_a_pairs) {
    if (h < h_threshold || a < 1) continue;
    ratio_sum += static_cast<double>(h) / static_cast<double>(a);
    h_sum += h;
    a_sum += a;
    ++eligible;
  }
  if (eligible == 0) {
    throw PopulationEmptyError(
        "no (h, a) pair with h >= threshold and a >= 1");
  }
  return definition == RatioDefinition::mean_of_ratios
             ? ratio_sum / static_cast<double>(eligible)
             : h_sum / a_sum;
}

std::optional<double> xa_ratio(int h, int a, double r) {
  require_positive_r(r);
  if (h <= 0 || a <= 0) return std::nullopt;
  const double n = static_cast<double>(h) / r;
  const double af = static_cast<double>(a);
  return af <= n ? af / n : n / af;
}

std::optional<double> corrected_score(int h, int a, double r) {
  auto x = xa_ratio(h, a, r);
  if (!x) return std::nullopt;
  return *x * static_cast<double>(h);
}

IndexReport evaluate_author(const AuthorProfile& profile,
                            const CorrectionContext& ctx) {
  require_positive_r(ctx.r);

  std::vector<int> counts;
  counts.reserve(profile.publication_citations.size());
  for (const auto& [id, count] : profile.publication_citations) {
    counts.push_back(count);
  }

  IndexReport report;
  report.author = profile.author;
  report.h = h_index(counts);
  report.a = ah_index(profile.citer_response);
  report.n = static_cast<double>(report.h) / ctx.r;
  report.x = xa_ratio(report.h, report.a, ctx.r);
  if (report.x) report.corrected = *report.x * static_cast<double>(report.h);
  report.publication_count = profile.publication_count();
  report.citer_count = profile.citer_count();
  report.total_citations = profile.total_citations();
  return report;
}

std::vector<IndexReport> evaluate_all(
    const std::map<AuthorKey, AuthorProfile>& profiles,
    const CorrectionContext& ctx) {
  std::vector<IndexReport> reports;
  reports.reserve(profiles.size());
  for (const auto& [author, profile] : profiles) {
    reports.push_back(evaluate_author(profile, ctx));
  }
  return reports;
}

PopulationEvaluation evaluate_population(
    const std::map<AuthorKey, AuthorProfile>& profiles, int h_threshold,
    std::optional<double> r_override, RatioDefinition definition) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(profiles.size());
  for (const auto& [author, profile] : profiles) {
    std::vector<int> counts;
    counts.reserve(profile.publication_citations.size());
    for (const auto& [id, count] : profile.publication_citations) {
      counts.push_back(count);
    }
    pairs.emplace_back(h_index(counts), ah_index(profile.citer_response));
  }

  PopulationEvaluation result;
  for (const auto& [h, a] : pairs) {
    if (h >= h_threshold && a >= 1) ++result.r_population;
  }
  if (r_override) {
    require_positive_r(*r_override);
    result.r = *r_override;
  } else {
    result.r = correction_coefficient(pairs, h_threshold, definition);
  }

  CorrectionContext ctx;
  ctx.r = result.r;
  ctx.h_threshold = h_threshold;
  result.reports = evaluate_all(profiles, ctx);
  return result;
}

}  // namespace citemetrics::indices
