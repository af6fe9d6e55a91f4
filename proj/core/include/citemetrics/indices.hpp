#pragma once
// Indicator computations: h, the Hirsch core, the citer-based a, the
// community correction coefficient r, the normal value n = h / r, the
// xA-ratio and the corrected score x * h.
//
// All functions are pure. Population evaluation is two-phase by contract:
// r is estimated from the (h, a) population first, per-author ratios second.

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "citemetrics/corpus.hpp"

namespace citemetrics::indices {

// Raised when no (h, a) pair qualifies for the r estimate.
struct PopulationEmptyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Largest h such that at least h of the counts are >= h; 0 for empty input.
int h_index(std::span<const int> citation_counts);

// Publications whose citation count reaches the h-index of the whole map,
// sorted by id. Empty when h is 0.
std::vector<PaperId> hirsch_core(const std::map<PaperId, int>& publication_citations);

// Largest a such that at least a citers each cite >= a distinct publications;
// 0 for an empty map.
int ah_index(const std::map<AuthorKey, int>& citer_response);

// How the population ratio behind r is aggregated. The default averages the
// per-author ratios h/a; the alternative divides the population means.
enum class RatioDefinition { mean_of_ratios, ratio_of_means };

// Mean of h/a over the pairs with h >= h_threshold and a >= 1. Throws
// PopulationEmptyError when no pair qualifies.
double correction_coefficient(std::span<const std::pair<int, int>> h_a_pairs,
                              int h_threshold,
                              RatioDefinition definition = RatioDefinition::mean_of_ratios);

// Proximity of a to the normal value n = h / r: a/n when a <= n, n/a
// otherwise. Always in (0, 1], and 1 exactly when a equals n. Empty when
// h == 0 or a == 0 (the ratio is undefined there).
std::optional<double> xa_ratio(int h, int a, double r);

// xa_ratio(h, a, r) * h; never exceeds h. Empty when the ratio is undefined.
std::optional<double> corrected_score(int h, int a, double r);

IndexReport evaluate_author(const AuthorProfile& profile,
                            const CorrectionContext& ctx);

// Reports for every profile, ordered by author.
std::vector<IndexReport> evaluate_all(
    const std::map<AuthorKey, AuthorProfile>& profiles,
    const CorrectionContext& ctx);

// Two-phase population evaluation: h and a per author, r over the qualifying
// population (unless overridden), then the full reports under that r.
// r_population counts the pairs with h >= h_threshold and a >= 1.
struct PopulationEvaluation {
  double r = 0.0;
  std::size_t r_population = 0;
  std::vector<IndexReport> reports;  // ordered by author
};

PopulationEvaluation evaluate_population(
    const std::map<AuthorKey, AuthorProfile>& profiles, int h_threshold,
    std::optional<double> r_override = std::nullopt,
    RatioDefinition definition = RatioDefinition::mean_of_ratios);

}  // namespace citemetrics::indices
