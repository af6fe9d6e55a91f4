#pragma once
// Per-author aggregation over an immutable corpus: citation counts per
// publication and the citer response map (how many distinct publications of
// the evaluated author each citing researcher cites).
//
// Every co-author of a citing paper counts as a citer, and a citer's papers
// are aggregated jointly: citing the same publication from two papers still
// counts once. All functions are pure; per-author work may run concurrently
// and the results are independent of the execution schedule.

#include <cstddef>
#include <map>

#include "citemetrics/corpus.hpp"

namespace citemetrics::graph {

struct AggregationPolicy {
  BombPolicy bomb_policy = BombPolicy::include();
  // When false, citing papers co-authored by the evaluated author are
  // ignored for that author: no self citations, never own citer.
  bool count_self_citations = true;
};

// Citation count per publication of `author` under the policy. Unknown
// authors yield an empty map.
std::map<PaperId, int> publication_citations(const Corpus& corpus,
                                             const AuthorKey& author,
                                             const AggregationPolicy& policy = {});

// Distinct publications of `author` cited per citing researcher; every value
// is >= 1. Unknown authors yield an empty map.
std::map<AuthorKey, int> citer_response(const Corpus& corpus,
                                        const AuthorKey& author,
                                        const AggregationPolicy& policy = {});

AuthorProfile build_profile(const Corpus& corpus, const AuthorKey& author,
                            const AggregationPolicy& policy = {});

// Profiles for every author with at least one publication, equal to the
// per-author application of the functions above. `threads` = 0 picks the
// hardware concurrency.
std::map<AuthorKey, AuthorProfile> build_profiles(const Corpus& corpus,
                                                  const AggregationPolicy& policy = {},
                                                  unsigned threads = 0);

}  // namespace citemetrics::graph
