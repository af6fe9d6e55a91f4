#pragma once
// Seeded synthetic corpus generation for tests, benchmarks and demos.
//
// Citation counts are heavy-tailed (preferential attachment) and a share of
// citing papers behave as "fans": they pick one author and cite many of that
// author's publications, which is what inflates a relative to h. Output is a
// pure function of the spec; no std:: distributions are used, so the same
// spec yields the same corpus on every platform.

#include <cstdint>
#include <vector>

#include "citemetrics/corpus.hpp"

namespace citemetrics::synthetic {

struct GenSpec {
  std::size_t papers = 1000;
  std::size_t authors = 300;
  std::size_t target_edges = 5000;  // approximate; the ledger is exact
  int max_authors_per_paper = 4;
  double fan_probability = 0.15;
  int fan_min_targets = 3;
  int fan_max_targets = 20;
  // Share of authors whose citers respond in a concentrated way (several
  // publications per citing paper) rather than broadly.
  double concentrated_fraction = 0.3;
  // Productivity is two-tier: a small core of prolific authors in a wide
  // population of occasional ones. core_share is the probability that an
  // author slot goes to the core; author_skew shapes ranks inside the core.
  double core_fraction = 0.03;
  double core_share = 0.35;
  double author_skew = 2.0;
  std::size_t max_pubs_per_author = 240;
  // Authors and citations cluster into topical fields; references stay
  // within the field with this probability. 0 fields means one per ~200
  // authors (at least one).
  std::size_t field_count = 0;
  double field_locality = 0.8;
  std::uint64_t seed = 1;
};

// The generator's own ledger: exactly what was emitted.
struct GenResult {
  std::vector<Paper> papers;
  std::size_t edge_count = 0;    // total references across all papers
  std::size_t author_count = 0;  // distinct authors that appear
};

GenResult generate(const GenSpec& spec);

// Builds the corpus; generated records are already duplicate-free, self-free
// and fully resolvable, so nothing is dropped on the way.
Corpus to_corpus(const GenResult& generated);

}  // namespace citemetrics::synthetic
