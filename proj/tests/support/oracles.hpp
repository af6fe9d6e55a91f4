#pragma once
// Independent reference implementations used as oracles by the test suites.
// Everything here recomputes results from first principles: exhaustive rank
// scans for the indices, and raw loops over the paper map and reference
// lists for the graph aggregates. The reverse indexes and the library's own
// sort-based index routines are deliberately not used.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "citemetrics/analytics.hpp"
#include "citemetrics/corpus.hpp"

namespace test_oracle {

using citemetrics::AuthorKey;
using citemetrics::Corpus;
using citemetrics::Paper;
using citemetrics::PaperId;

// Largest k such that at least k of the values are >= k, scanning every k.
inline int rank_scan(const std::vector<int>& values) {
  int best = 0;
  for (std::size_t k = 1; k <= values.size(); ++k) {
    std::size_t qualifying = 0;
    for (const int value : values) {
      if (value >= static_cast<int>(k)) ++qualifying;
    }
    if (qualifying >= k) best = static_cast<int>(k);
  }
  return best;
}

inline int h_index_scan(const std::map<PaperId, int>& publication_citations) {
  std::vector<int> counts;
  for (const auto& [id, count] : publication_citations) counts.push_back(count);
  return rank_scan(counts);
}

inline int ah_index_scan(const std::map<AuthorKey, int>& citer_response) {
  std::vector<int> counts;
  for (const auto& [citer, count] : citer_response) counts.push_back(count);
  return rank_scan(counts);
}

inline std::vector<PaperId> hirsch_core_scan(
    const std::map<PaperId, int>& publication_citations) {
  const int h = h_index_scan(publication_citations);
  std::vector<PaperId> core;
  if (h == 0) return core;
  for (const auto& [id, count] : publication_citations) {
    if (count >= h) core.push_back(id);
  }
  return core;
}

// Publications of `author` found by scanning every paper's author list.
inline std::set<PaperId> publications_naive(const Corpus& corpus,
                                            const AuthorKey& author) {
  std::set<PaperId> pubs;
  for (const auto& [id, paper] : corpus.papers()) {
    if (std::find(paper.authors.begin(), paper.authors.end(), author) !=
        paper.authors.end()) {
      pubs.insert(id);
    }
  }
  return pubs;
}

// In-degree per publication of `author` via a double loop over every
// reference list in the corpus.
inline std::map<PaperId, int> publication_citations_naive(
    const Corpus& corpus, const AuthorKey& author) {
  std::map<PaperId, int> counts;
  for (const PaperId& pub : publications_naive(corpus, author)) {
    counts.emplace(pub, 0);
  }
  for (const auto& [id, paper] : corpus.papers()) {
    for (const PaperId& ref : paper.references) {
      auto it = counts.find(ref);
      if (it != counts.end()) ++it->second;
    }
  }
  return counts;
}

// Triple loop: citing paper -> references intersected with the author's
// publications -> every co-author of the citing paper, set-unioned.
inline std::map<AuthorKey, int> citer_response_naive(const Corpus& corpus,
                                                     const AuthorKey& author) {
  const std::set<PaperId> pubs = publications_naive(corpus, author);
  std::map<AuthorKey, std::set<PaperId>> cited;
  for (const auto& [id, paper] : corpus.papers()) {
    std::set<PaperId> targets;
    for (const PaperId& ref : paper.references) {
      if (pubs.contains(ref)) targets.insert(ref);
    }
    if (targets.empty()) continue;
    for (const AuthorKey& citer : paper.authors) {
      cited[citer].insert(targets.begin(), targets.end());
    }
  }
  std::map<AuthorKey, int> counts;
  for (const auto& [citer, set] : cited) {
    counts.emplace(citer, static_cast<int>(set.size()));
  }
  return counts;
}

// Per (citing paper, target author) distinct-publication counting loop.
inline std::vector<citemetrics::analytics::BombFinding> bombs_naive(
    const Corpus& corpus, int k) {
  std::vector<citemetrics::analytics::BombFinding> findings;
  for (const auto& [id, paper] : corpus.papers()) {
    std::map<AuthorKey, std::set<PaperId>> cited;
    for (const PaperId& ref : paper.references) {
      const Paper* target = corpus.find(ref);
      for (const AuthorKey& target_author : target->authors) {
        cited[target_author].insert(ref);
      }
    }
    for (const auto& [target_author, set] : cited) {
      if (static_cast<int>(set.size()) >= k) {
        findings.push_back({id, target_author, static_cast<int>(set.size()),
                            static_cast<int>(paper.authors.size())});
      }
    }
  }
  std::sort(findings.begin(), findings.end(),
            [](const auto& lhs, const auto& rhs) {
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

}  // namespace test_oracle
