#include "citemetrics/citation_graph.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace citemetrics::graph {

namespace {

// For each paper citing `author`, the publications of `author` it cites.
// Reference lists are unique, so no footprint contains duplicates.
std::unordered_map<PaperId, std::vector<PaperId>> citing_footprints(
    const Corpus& corpus, const AuthorKey& author,
    const AggregationPolicy& policy) {
  auto pubs = corpus.publications_of(author);
  std::unordered_map<PaperId, std::vector<PaperId>> footprints;
  for (const PaperId& pub : pubs) {
    for (const PaperId& citing : corpus.citers_of(pub)) {
      footprints[citing].push_back(pub);
    }
  }

  if (!policy.count_self_citations) {
    std::erase_if(footprints, [&](const auto& entry) {
      return std::binary_search(pubs.begin(), pubs.end(), entry.first);
    });
  }
  if (policy.bomb_policy.excludes()) {
    const auto k = static_cast<std::size_t>(policy.bomb_policy.threshold());
    std::erase_if(footprints,
                  [&](const auto& entry) { return entry.second.size() >= k; });
  }
  return footprints;
}

AuthorProfile profile_from_footprints(
    const Corpus& corpus, const AuthorKey& author,
    const std::unordered_map<PaperId, std::vector<PaperId>>& footprints) {
  AuthorProfile profile;
  profile.author = author;
  for (const PaperId& pub : corpus.publications_of(author)) {
    profile.publication_citations.emplace(pub, 0);
  }

  std::unordered_map<AuthorKey, std::unordered_set<PaperId>> cited_by;
  for (const auto& [citing, pubs] : footprints) {
    for (const PaperId& pub : pubs) {
      ++profile.publication_citations.at(pub);
    }
    const Paper* paper = corpus.find(citing);
    for (const AuthorKey& citer : paper->authors) {
      cited_by[citer].insert(pubs.begin(), pubs.end());
    }
  }
  for (const auto& [citer, pubs] : cited_by) {
    profile.citer_response.emplace(citer, static_cast<int>(pubs.size()));
  }
  return profile;
}

}  // namespace

std::map<PaperId, int> publication_citations(const Corpus& corpus,
                                             const AuthorKey& author,
                                             const AggregationPolicy& policy) {
  return build_profile(corpus, author, policy).publication_citations;
}

std::map<AuthorKey, int> citer_response(const Corpus& corpus,
                                        const AuthorKey& author,
                                        const AggregationPolicy& policy) {
  return build_profile(corpus, author, policy).citer_response;
}

AuthorProfile build_profile(const Corpus& corpus, const AuthorKey& author,
                            const AggregationPolicy& policy) {
  return profile_from_footprints(corpus, author,
                                 citing_footprints(corpus, author, policy));
}

std::map<AuthorKey, AuthorProfile> build_profiles(const Corpus& corpus,
                                                  const AggregationPolicy& policy,
                                                  unsigned threads) {
  std::vector<AuthorKey> authors = corpus.sorted_authors();
  if (threads == 0) {
    threads = std::max(1u, std::thread::hardware_concurrency());
  }
  threads = std::min<unsigned>(threads, std::max<std::size_t>(authors.size(), 1));

  std::vector<std::vector<AuthorProfile>> slices(threads);
  auto work = [&](unsigned worker) {
    auto& slice = slices[worker];
    for (std::size_t i = worker; i < authors.size(); i += threads) {
      slice.push_back(build_profile(corpus, authors[i], policy));
    }
  };

  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& thread : pool) thread.join();
  }

  // Round-robin assignment makes the merge order (and thus the result)
  // independent of thread timing.
  std::map<AuthorKey, AuthorProfile> profiles;
  std::vector<std::size_t> cursor(threads, 0);
  for (std::size_t i = 0; i < authors.size(); ++i) {
    auto& slice = slices[i % threads];
    AuthorProfile& profile = slice[cursor[i % threads]++];
    profiles.emplace_hint(profiles.end(), profile.author, std::move(profile));
  }
  return profiles;
}

}  // namespace citemetrics::graph
