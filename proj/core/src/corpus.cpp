#include "citemetrics/corpus.hpp"

#include <algorithm>
#include <unordered_set>

namespace citemetrics {

long long AuthorProfile::total_citations() const {
  long long total = 0;
  for (const auto& [id, count] : publication_citations) total += count;
  return total;
}

const Paper* Corpus::find(const PaperId& id) const {
  auto it = papers_.find(id);
  return it == papers_.end() ? nullptr : &it->second;
}

std::span<const PaperId> Corpus::citers_of(const PaperId& id) const {
  auto it = citations_in_.find(id);
  if (it == citations_in_.end()) return {};
  return it->second;
}

std::span<const PaperId> Corpus::publications_of(const AuthorKey& key) const {
  auto it = author_pubs_.find(key);
  if (it == author_pubs_.end()) return {};
  return it->second;
}

std::vector<PaperId> Corpus::sorted_paper_ids() const {
  std::vector<PaperId> ids;
  ids.reserve(papers_.size());
  for (const auto& [id, paper] : papers_) ids.push_back(id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<AuthorKey> Corpus::sorted_authors() const {
  std::vector<AuthorKey> keys;
  keys.reserve(author_pubs_.size());
  for (const auto& [key, pubs] : author_pubs_) keys.push_back(key);
  std::sort(keys.begin(), keys.end());
  return keys;
}

bool CorpusBuilder::add(Paper paper) {
  if (paper.id.value.empty()) {
    throw std::invalid_argument("paper id must be non-empty");
  }
  if (papers_.contains(paper.id)) {
    ++stats_.duplicate_paper_ids;
    return false;
  }

  // Author identity is the key itself, so repeated keys inside one author
  // list carry no information; keep the first occurrence.
  if (paper.authors.size() > 1) {
    std::unordered_set<AuthorKey> seen;
    std::vector<AuthorKey> unique;
    unique.reserve(paper.authors.size());
    for (auto& author : paper.authors) {
      if (seen.insert(author).second) unique.push_back(std::move(author));
    }
    paper.authors = std::move(unique);
  }
  if (paper.authors.empty()) ++stats_.empty_author_lists;

  auto& refs = paper.references;
  std::sort(refs.begin(), refs.end());
  auto dup_begin = std::unique(refs.begin(), refs.end());
  stats_.duplicate_references_collapsed +=
      static_cast<std::size_t>(refs.end() - dup_begin);
  refs.erase(dup_begin, refs.end());

  auto self_begin = std::remove(refs.begin(), refs.end(), paper.id);
  stats_.self_references_dropped +=
      static_cast<std::size_t>(refs.end() - self_begin);
  refs.erase(self_begin, refs.end());

  papers_.emplace(paper.id, std::move(paper));
  return true;
}

Corpus CorpusBuilder::build() {
  Corpus corpus;
  corpus.papers_ = std::move(papers_);
  papers_ = {};

  for (auto& [id, paper] : corpus.papers_) {
    auto& refs = paper.references;
    auto kept = std::remove_if(refs.begin(), refs.end(), [&](const PaperId& r) {
      return !corpus.papers_.contains(r);
    });
    stats_.dangling_references_dropped +=
        static_cast<std::size_t>(refs.end() - kept);
    refs.erase(kept, refs.end());

    corpus.edge_count_ += refs.size();
    for (const PaperId& r : refs) corpus.citations_in_[r].push_back(id);
    for (const AuthorKey& a : paper.authors) corpus.author_pubs_[a].push_back(id);
  }

  for (auto& [id, citers] : corpus.citations_in_) {
    std::sort(citers.begin(), citers.end());
  }
  for (auto& [key, pubs] : corpus.author_pubs_) {
    std::sort(pubs.begin(), pubs.end());
  }
  return corpus;
}

}  // namespace citemetrics
