#pragma once
// Domain model for bibliographic corpora: papers, authors, citation edges,
// and the per-author aggregates the indicator computations consume.
//
// A Corpus is immutable once built and safe for any number of concurrent
// readers. Assembly goes through CorpusBuilder, which enforces the model
// invariants (unique references, no self references, no dangling references)
// and tallies everything it had to discard.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace citemetrics {

// Opaque publication identifier, unique within a corpus.
struct PaperId {
  std::string value;
  auto operator<=>(const PaperId&) const = default;
};

// Normalized author name. Equality of keys defines author identity
// everywhere downstream; normalization itself lives in the ingest module.
struct AuthorKey {
  std::string value;
  auto operator<=>(const AuthorKey&) const = default;
};

}  // namespace citemetrics

template <>
struct std::hash<citemetrics::PaperId> {
  std::size_t operator()(const citemetrics::PaperId& id) const noexcept {
    return std::hash<std::string>{}(id.value);
  }
};

template <>
struct std::hash<citemetrics::AuthorKey> {
  std::size_t operator()(const citemetrics::AuthorKey& key) const noexcept {
    return std::hash<std::string>{}(key.value);
  }
};

namespace citemetrics {

struct Paper {
  PaperId id;
  std::string title;
  std::vector<AuthorKey> authors;   // ordered; may be empty (dataset defect)
  std::optional<int> year;
  std::optional<std::string> venue;
  std::vector<PaperId> references;  // sorted, unique, never the paper itself

  bool operator==(const Paper&) const = default;
};

// Citing-paper filter applied when aggregating per-author counts.
// include(): every citing paper counts. exclude(k): a citing paper that
// cites at least k distinct publications of the evaluated author is dropped
// from that author's counts (it still counts for other authors).
class BombPolicy {
 public:
  static BombPolicy include() noexcept { return BombPolicy{0}; }
  static BombPolicy exclude(int k) {
    if (k < 1) throw std::invalid_argument("bomb threshold must be positive");
    return BombPolicy{k};
  }

  bool excludes() const noexcept { return threshold_ > 0; }
  int threshold() const noexcept { return threshold_; }

  bool operator==(const BombPolicy&) const = default;

 private:
  explicit BombPolicy(int k) noexcept : threshold_(k) {}
  int threshold_ = 0;
};

// Population parameters under which index reports are comparable. Reports
// produced under different contexts must not be compared or mixed.
struct CorrectionContext {
  double r = 1.0;  // community mean of h/a; must stay positive
  int h_threshold = 8;
  BombPolicy bomb_policy = BombPolicy::include();
};

// One author's aggregate view of the corpus: citation count per publication
// (key count is N_p) and the citer response map, i.e. the number of distinct
// publications of this author each citing researcher cites (key count is N_c).
struct AuthorProfile {
  AuthorKey author;
  std::map<PaperId, int> publication_citations;
  std::map<AuthorKey, int> citer_response;

  std::size_t publication_count() const { return publication_citations.size(); }
  std::size_t citer_count() const { return citer_response.size(); }
  long long total_citations() const;

  bool operator==(const AuthorProfile&) const = default;
};

// Per-author indicator bundle computed under one CorrectionContext.
// x and corrected are absent when the ratio is undefined (h == 0 or a == 0).
struct IndexReport {
  AuthorKey author;
  int h = 0;
  int a = 0;
  double n = 0.0;  // normal aH value, h / r
  std::optional<double> x;
  std::optional<double> corrected;  // x * h
  std::size_t publication_count = 0;
  std::size_t citer_count = 0;
  long long total_citations = 0;

  bool operator==(const IndexReport&) const = default;
};

class Corpus {
 public:
  Corpus() = default;

  std::size_t paper_count() const { return papers_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::size_t author_count() const { return author_pubs_.size(); }

  bool contains(const PaperId& id) const { return papers_.contains(id); }
  const Paper* find(const PaperId& id) const;

  // Papers citing `id` (transpose of the reference lists), sorted by id.
  std::span<const PaperId> citers_of(const PaperId& id) const;
  // Publications authored by `key`, sorted by id.
  std::span<const PaperId> publications_of(const AuthorKey& key) const;

  const std::unordered_map<PaperId, Paper>& papers() const { return papers_; }
  const std::unordered_map<PaperId, std::vector<PaperId>>& citations_in() const {
    return citations_in_;
  }
  const std::unordered_map<AuthorKey, std::vector<PaperId>>& author_pubs() const {
    return author_pubs_;
  }

  std::vector<PaperId> sorted_paper_ids() const;
  std::vector<AuthorKey> sorted_authors() const;

  // The reverse indexes are derived, so paper-map equality is corpus equality.
  bool operator==(const Corpus& other) const { return papers_ == other.papers_; }

 private:
  friend class CorpusBuilder;

  std::unordered_map<PaperId, Paper> papers_;
  std::unordered_map<PaperId, std::vector<PaperId>> citations_in_;
  std::unordered_map<AuthorKey, std::vector<PaperId>> author_pubs_;
  std::size_t edge_count_ = 0;
};

// Single-writer corpus assembly. Duplicate paper ids keep the first
// occurrence, duplicate references collapse to one edge, self references are
// dropped on add, dangling references are dropped at build().
class CorpusBuilder {
 public:
  struct Stats {
    std::size_t duplicate_paper_ids = 0;
    std::size_t duplicate_references_collapsed = 0;
    std::size_t self_references_dropped = 0;
    std::size_t dangling_references_dropped = 0;
    std::size_t empty_author_lists = 0;
  };

  // False when a paper with this id was already added (the record is skipped).
  bool add(Paper paper);

  std::size_t size() const { return papers_.size(); }
  const Stats& stats() const { return stats_; }

  // Resolves references against the final paper set, builds the reverse
  // indexes and returns the corpus. The builder is left empty; stats keep
  // accumulating over the builder's lifetime.
  Corpus build();

 private:
  std::unordered_map<PaperId, Paper> papers_;
  Stats stats_;
};

}  // namespace citemetrics
