#include "citemetrics/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace citemetrics::synthetic {

namespace {

// splitmix64; fixed algorithm so corpora are identical across platforms.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }

  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

std::string padded(std::uint64_t value, std::size_t width) {
  std::string digits = std::to_string(value);
  if (digits.size() < width) digits.insert(0, width - digits.size(), '0');
  return digits;
}

std::size_t digits_for(std::size_t count) {
  std::size_t width = 1;
  while (count >= 10) {
    count /= 10;
    ++width;
  }
  return width;
}

}  // namespace

GenResult generate(const GenSpec& spec) {
  if (spec.authors == 0) throw std::invalid_argument("need at least one author");
  if (spec.max_authors_per_paper < 1) {
    throw std::invalid_argument("need at least one author slot per paper");
  }
  if (spec.fan_min_targets < 1 || spec.fan_max_targets < spec.fan_min_targets) {
    throw std::invalid_argument("fan target range is invalid");
  }

  Rng rng(spec.seed);
  const std::size_t paper_width = digits_for(spec.papers ? spec.papers : 1);
  const std::size_t author_width = digits_for(spec.authors);
  const std::size_t fields =
      spec.field_count ? spec.field_count
                       : std::max<std::size_t>(1, spec.authors / 200);
  const std::size_t core_count = std::min(
      spec.authors,
      std::max<std::size_t>(1, static_cast<std::size_t>(
                                   static_cast<double>(spec.authors) *
                                   spec.core_fraction)));

  // Indices only while generating; names are materialized at the end.
  std::vector<std::vector<std::uint32_t>> paper_authors(spec.papers);
  std::vector<std::vector<std::uint32_t>> paper_refs(spec.papers);
  std::vector<std::uint32_t> paper_field(spec.papers, 0);
  std::vector<std::vector<std::uint32_t>> pubs_by_author(spec.authors);

  // Popularity pools, one per field plus a global one: every paper enters
  // with a heavy-tailed number of copies fixed at creation, so a paper's
  // pull is independent of the citer behavior it later receives.
  std::vector<std::vector<std::uint32_t>> field_pool(fields);
  std::vector<std::uint32_t> global_pool;
  global_pool.reserve(spec.papers * 4);

  const double mean_refs =
      spec.papers ? static_cast<double>(spec.target_edges) /
                        static_cast<double>(spec.papers)
                  : 0.0;
  const int ref_cap = std::max(1, static_cast<int>(std::lround(2.0 * mean_refs)));

  auto has_capacity = [&](std::uint32_t author) {
    return pubs_by_author[author].size() < spec.max_pubs_per_author;
  };

  // Two-tier productivity: core authors take core_share of the slots, with
  // rank skew inside the core; everyone else is drawn flat.
  auto pick_author = [&]() -> std::uint32_t {
    for (int attempt = 0; attempt < 4; ++attempt) {
      std::uint32_t candidate;
      if (core_count < spec.authors && rng.unit() >= spec.core_share) {
        candidate = static_cast<std::uint32_t>(
            core_count + rng.below(spec.authors - core_count));
      } else {
        const double u = std::pow(rng.unit(), spec.author_skew);
        auto idx = static_cast<std::size_t>(u * static_cast<double>(core_count));
        candidate = static_cast<std::uint32_t>(std::min(idx, core_count - 1));
      }
      if (has_capacity(candidate)) return candidate;
    }
    return static_cast<std::uint32_t>(rng.below(spec.authors));
  };

  // Members of field f are the author indices congruent to f.
  auto pick_field_member = [&](std::uint32_t field) -> std::uint32_t {
    const std::size_t members = (spec.authors - field + fields - 1) / fields;
    const auto k = rng.below(members);
    return static_cast<std::uint32_t>(field + k * fields);
  };

  // Citer behavior toward an author is a bimodal trait, independent of
  // productivity: a minority of authors attract concentrated responses
  // (citers keep citing several of their works), the rest see broad
  // one-paper-at-a-time responses. The split is what makes citer behavior
  // heterogeneous among equally cited authors.
  auto fan_receptivity = [&spec](std::uint32_t author) {
    const double u =
        static_cast<double>((author * 2654435761u) % 997u) / 996.0;
    return u < spec.concentrated_fraction ? 0.85 : 0.02;
  };

  // A reference target, biased to the citing paper's own field.
  auto sample_cited = [&](std::uint32_t field) -> std::uint32_t {
    const auto& pool = (!field_pool[field].empty() &&
                        rng.unit() < spec.field_locality)
                           ? field_pool[field]
                           : global_pool;
    return pool[rng.below(pool.size())];
  };

  GenResult result;
  for (std::uint32_t i = 0; i < spec.papers; ++i) {
    auto& authors = paper_authors[i];
    const std::uint32_t first = pick_author();
    const auto field = static_cast<std::uint32_t>(first % fields);
    authors.push_back(first);
    paper_field[i] = field;

    const int slots = rng.range(1, spec.max_authors_per_paper);
    for (int s = 1; s < slots; ++s) {
      // Co-authors come mostly from the same field.
      const std::uint32_t coauthor =
          rng.unit() < spec.field_locality ? pick_field_member(field)
                                           : pick_author();
      if (!has_capacity(coauthor)) continue;
      if (std::find(authors.begin(), authors.end(), coauthor) == authors.end()) {
        authors.push_back(coauthor);
      }
    }
    for (const std::uint32_t author : authors) {
      pubs_by_author[author].push_back(i);
    }

    auto& refs = paper_refs[i];
    if (i > 0) {
      bool fanned = false;
      if (rng.unit() < spec.fan_probability) {
        // Fan behavior: follow one author and cite many of their earlier
        // publications. Candidates come from the popular end of the field
        // but each author only attracts fans per their own receptivity.
        for (int attempt = 0; attempt < 3 && !fanned; ++attempt) {
          const std::uint32_t sampled = sample_cited(field);
          const std::uint32_t target = paper_authors[sampled].front();
          if (rng.unit() >= fan_receptivity(target)) continue;
          fanned = true;
          auto pubs = pubs_by_author[target];
          std::erase_if(pubs, [i](std::uint32_t p) { return p >= i; });
          const auto want = static_cast<std::size_t>(
              rng.range(spec.fan_min_targets, spec.fan_max_targets));
          // Partial Fisher-Yates: deterministic sample without replacement.
          for (std::size_t pick = 0; pick < pubs.size() && pick < want; ++pick) {
            const std::size_t j =
                pick + static_cast<std::size_t>(rng.below(pubs.size() - pick));
            std::swap(pubs[pick], pubs[j]);
            refs.push_back(pubs[pick]);
          }
        }
      }
      if (!fanned) {
        const int budget =
            std::min<int>(rng.range(0, ref_cap), static_cast<int>(i));
        std::unordered_set<std::uint32_t> seen;
        int spent = 0;
        while (spent < budget) {
          const std::uint32_t target = sample_cited(field);
          ++spent;
          if (!seen.insert(target).second) continue;
          refs.push_back(target);
          // Concentrated response: citers of receptive authors spend part
          // of the same bibliography on more of their publications.
          const std::uint32_t target_author = paper_authors[target].front();
          if (rng.unit() < fan_receptivity(target_author)) {
            const auto& catalog = pubs_by_author[target_author];
            const int extra = rng.range(2, 5);
            for (int e = 0; e < extra && spent < budget; ++e) {
              const std::uint32_t pick = catalog[rng.below(catalog.size())];
              ++spent;
              if (pick < i && seen.insert(pick).second) refs.push_back(pick);
            }
          }
        }
      }
    }
    std::sort(refs.begin(), refs.end());

    // Heavy-tailed standing copies; citations received never feed back.
    const int copies =
        1 + static_cast<int>(std::min(60.0, std::pow(rng.unit() + 1e-9, -0.7) - 1.0));
    for (int c = 0; c < copies; ++c) {
      global_pool.push_back(i);
      field_pool[field].push_back(i);
    }
    result.edge_count += refs.size();
  }

  // Materialize the records.
  result.papers.reserve(spec.papers);
  for (std::uint32_t i = 0; i < spec.papers; ++i) {
    Paper paper;
    paper.id = PaperId{"p" + padded(i, paper_width)};
    paper.title = "Synthetic record " + padded(i, paper_width);
    for (const std::uint32_t author : paper_authors[i]) {
      paper.authors.push_back(AuthorKey{"author " + padded(author, author_width)});
    }
    paper.year = 1985 + static_cast<int>(rng.below(40));
    paper.venue = "venue " + std::to_string(paper_field[i]);
    for (const std::uint32_t target : paper_refs[i]) {
      paper.references.push_back(PaperId{"p" + padded(target, paper_width)});
    }
    result.papers.push_back(std::move(paper));
  }

  std::size_t used = 0;
  for (const auto& pubs : pubs_by_author) {
    if (!pubs.empty()) ++used;
  }
  result.author_count = used;
  return result;
}

Corpus to_corpus(const GenResult& generated) {
  CorpusBuilder builder;
  for (const Paper& paper : generated.papers) builder.add(paper);
  return builder.build();
}

}  // namespace citemetrics::synthetic
