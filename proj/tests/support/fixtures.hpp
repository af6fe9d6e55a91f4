#pragma once
// Shared corpus fixtures and small random-corpus helpers.

#include <cstdint>
#include <string>
#include <vector>

#include "citemetrics/corpus.hpp"
#include "citemetrics/synthetic.hpp"

namespace fixtures {

using citemetrics::AuthorKey;
using citemetrics::Corpus;
using citemetrics::CorpusBuilder;
using citemetrics::Paper;
using citemetrics::PaperId;

inline Paper make_paper(std::string id, std::vector<std::string> authors,
                        std::vector<std::string> references) {
  Paper paper;
  paper.id = PaperId{std::move(id)};
  paper.title = "title of " + paper.id.value;
  for (auto& author : authors) paper.authors.push_back(AuthorKey{std::move(author)});
  for (auto& ref : references) paper.references.push_back(PaperId{std::move(ref)});
  return paper;
}

// Two papers with disjoint single authors; p2 cites p1.
inline Corpus chain_corpus() {
  CorpusBuilder builder;
  builder.add(make_paper("p1", {"alice"}, {}));
  builder.add(make_paper("p2", {"bob"}, {"p1"}));
  return builder.build();
}

// One paper written by `citing_authors` authors citing `cited_pubs` distinct
// publications of a single target author, which is that author's entire
// citation record.
inline Corpus bomb_corpus(int citing_authors = 20, int cited_pubs = 20) {
  CorpusBuilder builder;
  std::vector<std::string> targets;
  for (int i = 0; i < cited_pubs; ++i) {
    std::string id = "t" + std::to_string(i + 10);
    builder.add(make_paper(id, {"target author"}, {}));
    targets.push_back(id);
  }
  std::vector<std::string> citers;
  for (int i = 0; i < citing_authors; ++i) {
    citers.push_back("citer " + std::to_string(i + 10));
  }
  builder.add(make_paper("bomb", citers, targets));
  return builder.build();
}

// Small random corpus; dimensions scale with `size`, behavior varies by seed.
inline Corpus random_corpus(std::uint64_t seed, std::size_t papers = 200,
                            std::size_t authors = 50,
                            std::size_t edges_per_paper = 3) {
  citemetrics::synthetic::GenSpec spec;
  spec.papers = papers;
  spec.authors = authors;
  spec.target_edges = papers * edges_per_paper;
  spec.max_authors_per_paper = 4;
  spec.fan_probability = 0.2;
  spec.fan_min_targets = 2;
  spec.fan_max_targets = 8;
  spec.seed = seed;
  return citemetrics::synthetic::to_corpus(citemetrics::synthetic::generate(spec));
}

}  // namespace fixtures
