#include <doctest.h>

#include <cstdint>
#include <sstream>
#include <streambuf>

#include "citemetrics/ingest.hpp"
#include "citemetrics/synthetic.hpp"
#include "support/fixtures.hpp"

using namespace citemetrics;

TEST_CASE("normalize_author trims, collapses and lower-cases") {
  CHECK(ingest::normalize_author("  Ada   M. Lovelace ").value ==
        "ada m. lovelace");
  CHECK(ingest::normalize_author("X").value == "x");
  CHECK(ingest::normalize_author("").value.empty());
  CHECK(ingest::normalize_author(" \t\r\n ").value.empty());
  CHECK(ingest::normalize_author("tab\there").value == "tab here");
}

TEST_CASE("normalize_author is idempotent on random strings") {
  // splitmix64-driven byte soup, including whitespace and non-ASCII bytes.
  std::uint64_t state = 424242;
  auto next = [&state] {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  };
  const char alphabet[] = " \t\n\r\f\vABCxyz0189.,;'\xc3\xa9\xf0\x9f\x90\x8d";
  for (int i = 0; i < 100000; ++i) {
    std::string raw;
    const std::size_t length = next() % 24;
    for (std::size_t c = 0; c < length; ++c) {
      raw.push_back(alphabet[next() % (sizeof(alphabet) - 1)]);
    }
    const AuthorKey once = ingest::normalize_author(raw);
    const AuthorKey twice = ingest::normalize_author(once.value);
    CHECK(once == twice);
  }
}

TEST_CASE("parse_arnet reads a minimal two record stream") {
  std::istringstream in(
      "#*First steps\n"
      "#@Ada M. Lovelace, Charles Babbage\n"
      "#t1842\n"
      "#cAnalytical Engine Notes\n"
      "#indexp1\n"
      "\n"
      "#*Second thoughts\n"
      "#@Grace Hopper\n"
      "#t1952\n"
      "#indexp2\n"
      "#%p1\n"
      "#!An abstract that should be ignored.\n");
  const auto [corpus, report] = ingest::parse_arnet(in);

  CHECK(report.papers_read == 2);
  CHECK(report.papers_kept == 2);
  CHECK(report.parse_warnings.empty());
  CHECK(corpus.paper_count() == 2);
  CHECK(corpus.edge_count() == 1);

  const Paper* p1 = corpus.find(PaperId{"p1"});
  REQUIRE(p1 != nullptr);
  CHECK(p1->title == "First steps");
  CHECK(p1->authors == std::vector<AuthorKey>{AuthorKey{"ada m. lovelace"},
                                              AuthorKey{"charles babbage"}});
  CHECK(p1->year == 1842);
  CHECK(p1->venue == "Analytical Engine Notes");

  const auto citers = corpus.citers_of(PaperId{"p1"});
  REQUIRE(citers.size() == 1);
  CHECK(citers[0] == PaperId{"p2"});
}

TEST_CASE("parse_arnet drops dangling references and counts them") {
  std::istringstream in(
      "#indexp1\n"
      "#*Only record\n"
      "#@someone\n"
      "#%missing\n");
  const auto [corpus, report] = ingest::parse_arnet(in);
  CHECK(report.papers_kept == 1);
  CHECK(report.dangling_refs_dropped == 1);
  CHECK(corpus.edge_count() == 0);
}

TEST_CASE("parse_arnet matches the generator ledger") {
  synthetic::GenSpec spec;
  spec.papers = 1000;
  spec.authors = 150;
  spec.target_edges = 5000;
  spec.seed = 77;
  const auto generated = synthetic::generate(spec);
  const Corpus source = synthetic::to_corpus(generated);

  std::ostringstream text;
  ingest::write_arnet(source, text);
  std::istringstream in(text.str());
  const auto [corpus, report] = ingest::parse_arnet(in);

  CHECK(report.papers_read == 1000);
  CHECK(report.papers_kept == 1000);
  CHECK(report.malformed_skipped() == 0);
  CHECK(corpus.edge_count() == generated.edge_count);
  CHECK(corpus == source);
}

TEST_CASE("parse_arnet skips malformed records and keeps counting") {
  std::istringstream in(
      "#*A record without an index marker\n"
      "#@lost author\n"
      "\n"
      "#indexp1\n"
      "#*Good one\n"
      "\n"
      "#indexp1\n"
      "#*Duplicate id\n"
      "\n"
      "#indexp2\n"
      "#*Another good one\n"
      "#%p2\n");
  const auto [corpus, report] = ingest::parse_arnet(in);

  CHECK(report.papers_read == 4);
  CHECK(report.papers_kept == 2);
  CHECK(report.duplicate_paper_ids == 1);
  CHECK(report.malformed_skipped() == 1);
  CHECK(report.papers_read == report.papers_kept + report.duplicate_paper_ids +
                                  report.malformed_skipped());

  // p2's self reference is dropped with a warning.
  CHECK(corpus.find(PaperId{"p2"})->references.empty());
  bool self_warned = false;
  bool index_warned = false;
  bool duplicate_warned = false;
  for (const auto& warning : report.parse_warnings) {
    if (warning.message.find("self reference") != std::string::npos) {
      self_warned = true;
    }
    if (warning.message.find("without #index") != std::string::npos) {
      index_warned = true;
    }
    if (warning.message.find("duplicate paper id") != std::string::npos) {
      duplicate_warned = true;
    }
  }
  CHECK(self_warned);
  CHECK(index_warned);
  CHECK(duplicate_warned);
}

TEST_CASE("parse_arnet warns on unparsable years and empty author names") {
  std::istringstream in(
      "#indexp1\n"
      "#*Record\n"
      "#@Ada Lovelace,   ,Grace Hopper\n"
      "#tnineteen\n");
  const auto [corpus, report] = ingest::parse_arnet(in);
  const Paper* paper = corpus.find(PaperId{"p1"});
  REQUIRE(paper != nullptr);
  CHECK(paper->authors.size() == 2);
  CHECK(!paper->year.has_value());
  CHECK(report.parse_warnings.size() == 2);
  CHECK(report.parse_warnings[0].line == 3);
  CHECK(report.parse_warnings[1].line == 4);
}

TEST_CASE("parse_arnet honors the semicolon delimiter option") {
  std::istringstream in(
      "#indexp1\n"
      "#@Garcia, Alessandro; Lovelace, Ada\n");
  ingest::ArnetOptions options;
  options.author_delimiter = ingest::AuthorDelimiter::semicolon;
  const auto [corpus, report] = ingest::parse_arnet(in, options);
  CHECK(corpus.find(PaperId{"p1"})->authors ==
        std::vector<AuthorKey>{AuthorKey{"garcia, alessandro"},
                               AuthorKey{"lovelace, ada"}});
}

TEST_CASE("parse_arnet handles CRLF input") {
  std::istringstream in("#indexp1\r\n#*Title\r\n\r\n#indexp2\r\n#%p1\r\n");
  const auto [corpus, report] = ingest::parse_arnet(in);
  CHECK(corpus.paper_count() == 2);
  CHECK(corpus.edge_count() == 1);
  CHECK(corpus.find(PaperId{"p1"})->title == "Title");
}

TEST_CASE("identical input parses to identical output") {
  const std::string text =
      "#indexp1\n#*One\n#@a, b\n\n#indexp2\n#%p1\n#@c\n\n";
  std::istringstream first(text);
  std::istringstream second(text);
  const auto lhs = ingest::parse_arnet(first);
  const auto rhs = ingest::parse_arnet(second);
  CHECK(lhs.corpus == rhs.corpus);
  CHECK(lhs.report.papers_read == rhs.report.papers_read);
  CHECK(lhs.report.parse_warnings == rhs.report.parse_warnings);
}

namespace {

// A stream buffer that fails hard after serving a fixed prefix.
class FailingBuf : public std::streambuf {
 public:
  FailingBuf(const char* data, std::size_t good_bytes) {
    setg(const_cast<char*>(data), const_cast<char*>(data),
         const_cast<char*>(data) + good_bytes);
  }

 protected:
  int_type underflow() override { throw std::ios_base::failure("disk gone"); }
};

}  // namespace

TEST_CASE("a failing stream aborts with a position") {
  static const char prefix[] = "#indexp1\n#*One\n\n#indexp2\n";
  FailingBuf buf(prefix, sizeof(prefix) - 1);
  std::istream in(&buf);
  CHECK_THROWS_AS(ingest::parse_arnet(in), ingest::StreamError);
}

TEST_CASE("parse_canonical on an empty stream") {
  std::istringstream in("");
  const auto [corpus, report] = ingest::parse_canonical(in);
  CHECK(report.papers_read == 0);
  CHECK(report.papers_kept == 0);
  CHECK(corpus.paper_count() == 0);
}

TEST_CASE("parse_canonical reads one record without references") {
  std::istringstream in(
      R"({"authors":["ada m. lovelace"],"id":"p1","references":[],"title":"Notes","year":1842})"
      "\n");
  const auto [corpus, report] = ingest::parse_canonical(in);
  CHECK(report.papers_read == 1);
  CHECK(report.papers_kept == 1);
  CHECK(corpus.edge_count() == 0);
  const Paper* paper = corpus.find(PaperId{"p1"});
  REQUIRE(paper != nullptr);
  CHECK(paper->year == 1842);
  CHECK(paper->venue == std::nullopt);
}

TEST_CASE("arnet to canonical to parse_canonical preserves the corpus") {
  std::istringstream arnet(
      "#*Alpha\n#@One Author, Two Author\n#t2001\n#cVenue A\n#indexa\n\n"
      "#*Beta\n#@Three Author\n#t2002\n#indexb\n#%a\n\n"
      "#*Gamma\n#t2003\n#indexc\n#%a\n#%b\n#%zz\n\n");
  const auto from_arnet = ingest::parse_arnet(arnet);
  CHECK(from_arnet.report.dangling_refs_dropped == 1);

  std::ostringstream canonical;
  ingest::write_canonical(from_arnet.corpus, canonical);
  std::istringstream in(canonical.str());
  const auto from_canonical = ingest::parse_canonical(in);

  CHECK(from_canonical.corpus == from_arnet.corpus);
  CHECK(from_canonical.report.papers_kept == 3);
}

TEST_CASE("parse_canonical skips schema violations with line numbers") {
  std::istringstream in(
      "{\"id\":\"p1\",\"title\":\"ok\"}\n"
      "not json at all\n"
      "[1,2,3]\n"
      "{\"title\":\"missing id\"}\n"
      "{\"id\":\"\"}\n"
      "{\"id\":\"p2\",\"year\":\"not a number\"}\n"
      "{\"id\":\"p3\",\"authors\":\"not an array\"}\n"
      "{\"id\":\"p4\",\"references\":[42]}\n"
      "{\"id\":\"p5\",\"authors\":[\"ok author\"],\"references\":[\"p1\"]}\n");
  const auto [corpus, report] = ingest::parse_canonical(in);

  CHECK(report.papers_read == 9);
  CHECK(report.papers_kept == 2);
  CHECK(report.malformed_skipped() == 7);
  CHECK(corpus.contains(PaperId{"p1"}));
  CHECK(corpus.contains(PaperId{"p5"}));
  REQUIRE(report.parse_warnings.size() == 7);
  CHECK(report.parse_warnings[0].line == 2);
  CHECK(report.parse_warnings[1].line == 3);
  CHECK(report.parse_warnings[2].line == 4);
  CHECK(report.parse_warnings[3].line == 5);
  CHECK(report.parse_warnings[4].line == 6);
  CHECK(report.parse_warnings[5].line == 7);
  CHECK(report.parse_warnings[6].line == 8);
}

TEST_CASE("parse_canonical accepts null year and venue") {
  std::istringstream in(R"({"id":"p1","venue":null,"year":null})"
                        "\n");
  const auto [corpus, report] = ingest::parse_canonical(in);
  CHECK(report.papers_kept == 1);
  CHECK(!corpus.find(PaperId{"p1"})->year.has_value());
  CHECK(!corpus.find(PaperId{"p1"})->venue.has_value());
}
