#pragma once
// Parsers for the supported bibliographic formats. Both parsers produce a
// validated Corpus plus a defect report; a malformed record is skipped and
// logged, never fatal. Only a failing stream aborts the parse.
//
// Formats (field names and marker set are fixed, see docs/formats.md):
//   - marker text format: blank-line separated records with #index, #*, #@,
//     #t, #c, #% and #! lines,
//   - canonical format: one JSON object per line with fields id, title,
//     authors, year, venue, references.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "citemetrics/corpus.hpp"

namespace citemetrics::ingest {

struct ParseWarning {
  std::size_t line = 0;
  std::string message;

  bool operator==(const ParseWarning&) const = default;
};

struct IngestReport {
  std::size_t papers_read = 0;
  std::size_t papers_kept = 0;
  std::size_t dangling_refs_dropped = 0;
  std::size_t empty_author_lists = 0;
  std::size_t duplicate_paper_ids = 0;
  std::vector<ParseWarning> parse_warnings;

  // papers_read = papers_kept + duplicate_paper_ids + malformed_skipped()
  std::size_t malformed_skipped() const {
    return papers_read - papers_kept - duplicate_paper_ids;
  }
};

struct ParseResult {
  Corpus corpus;
  IngestReport report;
};

// Unrecoverable stream failure; carries the line position reached.
struct StreamError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class AuthorDelimiter { comma, semicolon };

struct ArnetOptions {
  AuthorDelimiter author_delimiter = AuthorDelimiter::comma;
};

// Trims surrounding whitespace, collapses internal whitespace runs to one
// space and lower-cases ASCII letters. Deterministic and idempotent; bytes
// outside ASCII pass through unchanged.
AuthorKey normalize_author(std::string_view raw);

ParseResult parse_arnet(std::istream& in, const ArnetOptions& options = {});
ParseResult parse_canonical(std::istream& in);

// Canonical line-delimited serialization: one JSON object per line, papers
// ordered by id, object keys in fixed (alphabetical) order. Re-parsing the
// output yields an equal corpus, byte for byte on every run.
void write_canonical(const Corpus& corpus, std::ostream& out);

// Marker-format serialization of a corpus, mainly for fixtures and demos.
// Field values are flattened to single lines.
void write_arnet(const Corpus& corpus, std::ostream& out,
                 const ArnetOptions& options = {});

}  // namespace citemetrics::ingest
