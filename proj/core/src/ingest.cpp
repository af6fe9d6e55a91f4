#include "citemetrics/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <limits>
#include <ostream>
#include <utility>

#include <json.hpp>

namespace citemetrics::ingest {

namespace {

bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_ascii_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_ascii_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char delim) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t pos = s.find(delim, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      break;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return parts;
}

std::optional<int> parse_year(std::string_view s) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

// Reads a line, strips one trailing '\r' (CRLF input), counts lines.
bool next_line(std::istream& in, std::string& line, std::size_t& line_no) {
  if (!std::getline(in, line)) return false;
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

class RecordSink {
 public:
  explicit RecordSink(IngestReport& report) : report_(report) {}

  void warn(std::size_t line, std::string message) {
    report_.parse_warnings.push_back({line, std::move(message)});
  }

  // Normalizes one raw author name; empty results are dropped with a warning.
  void add_author(Paper& paper, std::string_view raw, std::size_t line) {
    AuthorKey key = normalize_author(raw);
    if (key.value.empty()) {
      warn(line, "author name empty after normalization, omitted");
      return;
    }
    paper.authors.push_back(std::move(key));
  }

  // Appends a reference unless it is empty or points at the record itself.
  void add_reference(Paper& paper, std::string_view raw, std::size_t line) {
    std::string_view id = trim(raw);
    if (id.empty()) {
      warn(line, "empty reference id, omitted");
      return;
    }
    if (id == paper.id.value) {
      warn(line, "self reference dropped");
      return;
    }
    paper.references.push_back(PaperId{std::string(id)});
  }

  void keep(CorpusBuilder& builder, Paper paper, std::size_t line) {
    ++report_.papers_read;
    PaperId id = paper.id;
    if (!builder.add(std::move(paper))) {
      warn(line, "duplicate paper id '" + id.value + "', record skipped");
    }
  }

  void skip(std::size_t line, std::string message) {
    ++report_.papers_read;
    warn(line, std::move(message));
  }

 private:
  IngestReport& report_;
};

ParseResult finish(CorpusBuilder& builder, IngestReport report) {
  Corpus corpus = builder.build();
  const auto& stats = builder.stats();
  report.papers_kept = corpus.paper_count();
  report.duplicate_paper_ids = stats.duplicate_paper_ids;
  report.dangling_refs_dropped = stats.dangling_references_dropped;
  report.empty_author_lists = stats.empty_author_lists;
  return ParseResult{std::move(corpus), std::move(report)};
}

// One blank-line separated marker record, as read.
struct ArnetRecord {
  std::size_t first_line = 0;
  std::optional<std::string> index;
  std::size_t index_line = 0;
  std::optional<std::string> title;
  std::optional<std::string> year;
  std::size_t year_line = 0;
  std::optional<std::string> venue;
  std::vector<std::pair<std::string, std::size_t>> author_payloads;
  std::vector<std::pair<std::string, std::size_t>> references;
  bool saw_marker = false;

  void reset() { *this = ArnetRecord{}; }
};

void flush_arnet(ArnetRecord& record, CorpusBuilder& builder, RecordSink& sink,
                 char author_delim) {
  if (!record.saw_marker) {
    record.reset();
    return;
  }
  if (!record.index || trim(*record.index).empty()) {
    sink.skip(record.first_line, "record without #index skipped");
    record.reset();
    return;
  }

  Paper paper;
  paper.id = PaperId{std::string(trim(*record.index))};
  if (record.title) paper.title = std::string(trim(*record.title));
  for (const auto& [payload, line] : record.author_payloads) {
    if (trim(payload).empty()) continue;  // empty #@ means no authors recorded
    for (std::string_view name : split(payload, author_delim)) {
      sink.add_author(paper, name, line);
    }
  }
  if (record.year) {
    auto year = parse_year(*record.year);
    if (!year && !trim(*record.year).empty()) {
      sink.warn(record.year_line, "unparsable year '" +
                                      std::string(trim(*record.year)) +
                                      "', omitted");
    }
    paper.year = year;
  }
  if (record.venue && !trim(*record.venue).empty()) {
    paper.venue = std::string(trim(*record.venue));
  }
  for (const auto& [ref, line] : record.references) {
    sink.add_reference(paper, ref, line);
  }

  sink.keep(builder, std::move(paper), record.index_line);
  record.reset();
}

}  // namespace

AuthorKey normalize_author(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  bool pending_space = false;
  for (char ch : raw) {
    if (is_ascii_space(ch)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(ch >= 'A' && ch <= 'Z' ? static_cast<char>(ch - 'A' + 'a') : ch);
  }
  return AuthorKey{std::move(out)};
}

ParseResult parse_arnet(std::istream& in, const ArnetOptions& options) {
  const char author_delim =
      options.author_delimiter == AuthorDelimiter::comma ? ',' : ';';

  CorpusBuilder builder;
  IngestReport report;
  RecordSink sink(report);
  ArnetRecord record;

  std::string line;
  std::size_t line_no = 0;
  while (next_line(in, line, line_no)) {
    std::string_view view = line;
    if (trim(view).empty()) {
      flush_arnet(record, builder, sink, author_delim);
      continue;
    }
    if (!record.saw_marker) record.first_line = line_no;

    auto set_scalar = [&](std::optional<std::string>& slot, std::string_view payload,
                          const char* marker) {
      if (slot) {
        sink.warn(line_no, std::string("duplicate ") + marker + " marker ignored");
        return false;
      }
      slot = std::string(payload);
      return true;
    };

    if (view.starts_with("#index")) {
      record.saw_marker = true;
      if (set_scalar(record.index, view.substr(6), "#index")) {
        record.index_line = line_no;
      }
    } else if (view.starts_with("#*")) {
      record.saw_marker = true;
      set_scalar(record.title, view.substr(2), "#*");
    } else if (view.starts_with("#@")) {
      record.saw_marker = true;
      record.author_payloads.emplace_back(std::string(view.substr(2)), line_no);
    } else if (view.starts_with("#t")) {
      record.saw_marker = true;
      if (set_scalar(record.year, view.substr(2), "#t")) {
        record.year_line = line_no;
      }
    } else if (view.starts_with("#c")) {
      record.saw_marker = true;
      set_scalar(record.venue, view.substr(2), "#c");
    } else if (view.starts_with("#%")) {
      record.saw_marker = true;
      record.references.emplace_back(std::string(view.substr(2)), line_no);
    }
    // #! abstracts and unmarked continuation lines are parsed past.
  }
  if (in.bad()) {
    throw StreamError("unrecoverable stream error at line " +
                      std::to_string(line_no));
  }
  flush_arnet(record, builder, sink, author_delim);

  return finish(builder, std::move(report));
}

ParseResult parse_canonical(std::istream& in) {
  CorpusBuilder builder;
  IngestReport report;
  RecordSink sink(report);

  std::string line;
  std::size_t line_no = 0;
  while (next_line(in, line, line_no)) {
    if (trim(line).empty()) continue;

    nlohmann::json record = nlohmann::json::parse(line, nullptr, false);
    if (record.is_discarded() || !record.is_object()) {
      sink.skip(line_no, "invalid record, skipped");
      continue;
    }

    auto id_it = record.find("id");
    if (id_it == record.end() || !id_it->is_string() ||
        id_it->get_ref<const std::string&>().empty()) {
      sink.skip(line_no, "missing or invalid 'id', record skipped");
      continue;
    }

    Paper paper;
    paper.id = PaperId{id_it->get<std::string>()};

    bool bad_schema = false;
    auto schema_fail = [&](const char* field) {
      sink.skip(line_no, std::string("invalid '") + field + "', record skipped");
      bad_schema = true;
    };

    if (auto it = record.find("title"); it != record.end()) {
      if (it->is_string()) {
        paper.title = it->get<std::string>();
      } else {
        schema_fail("title");
      }
    }
    if (auto it = record.find("authors"); !bad_schema && it != record.end()) {
      if (!it->is_array()) {
        schema_fail("authors");
      } else {
        for (const auto& entry : *it) {
          if (!entry.is_string()) {
            schema_fail("authors");
            break;
          }
          sink.add_author(paper, entry.get_ref<const std::string&>(), line_no);
        }
      }
    }
    if (auto it = record.find("year"); !bad_schema && it != record.end()) {
      if (it->is_number_integer()) {
        auto value = it->get<long long>();
        if (value < std::numeric_limits<int>::min() ||
            value > std::numeric_limits<int>::max()) {
          schema_fail("year");
        } else {
          paper.year = static_cast<int>(value);
        }
      } else if (!it->is_null()) {
        schema_fail("year");
      }
    }
    if (auto it = record.find("venue"); !bad_schema && it != record.end()) {
      if (it->is_string()) {
        if (!it->get_ref<const std::string&>().empty()) {
          paper.venue = it->get<std::string>();
        }
      } else if (!it->is_null()) {
        schema_fail("venue");
      }
    }
    if (auto it = record.find("references"); !bad_schema && it != record.end()) {
      if (!it->is_array()) {
        schema_fail("references");
      } else {
        for (const auto& entry : *it) {
          if (!entry.is_string()) {
            schema_fail("references");
            break;
          }
          sink.add_reference(paper, entry.get_ref<const std::string&>(), line_no);
        }
      }
    }
    if (bad_schema) continue;

    sink.keep(builder, std::move(paper), line_no);
  }
  if (in.bad()) {
    throw StreamError("unrecoverable stream error at line " +
                      std::to_string(line_no));
  }

  return finish(builder, std::move(report));
}

void write_canonical(const Corpus& corpus, std::ostream& out) {
  for (const PaperId& id : corpus.sorted_paper_ids()) {
    const Paper& paper = *corpus.find(id);
    nlohmann::json record;
    record["id"] = paper.id.value;
    record["title"] = paper.title;
    auto& authors = record["authors"] = nlohmann::json::array();
    for (const AuthorKey& author : paper.authors) authors.push_back(author.value);
    if (paper.year) record["year"] = *paper.year;
    if (paper.venue) record["venue"] = *paper.venue;
    auto& refs = record["references"] = nlohmann::json::array();
    for (const PaperId& ref : paper.references) refs.push_back(ref.value);
    out << record.dump() << '\n';
  }
}

namespace {

// The marker format is line oriented; flatten any embedded line breaks.
std::string flatten(std::string_view value) {
  std::string out(value);
  std::replace(out.begin(), out.end(), '\n', ' ');
  std::replace(out.begin(), out.end(), '\r', ' ');
  return out;
}

}  // namespace

void write_arnet(const Corpus& corpus, std::ostream& out,
                 const ArnetOptions& options) {
  const char* join =
      options.author_delimiter == AuthorDelimiter::comma ? ", " : "; ";
  for (const PaperId& id : corpus.sorted_paper_ids()) {
    const Paper& paper = *corpus.find(id);
    out << "#index" << paper.id.value << '\n';
    out << "#*" << flatten(paper.title) << '\n';
    if (!paper.authors.empty()) {
      out << "#@";
      for (std::size_t i = 0; i < paper.authors.size(); ++i) {
        if (i > 0) out << join;
        out << flatten(paper.authors[i].value);
      }
      out << '\n';
    }
    if (paper.year) out << "#t" << *paper.year << '\n';
    if (paper.venue) out << "#c" << flatten(*paper.venue) << '\n';
    for (const PaperId& ref : paper.references) {
      out << "#%" << ref.value << '\n';
    }
    out << '\n';
  }
}

}  // namespace citemetrics::ingest
