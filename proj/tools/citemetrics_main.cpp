// citemetrics: author-level citation indicators over bibliographic corpora.
//
// Subcommands: ingest, report, rank, correlate, detect, plotdata, gen.
// Exit status: 0 success, 1 usage error, 2 data error. All data outputs are
// deterministic: identical input and flags produce identical bytes.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "citemetrics/analytics.hpp"
#include "citemetrics/citation_graph.hpp"
#include "citemetrics/corpus.hpp"
#include "citemetrics/indices.hpp"
#include "citemetrics/ingest.hpp"
#include "citemetrics/synthetic.hpp"

namespace {

using namespace citemetrics;

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string path;
  std::string format = "canonical";
  std::string author_delimiter = "comma";
};

struct AnalysisOptions {
  int h_threshold = 8;
  std::optional<double> r_override;
  std::string bomb_policy = "include";
  int bomb_k = 10;
  bool exclude_self_citations = false;
  std::string output_format = "table";
  std::string output_path;
};

ingest::ArnetOptions arnet_options(const InputOptions& in) {
  ingest::ArnetOptions options;
  options.author_delimiter = in.author_delimiter == "semicolon"
                                 ? ingest::AuthorDelimiter::semicolon
                                 : ingest::AuthorDelimiter::comma;
  return options;
}

ingest::ParseResult load_input(const InputOptions& in) {
  std::ifstream file(in.path, std::ios::binary);
  if (!file) throw DataError("cannot open input file: " + in.path);
  if (in.format == "arnet") return ingest::parse_arnet(file, arnet_options(in));
  return ingest::parse_canonical(file);
}

graph::AggregationPolicy aggregation_policy(const AnalysisOptions& opts) {
  graph::AggregationPolicy policy;
  if (opts.bomb_policy == "exclude") {
    policy.bomb_policy = BombPolicy::exclude(opts.bomb_k);
  }
  policy.count_self_citations = !opts.exclude_self_citations;
  return policy;
}

indices::PopulationEvaluation evaluate(const Corpus& corpus,
                                       const AnalysisOptions& opts) {
  const auto profiles = graph::build_profiles(corpus, aggregation_policy(opts));
  try {
    return indices::evaluate_population(profiles, opts.h_threshold,
                                        opts.r_override);
  } catch (const indices::PopulationEmptyError&) {
    throw DataError(
        "no author qualifies for the r estimate (h >= " +
        std::to_string(opts.h_threshold) +
        " and a >= 1); supply --r to override");
  }
}

// Output helpers ------------------------------------------------------------

class OutputSink {
 public:
  explicit OutputSink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw DataError("cannot open output file: " + path);
    }
  }

  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string fmt4(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.4f", value);
  return buffer;
}

std::string fmt4_opt(const std::optional<double>& value,
                     const std::string& missing) {
  return value ? fmt4(*value) : missing;
}

std::string csv_field(std::string_view value) {
  if (value.find_first_of(",\"\n\r") == std::string_view::npos) {
    return std::string(value);
  }
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string pad_left(std::string text, std::size_t width) {
  if (text.size() < width) text.insert(0, width - text.size(), ' ');
  return text;
}

std::string pad_right(std::string text, std::size_t width) {
  if (text.size() < width) text.append(width - text.size(), ' ');
  return text;
}

void print_context_line(std::ostream& out, const indices::PopulationEvaluation& eval,
                        const AnalysisOptions& opts) {
  out << "# r=" << fmt4(eval.r) << " population=" << eval.r_population
      << " h_threshold=" << opts.h_threshold << '\n';
}

nlohmann::json context_record(const indices::PopulationEvaluation& eval,
                              const AnalysisOptions& opts) {
  nlohmann::json record;
  record["record"] = "context";
  record["r"] = eval.r;
  record["population"] = eval.r_population;
  record["h_threshold"] = opts.h_threshold;
  return record;
}

nlohmann::json report_record(const IndexReport& report) {
  nlohmann::json record;
  record["record"] = "author";
  record["author"] = report.author.value;
  record["h"] = report.h;
  record["a"] = report.a;
  record["papers"] = report.publication_count;
  record["citers"] = report.citer_count;
  record["total_citations"] = report.total_citations;
  record["n"] = report.n;
  if (report.x) {
    record["x"] = *report.x;
    record["xh"] = *report.corrected;
  }
  return record;
}

void write_report_table(std::ostream& out, std::span<const IndexReport> reports,
                        const indices::PopulationEvaluation& eval,
                        const AnalysisOptions& opts, bool with_rank) {
  print_context_line(out, eval, opts);

  std::size_t author_width = 6;
  for (const IndexReport& report : reports) {
    author_width = std::max(author_width, report.author.value.size());
  }

  if (with_rank) out << pad_left("rank", 5) << "  ";
  out << pad_right("author", author_width) << pad_left("h", 6)
      << pad_left("a", 6) << pad_left("papers", 8) << pad_left("citers", 8)
      << pad_left("n", 10) << pad_left("x", 9) << pad_left("xh", 10) << '\n';

  std::size_t rank = 0;
  for (const IndexReport& report : reports) {
    ++rank;
    if (with_rank) out << pad_left(std::to_string(rank), 5) << "  ";
    out << pad_right(report.author.value, author_width)
        << pad_left(std::to_string(report.h), 6)
        << pad_left(std::to_string(report.a), 6)
        << pad_left(std::to_string(report.publication_count), 8)
        << pad_left(std::to_string(report.citer_count), 8)
        << pad_left(fmt4(report.n), 10) << pad_left(fmt4_opt(report.x, "-"), 9)
        << pad_left(fmt4_opt(report.corrected, "-"), 10) << '\n';
  }
}

void write_report_csv(std::ostream& out, std::span<const IndexReport> reports,
                      bool with_rank) {
  if (with_rank) out << "rank,";
  out << "author,h,a,papers,citers,n,x,xh\n";
  std::size_t rank = 0;
  for (const IndexReport& report : reports) {
    ++rank;
    if (with_rank) out << rank << ',';
    out << csv_field(report.author.value) << ',' << report.h << ',' << report.a
        << ',' << report.publication_count << ',' << report.citer_count << ','
        << fmt4(report.n) << ',' << fmt4_opt(report.x, "") << ','
        << fmt4_opt(report.corrected, "") << '\n';
  }
}

void write_report_jsonl(std::ostream& out, std::span<const IndexReport> reports,
                        const indices::PopulationEvaluation& eval,
                        const AnalysisOptions& opts, bool with_rank) {
  out << context_record(eval, opts).dump() << '\n';
  std::size_t rank = 0;
  for (const IndexReport& report : reports) {
    nlohmann::json record = report_record(report);
    if (with_rank) record["rank"] = ++rank;
    out << record.dump() << '\n';
  }
}

void emit_reports(std::span<const IndexReport> reports,
                  const indices::PopulationEvaluation& eval,
                  const AnalysisOptions& opts, bool with_rank) {
  OutputSink sink(opts.output_path);
  std::ostream& out = sink.stream();
  if (opts.output_format == "csv") {
    std::cerr << "r=" << fmt4(eval.r) << " population=" << eval.r_population
              << " h_threshold=" << opts.h_threshold << '\n';
    write_report_csv(out, reports, with_rank);
  } else if (opts.output_format == "jsonl") {
    write_report_jsonl(out, reports, eval, opts, with_rank);
  } else {
    write_report_table(out, reports, eval, opts, with_rank);
  }
}

// Commands ------------------------------------------------------------------

int cmd_ingest(const InputOptions& in, const std::string& output_path) {
  ingest::ParseResult parsed = load_input(in);

  {
    std::ofstream snapshot(output_path, std::ios::binary);
    if (!snapshot) throw DataError("cannot open output file: " + output_path);
    ingest::write_canonical(parsed.corpus, snapshot);
  }

  const ingest::IngestReport& report = parsed.report;
  std::cout << "papers_read " << report.papers_read << '\n'
            << "papers_kept " << report.papers_kept << '\n'
            << "duplicate_paper_ids " << report.duplicate_paper_ids << '\n'
            << "malformed_skipped " << report.malformed_skipped() << '\n'
            << "empty_author_lists " << report.empty_author_lists << '\n'
            << "dangling_refs_dropped " << report.dangling_refs_dropped << '\n'
            << "parse_warnings " << report.parse_warnings.size() << '\n'
            << "snapshot " << output_path << '\n';

  constexpr std::size_t kMaxShown = 20;
  for (std::size_t i = 0; i < report.parse_warnings.size() && i < kMaxShown; ++i) {
    const auto& warning = report.parse_warnings[i];
    std::cerr << "warning: line " << warning.line << ": " << warning.message
              << '\n';
  }
  if (report.parse_warnings.size() > kMaxShown) {
    std::cerr << "warning: " << (report.parse_warnings.size() - kMaxShown)
              << " more warnings suppressed\n";
  }
  return 0;
}

int cmd_report(const InputOptions& in, const AnalysisOptions& opts) {
  const Corpus corpus = load_input(in).corpus;
  const auto eval = evaluate(corpus, opts);
  emit_reports(eval.reports, eval, opts, /*with_rank=*/false);
  return 0;
}

int cmd_rank(const InputOptions& in, const AnalysisOptions& opts,
             const std::string& metric, std::size_t top_k) {
  const Corpus corpus = load_input(in).corpus;
  const auto eval = evaluate(corpus, opts);
  const auto ranked = analytics::rank_authors(
      eval.reports,
      metric == "corrected" ? analytics::RankMetric::corrected
                            : analytics::RankMetric::h,
      top_k);
  emit_reports(ranked, eval, opts, /*with_rank=*/true);
  return 0;
}

int cmd_correlate(const InputOptions& in, const AnalysisOptions& opts,
                  const std::vector<int>& thresholds,
                  const std::string& method) {
  const Corpus corpus = load_input(in).corpus;
  const auto eval = evaluate(corpus, opts);
  const bool use_spearman = method == "spearman";
  const std::string column = method + "_xh_h";

  struct Row {
    int threshold;
    std::size_t population;
    std::optional<double> value;
  };
  std::vector<Row> rows;
  for (const int threshold : thresholds) {
    std::vector<double> xs;
    std::vector<double> ys;
    for (const IndexReport& report : eval.reports) {
      if (report.h < threshold || !report.corrected) continue;
      xs.push_back(*report.corrected);
      ys.push_back(static_cast<double>(report.h));
    }
    Row row{threshold, xs.size(), std::nullopt};
    try {
      row.value = use_spearman ? analytics::spearman(xs, ys)
                               : analytics::pearson(xs, ys);
    } catch (const analytics::UndefinedCorrelationError&) {
      row.value = std::nullopt;
    }
    rows.push_back(row);
  }

  OutputSink sink(opts.output_path);
  std::ostream& out = sink.stream();
  if (opts.output_format == "jsonl") {
    out << context_record(eval, opts).dump() << '\n';
    for (const Row& row : rows) {
      nlohmann::json record;
      record["record"] = "correlation";
      record["threshold"] = row.threshold;
      record["population"] = row.population;
      if (row.value) record[column] = *row.value;
      out << record.dump() << '\n';
    }
  } else if (opts.output_format == "csv") {
    std::cerr << "r=" << fmt4(eval.r) << " population=" << eval.r_population
              << " h_threshold=" << opts.h_threshold << '\n';
    out << "threshold,population," << column << '\n';
    for (const Row& row : rows) {
      out << row.threshold << ',' << row.population << ','
          << fmt4_opt(row.value, "undefined") << '\n';
    }
  } else {
    print_context_line(out, eval, opts);
    out << pad_left("threshold", 10) << pad_left("population", 12)
        << pad_left(column, 15) << '\n';
    for (const Row& row : rows) {
      out << pad_left(std::to_string(row.threshold), 10)
          << pad_left(std::to_string(row.population), 12)
          << pad_left(fmt4_opt(row.value, "undefined"), 15) << '\n';
    }
  }
  return 0;
}

int cmd_detect(const InputOptions& in, const AnalysisOptions& opts, int k) {
  const Corpus corpus = load_input(in).corpus;
  const auto findings = analytics::detect_citation_bombs(corpus, k);

  OutputSink sink(opts.output_path);
  std::ostream& out = sink.stream();
  if (opts.output_format == "jsonl") {
    for (const auto& finding : findings) {
      nlohmann::json record;
      record["record"] = "bomb";
      record["citing_paper"] = finding.citing_paper.value;
      record["target_author"] = finding.target_author.value;
      record["distinct_targets_cited"] = finding.distinct_targets_cited;
      record["citing_authors"] = finding.citing_author_count;
      out << record.dump() << '\n';
    }
  } else if (opts.output_format == "csv") {
    out << "citing_paper,target_author,distinct_targets_cited,citing_authors\n";
    for (const auto& finding : findings) {
      out << csv_field(finding.citing_paper.value) << ','
          << csv_field(finding.target_author.value) << ','
          << finding.distinct_targets_cited << ','
          << finding.citing_author_count << '\n';
    }
  } else {
    std::size_t paper_width = 12;
    std::size_t author_width = 13;
    for (const auto& finding : findings) {
      paper_width = std::max(paper_width, finding.citing_paper.value.size());
      author_width = std::max(author_width, finding.target_author.value.size());
    }
    out << pad_right("citing_paper", paper_width) << "  "
        << pad_right("target_author", author_width)
        << pad_left("distinct", 10) << pad_left("authors", 9) << '\n';
    for (const auto& finding : findings) {
      out << pad_right(finding.citing_paper.value, paper_width) << "  "
          << pad_right(finding.target_author.value, author_width)
          << pad_left(std::to_string(finding.distinct_targets_cited), 10)
          << pad_left(std::to_string(finding.citing_author_count), 9) << '\n';
    }
  }
  return 0;
}

int cmd_plotdata(const InputOptions& in, const AnalysisOptions& opts,
                 const std::string& prefix) {
  const Corpus corpus = load_input(in).corpus;
  const auto eval = evaluate(corpus, opts);

  auto write_series = [&](analytics::OrderBy order, const std::string& path) {
    const auto series = analytics::distribution_series(eval.reports, order);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open output file: " + path);
    out << "rank,h,a\n";
    for (const auto& point : series) {
      out << point.rank << ',' << point.h << ',' << point.a << '\n';
    }
  };
  const std::string by_h = prefix + ".by_h.csv";
  const std::string by_a = prefix + ".by_a.csv";
  write_series(analytics::OrderBy::h, by_h);
  write_series(analytics::OrderBy::a, by_a);
  std::cout << "series " << by_h << '\n' << "series " << by_a << '\n';
  return 0;
}

int cmd_gen(const synthetic::GenSpec& spec, const std::string& output_path,
            const std::string& format) {
  const auto generated = synthetic::generate(spec);
  const Corpus corpus = synthetic::to_corpus(generated);

  OutputSink sink(output_path);
  if (format == "arnet") {
    ingest::write_arnet(corpus, sink.stream());
  } else {
    ingest::write_canonical(corpus, sink.stream());
  }
  std::cerr << "papers=" << generated.papers.size()
            << " edges=" << generated.edge_count
            << " authors=" << generated.author_count << " seed=" << spec.seed
            << '\n';
  return 0;
}

void add_input_options(CLI::App* cmd, InputOptions& in,
                       const std::string& default_format) {
  in.format = default_format;
  cmd->add_option("-i,--input", in.path, "Input file")->required();
  cmd->add_option("--format", in.format, "Input format")
      ->check(CLI::IsMember({"arnet", "canonical"}))
      ->capture_default_str();
  cmd->add_option("--author-delimiter", in.author_delimiter,
                  "Author delimiter in #@ lines (arnet input)")
      ->check(CLI::IsMember({"comma", "semicolon"}))
      ->capture_default_str();
}

void add_analysis_options(CLI::App* cmd, AnalysisOptions& opts) {
  cmd->add_option("--h-threshold", opts.h_threshold,
                  "Population filter for the r estimate")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--r", opts.r_override,
                  "Override the correction coefficient r");
  cmd->add_option("--bomb-policy", opts.bomb_policy,
                  "Citing-paper filter for aggregation")
      ->check(CLI::IsMember({"include", "exclude"}))
      ->capture_default_str();
  cmd->add_option("--bomb-k", opts.bomb_k,
                  "Distinct-publication threshold for the exclude policy")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_flag("--exclude-self-citations", opts.exclude_self_citations,
                "Ignore citing papers co-authored by the evaluated author");
  cmd->add_option("--output-format", opts.output_format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "jsonl"}))
      ->capture_default_str();
  cmd->add_option("-o,--output", opts.output_path,
                  "Write output to a file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Author-level citation indicators over bibliographic corpora"};
  app.require_subcommand(1);

  int rc = 0;

  // ingest
  InputOptions ingest_in;
  std::string ingest_output;
  auto* ingest_cmd =
      app.add_subcommand("ingest", "Parse a corpus and persist a snapshot");
  add_input_options(ingest_cmd, ingest_in, "arnet");
  ingest_cmd->add_option("-o,--output", ingest_output, "Snapshot file to write")
      ->required();
  ingest_cmd->callback([&] { rc = cmd_ingest(ingest_in, ingest_output); });

  // report
  InputOptions report_in;
  AnalysisOptions report_opts;
  auto* report_cmd =
      app.add_subcommand("report", "Per-author indicator table (h, a, n, x, xh)");
  add_input_options(report_cmd, report_in, "canonical");
  add_analysis_options(report_cmd, report_opts);
  report_cmd->callback([&] { rc = cmd_report(report_in, report_opts); });

  // rank
  InputOptions rank_in;
  AnalysisOptions rank_opts;
  std::string rank_metric = "h";
  std::size_t rank_top = 20;
  auto* rank_cmd = app.add_subcommand("rank", "Top authors by h or by xh");
  add_input_options(rank_cmd, rank_in, "canonical");
  add_analysis_options(rank_cmd, rank_opts);
  rank_cmd->add_option("--metric", rank_metric, "Ranking metric")
      ->check(CLI::IsMember({"h", "corrected"}))
      ->capture_default_str();
  rank_cmd->add_option("--top", rank_top, "Number of rows")
      ->capture_default_str();
  rank_cmd->callback(
      [&] { rc = cmd_rank(rank_in, rank_opts, rank_metric, rank_top); });

  // correlate
  InputOptions correlate_in;
  AnalysisOptions correlate_opts;
  std::vector<int> thresholds = {8, 20, 30};
  std::string correlate_method = "pearson";
  auto* correlate_cmd = app.add_subcommand(
      "correlate", "Correlation of xh and h per h-threshold");
  add_input_options(correlate_cmd, correlate_in, "canonical");
  add_analysis_options(correlate_cmd, correlate_opts);
  correlate_cmd
      ->add_option("--thresholds", thresholds, "h thresholds, comma separated")
      ->delimiter(',')
      ->capture_default_str();
  correlate_cmd->add_option("--method", correlate_method, "Correlation method")
      ->check(CLI::IsMember({"pearson", "spearman"}))
      ->capture_default_str();
  correlate_cmd->callback([&] {
    rc = cmd_correlate(correlate_in, correlate_opts, thresholds,
                       correlate_method);
  });

  // detect
  InputOptions detect_in;
  AnalysisOptions detect_opts;
  int detect_k = 10;
  auto* detect_cmd =
      app.add_subcommand("detect", "Citation bombs: one paper citing many "
                                   "publications of one author");
  add_input_options(detect_cmd, detect_in, "canonical");
  detect_cmd->add_option("--bomb-k", detect_k, "Distinct-publication threshold")
      ->check(CLI::Range(2, 1 << 20))
      ->capture_default_str();
  detect_cmd->add_option("--output-format", detect_opts.output_format,
                         "Output format")
      ->check(CLI::IsMember({"table", "csv", "jsonl"}))
      ->capture_default_str();
  detect_cmd->add_option("-o,--output", detect_opts.output_path,
                         "Write output to a file instead of stdout");
  detect_cmd->callback([&] { rc = cmd_detect(detect_in, detect_opts, detect_k); });

  // plotdata
  InputOptions plot_in;
  AnalysisOptions plot_opts;
  std::string plot_prefix;
  auto* plot_cmd = app.add_subcommand(
      "plotdata", "Distribution series files for h and a, one row per author");
  add_input_options(plot_cmd, plot_in, "canonical");
  add_analysis_options(plot_cmd, plot_opts);
  plot_cmd->get_option("-o")->required()->description(
      "Output file prefix (writes <prefix>.by_h.csv and <prefix>.by_a.csv)");
  plot_cmd->callback([&] {
    rc = cmd_plotdata(plot_in, plot_opts, plot_opts.output_path);
  });

  // gen
  synthetic::GenSpec gen_spec;
  std::string gen_output;
  std::string gen_format = "canonical";
  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic corpus");
  gen_cmd->add_option("--papers", gen_spec.papers)->capture_default_str();
  gen_cmd->add_option("--authors", gen_spec.authors)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  gen_cmd->add_option("--edges", gen_spec.target_edges, "Approximate edge count")
      ->capture_default_str();
  gen_cmd->add_option("--max-authors", gen_spec.max_authors_per_paper)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  gen_cmd->add_option("--fan-probability", gen_spec.fan_probability)
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  gen_cmd->add_option("--fan-min", gen_spec.fan_min_targets)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  gen_cmd->add_option("--fan-max", gen_spec.fan_max_targets)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  gen_cmd->add_option("--author-skew", gen_spec.author_skew)
      ->capture_default_str();
  gen_cmd->add_option("--seed", gen_spec.seed)->capture_default_str();
  gen_cmd->add_option("-o,--output", gen_output,
                      "Write the corpus to a file instead of stdout");
  gen_cmd->add_option("--format", gen_format, "Corpus format to emit")
      ->check(CLI::IsMember({"canonical", "arnet"}))
      ->capture_default_str();
  gen_cmd->callback([&] { rc = cmd_gen(gen_spec, gen_output, gen_format); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ingest::StreamError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return rc;
}
