#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "sqturan/coloring.hpp"
#include "sqturan/prooflab.hpp"
#include "sqturan/search.hpp"
#include "sqturan/spectral.hpp"

namespace sqturan {

enum class ReportFormat { csv, text, graph6 };

ReportFormat parse_report_format(const std::string& s);

/// Fixed notation with 12 digits after the point, e.g. "3.000000000000".
std::string format_double(double x);

/// Rows of string cells under named columns. Producers add rows in a
/// deterministic order keyed by their first columns.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row);
};

/// Output content: a table, key/value lines, or graph6 lines.
struct Report {
  std::string config;  // single-line JSON of the resolved run configuration
  Table table;
  std::vector<std::pair<std::string, std::string>> summary;
  std::vector<std::string> graphs;  // graph6 lines, emitted sorted
};

/// Writes the report in the requested format. Every format starts with
/// "# config <json>".
void emit(std::ostream& out, const Report& report, ReportFormat format);
void emit_file(const std::filesystem::path& path, const Report& report, ReportFormat format);

Table coloring_table(const ColoringCertificate& c);
Table partition_table(const GoodPartition& p);
Table vector_table(const std::vector<double>& x);
Table lemma_table(const std::vector<LemmaReport>& reports);
Table search_table(const SearchReport& r);
Table consistency_table(const std::vector<ConsistencyRow>& rows);
Table tripartition_table(const TriPartition& p);

}  // namespace sqturan
