#include "sqturan/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "sqturan/error.hpp"

namespace sqturan {

ReportFormat parse_report_format(const std::string& s) {
  if (s == "csv") return ReportFormat::csv;
  if (s == "text") return ReportFormat::text;
  if (s == "graph6") return ReportFormat::graph6;
  throw ParameterError("format must be csv, text or graph6 (got '" + s + "')");
}

std::string format_double(double x) {
  if (x == 0.0) x = 0.0;  // no "-0.000000000000"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", x);
  return buf;
}

void Table::add(std::vector<std::string> row) {
  if (row.size() != columns.size())
    throw InternalCheckError("table row has " + std::to_string(row.size()) + " cells for " +
                             std::to_string(columns.size()) + " columns");
  rows.push_back(std::move(row));
}

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string b(bool x) { return x ? "true" : "false"; }

std::string opt_bool(const std::optional<bool>& x) { return x ? b(*x) : "n/a"; }

std::string join_ints(const std::vector<int>& v, char sep = ' ') {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

std::string quantities(const std::vector<std::pair<std::string, double>>& q) {
  std::string s;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (i) s += ';';
    s += q[i].first + "=" + format_double(q[i].second);
  }
  return s;
}

}  // namespace

void emit(std::ostream& out, const Report& report, ReportFormat format) {
  out << "# config " << report.config << '\n';
  switch (format) {
    case ReportFormat::csv: {
      for (std::size_t i = 0; i < report.table.columns.size(); ++i)
        out << (i ? "," : "") << csv_cell(report.table.columns[i]);
      out << '\n';
      for (const auto& row : report.table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
        out << '\n';
      }
      break;
    }
    case ReportFormat::text: {
      for (const auto& [k, v] : report.summary) out << k << '=' << v << '\n';
      break;
    }
    case ReportFormat::graph6: {
      auto lines = report.graphs;
      std::sort(lines.begin(), lines.end());
      for (const auto& g : lines) out << g << '\n';
      break;
    }
  }
}

void emit_file(const std::filesystem::path& path, const Report& report, ReportFormat format) {
  std::ostringstream buf;
  emit(buf, report, format);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << buf.str();
  out.close();
  if (!out) throw IoError("write failed for " + path.string());
}

Table coloring_table(const ColoringCertificate& c) {
  Table t{{"vertex", "color"}, {}};
  for (std::size_t v = 0; v < c.colors.size(); ++v) t.add({std::to_string(v), std::to_string(c.colors[v])});
  return t;
}

Table partition_table(const GoodPartition& p) {
  Table t{{"part", "size", "vertices"}, {}};
  for (std::size_t i = 0; i < p.parts.size(); ++i)
    t.add({std::to_string(i + 1), std::to_string(p.parts[i].size()), join_ints(p.parts[i])});
  return t;
}

Table vector_table(const std::vector<double>& x) {
  Table t{{"vertex", "entry"}, {}};
  for (std::size_t v = 0; v < x.size(); ++v) t.add({std::to_string(v), format_double(x[v])});
  return t;
}

Table lemma_table(const std::vector<LemmaReport>& reports) {
  Table t{{"check", "holds", "quantities", "thresholds"}, {}};
  for (const auto& r : reports) t.add({r.id, b(r.holds), quantities(r.quantities), quantities(r.thresholds)});
  return t;
}

Table search_table(const SearchReport& r) {
  Table t{{"ell", "n", "objective", "method", "best_value", "witness_count", "graphs_enumerated", "exhaustive",
           "nodes", "gn_value", "gn_comparison", "seed"},
          {}};
  t.add({std::to_string(r.ell), std::to_string(r.n), to_string(r.objective), r.method, format_double(r.best_value),
         std::to_string(r.witnesses.size()), std::to_string(r.graphs_enumerated), b(r.exhaustive),
         std::to_string(r.nodes), r.gn_value ? format_double(*r.gn_value) : "n/a",
         r.gn_comparison ? to_string(*r.gn_comparison) : "n/a", std::to_string(r.seed)});
  return t;
}

Table consistency_table(const std::vector<ConsistencyRow>& rows) {
  Table t{{"ell", "n", "gn_free", "turan3_free", "turan2_free", "e_turan3", "e_gn", "e_turan3_lt_gn", "rho_turan3",
           "rho_gn", "rho_turan3_lt_gn", "ok"},
          {}};
  auto sorted = rows;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return std::pair(a.ell, a.n) < std::pair(b.ell, b.n); });
  for (const auto& r : sorted)
    t.add({std::to_string(r.ell), std::to_string(r.n), opt_bool(r.gn_free), opt_bool(r.turan3_free), b(r.turan2_free),
           std::to_string(r.edges_turan3), std::to_string(r.edges_gn), b(r.edges_turan3_below_gn),
           format_double(r.rho_turan3), format_double(r.rho_gn), b(r.rho_turan3_below_gn), b(r.ok())});
  return t;
}

Table tripartition_table(const TriPartition& p) {
  Table t{{"part", "size", "vertices"}, {}};
  for (int i = 0; i < 3; ++i)
    t.add({std::to_string(i + 1), std::to_string(p.parts[i].size()), join_ints(p.parts[i])});
  return t;
}

}  // namespace sqturan
