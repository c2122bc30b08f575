// Command-line front end: sqturan <command> [flags]

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sqturan/canonical.hpp"
#include "sqturan/coloring.hpp"
#include "sqturan/detector.hpp"
#include "sqturan/error.hpp"
#include "sqturan/graph.hpp"
#include "sqturan/graph_io.hpp"
#include "sqturan/prooflab.hpp"
#include "sqturan/report.hpp"
#include "sqturan/search.hpp"
#include "sqturan/spectral.hpp"

namespace {

using namespace sqturan;
namespace fs = std::filesystem;

enum Exit { ok = 0, usage = 1, partial = 2, check_failed = 3 };

struct GraphArgs {
  std::string family;
  std::string file;
  std::string g6;
  int n = 0;
  int ell = 0;
  int r = 3;
  int k = 2;
  std::vector<int> parts;

  void add_to(CLI::App* app) {
    app->add_option("--family", family,
                    "gn, turan, complete, cycle, path, cycle-square, path-square, cycle-power, multipartite")
        ->check(CLI::IsMember({"gn", "turan", "complete", "cycle", "path", "cycle-square", "path-square",
                               "cycle-power", "multipartite"}));
    app->add_option("--graph", file, "graph6 or DIMACS file (first graph is used)")->check(CLI::ExistingFile);
    app->add_option("--g6", g6, "graph6 string");
    app->add_option("--n", n, "order for gn/turan/complete");
    app->add_option("--ell", ell, "length for cycle and path families");
    app->add_option("--r", r, "number of parts for turan")->capture_default_str();
    app->add_option("--k", k, "power for cycle-power")->capture_default_str();
    app->add_option("--parts", parts, "part sizes for multipartite")->delimiter(',');
  }

  bool given() const { return !family.empty() || !file.empty() || !g6.empty(); }

  Graph build_graph() const {
    const int sources = !family.empty() + !file.empty() + !g6.empty();
    if (sources != 1) throw ParameterError("exactly one of --family, --graph, --g6 is required");
    if (!file.empty()) return read_graph_file(file);
    if (!g6.empty()) return from_graph6(g6);
    if (family == "gn") return gn_graph(need(n, "--n"));
    if (family == "turan") return turan_graph(need(n, "--n"), r);
    if (family == "complete") return complete_graph(need(n, "--n"));
    if (family == "cycle") return cycle_graph(need(ell, "--ell"));
    if (family == "path") return path_graph(need(ell, "--ell"));
    if (family == "cycle-square") return squared_cycle(need(ell, "--ell"));
    if (family == "path-square") return squared_path(need(ell, "--ell"));
    if (family == "cycle-power") return graph_power(cycle_graph(need(ell, "--ell")), k);
    if (parts.empty()) throw ParameterError("--parts is required for multipartite");
    return complete_multipartite(parts);
  }

  static int need(int v, const char* flag) {
    if (v <= 0) throw ParameterError(std::string(flag) + " must be a positive integer");
    return v;
  }
};

struct OutputArgs {
  std::string format;
  std::string out;

  void add_to(CLI::App* app, const std::string& default_format) {
    app->add_option("--format", format, "csv, text or graph6")
        ->check(CLI::IsMember({"csv", "text", "graph6"}))
        ->default_str(default_format);
    app->add_option("--out", out, "output path (default stdout)");
  }

  void resolve(const CLI::App* sub) {
    if (format.empty()) format = sub->get_option("--format")->get_default_str();
  }
};

// Every option of the invoked subcommand, as given or defaulted.
std::string resolved_config(const CLI::App* sub, int threads) {
  nlohmann::ordered_json j;
  j["command"] = sub->get_name();
  for (const CLI::Option* opt : sub->get_options()) {
    const std::string name = opt->get_single_name();
    if (name == "help" || name.empty()) continue;
    if (opt->get_type_size() == 0) {
      j[name] = opt->count() > 0;
    } else if (opt->count() > 0) {
      const auto& res = opt->results();
      if (res.size() == 1)
        j[name] = res.front();
      else
        j[name] = res;
    } else {
      j[name] = opt->get_default_str();
    }
  }
  j["threads"] = threads;
  return j.dump();
}

void write(const Report& report, const OutputArgs& o) {
  const ReportFormat f = parse_report_format(o.format);
  if (o.out.empty())
    emit(std::cout, report, f);
  else
    emit_file(o.out, report, f);
}

std::string b(bool v) { return v ? "true" : "false"; }

std::string join_ints(const std::vector<int>& v, char sep = ' ') {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

Table summary_table(const std::vector<std::pair<std::string, std::string>>& kv) {
  Table t{{"key", "value"}, {}};
  for (const auto& [k, v] : kv) t.add({k, v});
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Squared-cycle Turán toolkit"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  int threads = 1;
  auto add_threads = [&](CLI::App* sub) {
    sub->add_option("--threads", threads, "worker threads")
        ->envname("SQTURAN_THREADS")
        ->check(CLI::Range(1, 256))
        ->capture_default_str();
  };

  GraphArgs ga;
  OutputArgs oa;
  Report report;
  int exit_code = ok;

  // construct
  auto* construct = app.add_subcommand("construct", "build a graph and write it as graph6");
  ga.add_to(construct);
  oa.add_to(construct, "graph6");

  // edges
  auto* edges = app.add_subcommand("edges", "order, edge count and closed forms");
  ga.add_to(edges);
  oa.add_to(edges, "text");

  // matching
  auto* matching = app.add_subcommand("matching", "maximum matching");
  ga.add_to(matching);
  oa.add_to(matching, "csv");

  // chromatic
  auto* chromatic = app.add_subcommand("chromatic", "exact chromatic number with a certificate");
  ga.add_to(chromatic);
  oa.add_to(chromatic, "csv");
  std::int64_t chi_limit = ChromaticOptions{}.node_limit;
  chromatic->add_option("--node-limit", chi_limit)->capture_default_str();

  // good-partition
  auto* good = app.add_subcommand("good-partition", "residue, explicit, critical or uniqueness partitions");
  std::string gp_kind = "residue";
  int gp_ell = 0;
  good->add_option("--kind", gp_kind)
      ->check(CLI::IsMember({"residue", "cycle", "critical", "uniqueness"}))
      ->capture_default_str();
  good->add_option("--ell", gp_ell)->required()->check(CLI::Range(3, 512));
  oa.add_to(good, "csv");

  // detect
  auto* detect = app.add_subcommand("detect", "search for a squared cycle in a host");
  ga.add_to(detect);
  oa.add_to(detect, "text");
  int det_len = 0;
  std::optional<int> through_vertex;
  std::vector<int> through_edge;
  DetectorOptions det;
  detect->add_option("--length", det_len, "ell of the squared cycle")->required()->check(CLI::Range(3, 512));
  detect->add_option("--through-vertex", through_vertex);
  detect->add_option("--through-edge", through_edge)->delimiter(',')->expected(2);
  detect->add_option("--node-limit", det.node_limit)->capture_default_str();
  add_threads(detect);

  // spectral
  auto* spectral = app.add_subcommand("spectral", "spectral radius by power iteration");
  ga.add_to(spectral);
  oa.add_to(spectral, "text");
  SpectralOptions sp;
  bool print_vector = false;
  spectral->add_option("--tol", sp.tol)->capture_default_str();
  spectral->add_option("--max-iterations", sp.max_iterations)->capture_default_str();
  spectral->add_flag("--vector", print_vector, "emit the Perron vector as CSV");

  // eigen-balance
  auto* balance = app.add_subcommand("eigen-balance", "Perron vector of K1 + K(n1,n2,n3)");
  std::vector<int> bal_parts;
  double bal_tol = 1e-8;
  balance->add_option("--parts", bal_parts, "n1,n2,n3")->delimiter(',')->expected(3)->required();
  balance->add_option("--tolerance", bal_tol)->capture_default_str();
  oa.add_to(balance, "text");

  // audit
  auto* audit = app.add_subcommand("audit", "proof-set statistics on a host");
  ga.add_to(audit);
  oa.add_to(audit, "csv");
  double eta = 1e-4;
  std::optional<int> audit_k;
  std::string audit_maxcut = "auto";
  MaxCutOptions audit_mc;
  audit->add_option("--eta", eta)->capture_default_str();
  audit->add_option("--cycle-k", audit_k, "ell = 3k+2; enables the eta precondition warning");
  audit->add_option("--maxcut", audit_maxcut)->check(CLI::IsMember({"auto", "exact", "local"}))->capture_default_str();
  audit->add_option("--seed", audit_mc.seed)->capture_default_str();
  audit->add_option("--restarts", audit_mc.restarts)->capture_default_str();
  add_threads(audit);

  // maxcut3
  auto* maxcut = app.add_subcommand("maxcut3", "max-cross 3-partition");
  ga.add_to(maxcut);
  oa.add_to(maxcut, "csv");
  std::string mc_mode = "local";
  MaxCutOptions mc;
  maxcut->add_option("--mode", mc_mode)->check(CLI::IsMember({"exact", "local"}))->capture_default_str();
  maxcut->add_option("--seed", mc.seed)->capture_default_str();
  maxcut->add_option("--restarts", mc.restarts)->capture_default_str();
  add_threads(maxcut);

  // search
  auto* search = app.add_subcommand("search", "extremal search for C_ell^2-free graphs");
  int s_ell = 0, s_n = 0;
  std::string s_objective = "edges", s_method = "auto", s_witnesses;
  std::int64_t s_budget = 0;
  std::uint64_t s_seed = 0;
  search->add_option("--ell", s_ell)->required()->check(CLI::Range(3, 512));
  search->add_option("--n", s_n)->required()->check(CLI::Range(1, 512));
  search->add_option("--objective", s_objective)->check(CLI::IsMember({"edges", "spectral"}))->capture_default_str();
  search->add_option("--method", s_method)
      ->check(CLI::IsMember({"auto", "exhaustive", "hillclimb"}))
      ->capture_default_str();
  search->add_option("--budget", s_budget, "node budget (exhaustive) or move attempts (hillclimb); 0 = default")
      ->capture_default_str();
  search->add_option("--seed", s_seed)->capture_default_str();
  search->add_option("--witnesses", s_witnesses, "graph6 witness file");
  oa.add_to(search, "csv");
  add_threads(search);

  // verify-theorem
  auto* verify = app.add_subcommand("verify-theorem", "freeness and comparison rows over a range of n");
  std::vector<int> v_ells;
  int v_min = 0, v_max = 0;
  verify->add_option("--ell", v_ells)->required()->delimiter(',')->check(CLI::Range(3, 512));
  verify->add_option("--n-min", v_min)->required()->check(CLI::Range(4, 512));
  verify->add_option("--n-max", v_max)->required()->check(CLI::Range(4, 512));
  oa.add_to(verify, "csv");
  add_threads(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? ok : usage;
  }

  const CLI::App* sub = app.get_subcommands().front();
  oa.resolve(sub);
  report.config = resolved_config(sub, threads);
  std::vector<std::string> trailing;  // verdict lines after the report

  try {
    if (sub == construct) {
      const Graph g = ga.build_graph();
      report.graphs = {to_graph6(g)};
      report.summary = {{"n", std::to_string(g.order())}, {"edges", std::to_string(g.edge_count())},
                        {"graph6", to_graph6(g)}};
      report.table = summary_table(report.summary);
    } else if (sub == edges) {
      const Graph g = ga.build_graph();
      report.summary = {{"n", std::to_string(g.order())}, {"edges", std::to_string(g.edge_count())},
                        {"min_degree", std::to_string(g.min_degree())},
                        {"max_degree", std::to_string(g.max_degree())},
                        {"connected", b(is_connected(g))}};
      if (ga.family == "turan")
        report.summary.emplace_back("closed_form", std::to_string(turan_edge_count(g.order(), ga.r)));
      if (ga.family == "gn") report.summary.emplace_back("closed_form", std::to_string(gn_edge_count(g.order())));
      report.table = summary_table(report.summary);
    } else if (sub == matching) {
      const Graph g = ga.build_graph();
      const Matching m = max_matching(g);
      report.table = Table{{"u", "v"}, {}};
      for (auto [u, v] : m.edges) report.table.add({std::to_string(u), std::to_string(v)});
      report.summary = {{"nu", std::to_string(m.size())}};
      trailing.push_back("nu=" + std::to_string(m.size()));
    } else if (sub == chromatic) {
      const Graph g = ga.build_graph();
      ChromaticOptions co;
      co.node_limit = chi_limit;
      const auto r = chromatic_number(g, co);
      r.certificate.validate(g);
      report.table = coloring_table(r.certificate);
      report.summary = {{"chi", std::to_string(r.chi)}, {"clique_lower_bound", std::to_string(r.clique_lower_bound)},
                        {"nodes", std::to_string(r.nodes)}};
      trailing.push_back("chi=" + std::to_string(r.chi));
    } else if (sub == good) {
      if (gp_kind == "uniqueness") {
        const auto u = good_partition_uniqueness_check(gp_ell);
        report.summary = {{"ell", std::to_string(gp_ell)}, {"unique", b(u.unique)},
                          {"colorings", std::to_string(u.colorings)}, {"nodes", std::to_string(u.nodes)}};
        report.table = summary_table(report.summary);
        trailing.push_back("unique=" + b(u.unique));
      } else {
        GoodPartition p;
        Graph host;
        if (gp_kind == "residue") {
          p = residue_partition_path(gp_ell);
          host = squared_path(gp_ell);
        } else if (gp_kind == "cycle") {
          p = explicit_cycle_partition(gp_ell);
          host = squared_cycle(gp_ell);
        } else {
          const auto d = critical_deletion(gp_ell);
          p = d.partition;
          host = delete_edges(squared_cycle(gp_ell), d.removed);
          std::string removed;
          for (auto [u, v] : d.removed) removed += (removed.empty() ? "" : " ") + std::to_string(u) + "-" + std::to_string(v);
          report.summary.emplace_back("removed", removed);
        }
        p.validate(host);
        report.table = partition_table(p);
        report.summary.emplace_back("parts", std::to_string(p.parts.size()));
        trailing.push_back("parts=" + std::to_string(p.parts.size()));
      }
    } else if (sub == detect) {
      const Graph g = ga.build_graph();
      det.threads = threads;
      DetectResult r;
      if (through_vertex)
        r = find_squared_cycle_through_vertex(g, det_len, *through_vertex, det);
      else if (!through_edge.empty())
        r = find_squared_cycle_through_edge(g, det_len, through_edge[0], through_edge[1], det);
      else
        r = find_squared_cycle(g, det_len, det);
      if (r.embedding && !verify_embedding(g, *r.embedding).ok)
        throw InternalCheckError("emitted embedding fails re-verification");
      report.summary = {{"ell", std::to_string(det_len)}, {"contains", b(r.embedding.has_value())},
                        {"nodes", std::to_string(r.nodes)}};
      if (r.embedding) report.summary.emplace_back("embedding", join_ints(r.embedding->ordering));
      report.table = summary_table(report.summary);
      trailing.push_back(r.embedding ? "contains=true" : "contains=false");
    } else if (sub == spectral) {
      const Graph g = ga.build_graph();
      const auto r = spectral_radius(g, sp);
      report.summary = {{"rho", format_double(r.rho)},
                        {"residual", format_double(r.residual)},
                        {"iterations", std::to_string(r.iterations)},
                        {"disconnected", b(r.disconnected)},
                        {"rayleigh_lower_bound", format_double(rayleigh_lower_bound(g))}};
      report.table = print_vector ? vector_table(r.vector) : summary_table(report.summary);
      if (print_vector) trailing.push_back("rho=" + format_double(r.rho));
    } else if (sub == balance) {
      const auto r = eigenvector_balance_check(bal_parts[0], bal_parts[1], bal_parts[2], bal_tol);
      report.summary = {{"rho", format_double(r.rho)}, {"x_apex", format_double(r.x_apex)}};
      for (int i = 0; i < 3; ++i) {
        report.summary.emplace_back("x_part" + std::to_string(i + 1), format_double(r.part_value[i]));
        report.summary.emplace_back("closed_form" + std::to_string(i + 1), format_double(r.closed_form[i]));
      }
      report.summary.emplace_back("closed_form_error", format_double(r.closed_form_error));
      report.summary.emplace_back("system_residual", format_double(r.system_residual));
      if (r.sign_value) report.summary.emplace_back("sign_value", format_double(*r.sign_value));
      report.summary.emplace_back("ok", b(r.ok()));
      report.table = summary_table(report.summary);
      if (!r.ok()) exit_code = check_failed;
    } else if (sub == audit) {
      const Graph g = ga.build_graph();
      AuditOptions ao;
      ao.k = audit_k;
      ao.maxcut = audit_mc;
      ao.maxcut.threads = threads;
      if (audit_maxcut == "exact") ao.maxcut.mode = MaxCutMode::exact;
      if (audit_maxcut == "local") ao.maxcut.mode = MaxCutMode::local;
      if (audit_maxcut == "auto") ao.maxcut.mode = g.order() <= 15 ? MaxCutMode::exact : MaxCutMode::local;
      const auto a = lemma_audit(g, eta, ao);
      report.table = lemma_table(a.reports);
      for (const auto& r : a.reports) report.summary.emplace_back(r.id, b(r.holds));
      report.summary.emplace_back("perron_floor", format_double(a.perron_floor));
      for (const auto& w : a.warnings) {
        report.summary.emplace_back("warning", w);
        std::cerr << "warning: " << w << '\n';
      }
      int held = 0;
      for (const auto& r : a.reports) held += r.holds;
      trailing.push_back("checks_holding=" + std::to_string(held) + "/" + std::to_string(a.reports.size()));
    } else if (sub == maxcut) {
      const Graph g = ga.build_graph();
      mc.mode = mc_mode == "exact" ? MaxCutMode::exact : MaxCutMode::local;
      mc.threads = threads;
      const auto r = max_cross_tripartition(g, mc);
      if (!single_move_optimal(g, r.partition)) throw InternalCheckError("partition is not single-move optimal");
      report.table = tripartition_table(r.partition);
      report.summary = {{"cross_edges", std::to_string(r.partition.cross_edges)},
                        {"internal_edges", std::to_string(r.partition.internal_edges)},
                        {"seed", std::to_string(r.seed)},
                        {"best_restart", std::to_string(r.best_restart)}};
      trailing.push_back("cross_edges=" + std::to_string(r.partition.cross_edges));
    } else if (sub == search) {
      const Objective obj = parse_objective(s_objective);
      const bool exhaustive = s_method == "exhaustive" || (s_method == "auto" && s_n <= 10);
      SearchReport r;
      if (exhaustive) {
        ExhaustiveOptions eo;
        eo.threads = threads;
        if (s_budget > 0) eo.node_limit = s_budget;
        r = exhaustive_extremal(s_ell, s_n, obj, eo);
      } else {
        HillclimbOptions ho;
        ho.seed = s_seed;
        ho.detector.threads = threads;
        if (s_budget > 0) ho.budget = s_budget;
        r = hillclimb_extremal(s_ell, s_n, obj, ho);
      }
      for (const auto& w : r.witnesses)
        if (find_squared_cycle(from_graph6(w), s_ell).embedding)
          throw InternalCheckError("witness " + w + " contains the squared cycle");
      report.table = search_table(r);
      report.graphs = r.witnesses;
      report.summary = {{"best_value", format_double(r.best_value)}, {"exhaustive", b(r.exhaustive)}};
      if (r.gn_comparison) report.summary.emplace_back("vs_gn", to_string(*r.gn_comparison));
      if (!s_witnesses.empty()) emit_file(s_witnesses, report, ReportFormat::graph6);
      if (exhaustive && !r.exhaustive) exit_code = partial;
    } else if (sub == verify) {
      if (v_min > v_max) throw ParameterError("--n-min must not exceed --n-max");
      ConsistencyOptions co;
      co.detector.threads = threads;
      const auto rows = theorem_consistency(v_ells, v_min, v_max, co);
      report.table = consistency_table(rows);
      bool all = true;
      for (const auto& r : rows) all = all && r.ok();
      report.summary = {{"rows", std::to_string(rows.size())}, {"all_ok", b(all)}};
      if (!all) exit_code = check_failed;
    }
    write(report, oa);
    for (const auto& line : trailing) std::cout << line << '\n';
    return exit_code;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << '\n';
    return partial;
  } catch (const InternalCheckError& e) {
    std::cerr << "internal check failed: " << e.what() << '\n';
    return check_failed;
  } catch (const ConvergenceError& e) {
    std::cerr << "no convergence: " << e.what() << '\n';
    return partial;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  }
}
