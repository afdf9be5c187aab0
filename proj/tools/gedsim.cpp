#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "gedsim/gedsim.hpp"
#include "gedsim/selftest.hpp"

namespace fs = std::filesystem;
using gedsim::Json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kDataError = 2, kAborted = 3 };

struct Common {
  std::string costs;
  std::string gxl_preset;
  bool exact = false;
  std::optional<std::uint64_t> seed;
  std::string out;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--costs", c.costs, "Cost model: unit, aids-muta or protein");
  cmd->add_option("--gxl-preset", c.gxl_preset, "GXL attribute layout: default, aids, muta or protein");
  cmd->add_flag("--exact", c.exact, "Certify LP values in rational arithmetic");
  cmd->add_option("--seed", c.seed, "Fix the branching seed; timings are then written as 0");
  cmd->add_option("-o,--out", c.out, "Write output to a file instead of stdout");
}

gedsim::LpOptions lp_options(const Common& c) {
  gedsim::LpOptions o;
  if (c.exact) o.arithmetic = gedsim::Arithmetic::Exact;
  return o;
}

std::string preset_for(const Common& c, const std::string& costs) {
  if (!c.gxl_preset.empty()) return c.gxl_preset;
  if (costs == "protein") return "protein";
  if (costs == "aids-muta" || costs == "aids" || costs == "muta") return "aids";
  return "default";
}

void emit(const Common& c, const std::string& bytes) {
  if (c.out.empty()) {
    std::cout << bytes << std::flush;
  } else {
    gedsim::write_file(c.out, bytes);
  }
}

Json fixed_number(double v, int digits) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return Json::parse(s.str());
}

double timing(const Common& c, double ms) { return c.seed ? 0.0 : ms; }

std::pair<gedsim::LabeledGraph, gedsim::LabeledGraph> load_pair(const std::string& a, const std::string& b,
                                                                const Common& c, const std::string& costs) {
  auto labels = gedsim::make_label_space();
  const auto schema = gedsim::gxl_preset(preset_for(c, costs));
  return {gedsim::load_graph(gedsim::resolve_data_path(a), labels, schema),
          gedsim::load_graph(gedsim::resolve_data_path(b), labels, schema)};
}

std::vector<gedsim::NodeFixing> parse_anchors(const std::vector<std::string>& specs) {
  std::vector<gedsim::NodeFixing> out;
  for (const auto& s : specs) {
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw CLI::ValidationError("--anchor", "expected i:k, got '" + s + "'");
    try {
      out.emplace_back(std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1)));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--anchor", "expected i:k, got '" + s + "'");
    }
  }
  return out;
}

// bound ---------------------------------------------------------------------

struct BoundArgs {
  Common common;
  std::string g, h, alg = "forilp";
  std::vector<std::string> anchors;
};

int run_bound(const BoundArgs& a) {
  const std::string costs_name = a.common.costs.empty() ? "unit" : a.common.costs;
  const auto costs = gedsim::cost_model_by_name(costs_name);
  const auto [g, h] = load_pair(a.g, a.h, a.common, costs_name);
  const auto alg = gedsim::bound_algorithm_by_name(a.alg);
  gedsim::BoundResult r;
  if (alg == gedsim::BoundAlgorithm::FORILP) {
    r = gedsim::fori_lp_bound(g, h, costs, parse_anchors(a.anchors), lp_options(a.common));
  } else {
    if (!a.anchors.empty()) throw CLI::ValidationError("--anchor", "anchors apply to forilp only");
    r = gedsim::compute_bound(alg, g, h, costs);
  }
  Json doc = Json::object();
  doc["algorithm"] = gedsim::to_string(alg);
  doc["costs"] = costs.name();
  doc["g"] = g.name();
  doc["h"] = h.name();
  doc["value"] = fixed_number(r.value(), 9);
  doc["scaled"] = fixed_number(r.scaled, 9);
  doc["elapsed_ms"] = fixed_number(timing(a.common, r.elapsed_ms()), 3);
  if (r.certificate) {
    Json cert = Json::object();
    cert["primal_objective"] = fixed_number(r.certificate->primal_objective / static_cast<double>(r.scale), 9);
    cert["dual_objective"] = fixed_number(r.certificate->dual_objective / static_cast<double>(r.scale), 9);
    cert["exact"] = r.certificate->exact;
    if (r.certificate->exact) cert["exact_scaled"] = gedsim::to_string(r.certificate->exact_value);
    cert["iterations"] = r.certificate->lp.iterations;
    doc["certificate"] = cert;
  } else {
    doc["certificate"] = nullptr;
  }
  emit(a.common, doc.dump(2) + "\n");
  return kOk;
}

// ged -----------------------------------------------------------------------

struct GedArgs {
  Common common;
  std::string g, h, dump_lp;
  bool oracle = false;
  std::optional<std::int64_t> budget_ms;
  std::optional<std::size_t> node_limit;
};

Json edit_path_json(const gedsim::EditPath& path, const gedsim::LabeledGraph& g, const gedsim::LabeledGraph& h,
                    gedsim::Cost scale) {
  Json ops = Json::array();
  auto node_ref = [](const gedsim::LabeledGraph& x, std::int32_t v) -> Json {
    return v == gedsim::kEpsilon ? Json(nullptr) : Json(x.original_id(v));
  };
  auto edge_ref = [](const gedsim::LabeledGraph& x, std::int32_t e) -> Json {
    if (e == gedsim::kEpsilon) return nullptr;
    const auto& ed = x.edge(static_cast<std::size_t>(e));
    return Json::array({x.original_id(ed.u), x.original_id(ed.v)});
  };
  for (const auto& op : path.ops) {
    Json j = Json::object();
    j["op"] = gedsim::to_string(op.kind);
    const bool node = op.kind == gedsim::EditKind::NodeSubst || op.kind == gedsim::EditKind::NodeDel ||
                      op.kind == gedsim::EditKind::NodeIns;
    j["g"] = node ? node_ref(g, op.g_element) : edge_ref(g, op.g_element);
    j["h"] = node ? node_ref(h, op.h_element) : edge_ref(h, op.h_element);
    j["cost"] = fixed_number(static_cast<double>(op.cost) / static_cast<double>(scale), 6);
    ops.push_back(std::move(j));
  }
  return ops;
}

int run_ged(const GedArgs& a) {
  const std::string costs_name = a.common.costs.empty() ? "unit" : a.common.costs;
  const auto costs = gedsim::cost_model_by_name(costs_name);
  const auto [g, h] = load_pair(a.g, a.h, a.common, costs_name);
  const auto pc = gedsim::pair_costs(g, h, costs);
  const auto model = gedsim::build_fori(g, h, pc);
  if (!a.dump_lp.empty()) {
    std::ofstream os(a.dump_lp);
    if (!os) throw gedsim::Error(gedsim::ErrorCode::Io, "cannot write " + a.dump_lp);
    gedsim::write_lp(os, model);
  }

  Json doc = Json::object();
  doc["costs"] = costs.name();
  doc["g"] = g.name();
  doc["h"] = h.name();
  int code = kOk;
  if (a.oracle) {
    const auto start = std::chrono::steady_clock::now();
    const auto r = gedsim::brute_force_ged(g, h, costs);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    doc["solver"] = "oracle";
    doc["status"] = "optimal";
    doc["ged"] = fixed_number(r.value(), 6);
    doc["edit_path"] = edit_path_json(gedsim::extract_edit_path(g, h, pc, r.mapping), g, h, pc.scale);
    doc["nodes_explored"] = nullptr;
    doc["elapsed_ms"] = fixed_number(timing(a.common, ms), 3);
  } else {
    gedsim::BbOptions opts;
    if (a.budget_ms) opts.budget.time_limit = std::chrono::milliseconds(*a.budget_ms);
    opts.budget.node_limit = a.node_limit;
    opts.seed = a.common.seed.value_or(0);
    opts.lp = lp_options(a.common);
    const auto s = gedsim::ilp_solve(model, gedsim::SolveMode::Optimize, opts);
    doc["solver"] = "branch-and-bound";
    doc["status"] = gedsim::to_string(s.status);
    const bool solved = s.status == gedsim::IlpStatus::Optimal || s.status == gedsim::IlpStatus::Feasible;
    doc["ged"] = s.status == gedsim::IlpStatus::Optimal ? fixed_number(s.value(), 6) : Json(nullptr);
    doc["upper_bound"] = solved ? fixed_number(s.value(), 6) : Json(nullptr);
    doc["lower_bound"] = fixed_number(s.best_bound / static_cast<double>(s.scale), 6);
    doc["edit_path"] = solved ? edit_path_json(gedsim::extract_edit_path(model, s, g, h, pc), g, h, pc.scale) : Json(nullptr);
    doc["nodes_explored"] = s.node_count;
    doc["elapsed_ms"] = fixed_number(timing(a.common, s.elapsed_ms()), 3);
    if (s.status != gedsim::IlpStatus::Optimal) code = kAborted;
  }
  emit(a.common, doc.dump(2) + "\n");
  return code;
}

// search --------------------------------------------------------------------

struct SearchArgs {
  Common common;
  std::string query, dataset;
  std::optional<double> tau, tau_mult;
  std::size_t jobs = std::max(1u, std::thread::hardware_concurrency());
  std::optional<std::int64_t> budget_ms;
  std::optional<std::size_t> node_limit;
  std::vector<std::string> chain;
  bool csv = false;
};

struct LoadedSearch {
  gedsim::Dataset data;
  gedsim::CostModel costs = gedsim::unit_costs();
};

LoadedSearch load_search_data(const std::string& dir, const Common& c) {
  const auto root = gedsim::resolve_data_path(dir);
  LoadedSearch s;
  s.data = gedsim::load_dataset(root);
  std::string name = !c.costs.empty() ? c.costs : !s.data.cost_model.empty() ? s.data.cost_model : "unit";
  s.costs = gedsim::cost_model_by_name(name);
  return s;
}

gedsim::LabeledGraph load_query(const std::string& path, const std::string& dataset_dir, const LoadedSearch& s) {
  auto manifest = gedsim::load_manifest(gedsim::resolve_data_path(dataset_dir));
  return gedsim::load_graph(gedsim::resolve_data_path(path), s.data.labels, manifest.schema);
}

gedsim::SearchConfig search_config(const gedsim::CostModel& costs, gedsim::Cost tau, const Common& c,
                                   std::size_t jobs, std::optional<std::int64_t> budget_ms,
                                   std::optional<std::size_t> node_limit, const std::vector<std::string>& chain) {
  auto cfg = gedsim::SearchConfig::for_model(costs, tau);
  cfg.jobs = jobs;
  if (budget_ms) cfg.budget = std::chrono::milliseconds(*budget_ms);
  cfg.node_limit = node_limit;
  cfg.seed = c.seed.value_or(0);
  cfg.lp = lp_options(c);
  if (!chain.empty()) {
    cfg.filter_chain.clear();
    for (const auto& name : chain) cfg.filter_chain.push_back(gedsim::bound_algorithm_by_name(name));
  }
  return cfg;
}

int run_search(const SearchArgs& a) {
  const auto s = load_search_data(a.dataset, a.common);
  const auto q = load_query(a.query, a.dataset, s);
  const double real_tau = a.tau ? *a.tau : *a.tau_mult * gedsim::tau_multiplier(s.costs);
  const auto cfg = search_config(s.costs, gedsim::scaled_threshold(s.costs, real_tau), a.common, a.jobs, a.budget_ms,
                                 a.node_limit, a.chain);
  const auto report = gedsim::fori_sim(q, s.data.graphs, cfg);
  emit(a.common, gedsim::write_report(report, a.csv ? gedsim::ReportFormat::Csv : gedsim::ReportFormat::Json,
                                      !a.common.seed.has_value()));
  return report.aborted.empty() ? kOk : kAborted;
}

// bench ---------------------------------------------------------------------

struct BenchArgs {
  Common common;
  std::string dataset, preset;
  std::vector<std::string> queries;
  std::size_t query_count = 3;
  std::vector<double> taus, tau_mults;
  std::size_t jobs = std::max(1u, std::thread::hardware_concurrency());
  std::optional<std::int64_t> budget_ms;
  std::int64_t exact_budget_ms = 10000;
};

std::string csv_number(double v, int digits) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

int run_star_cycle_bench(const BenchArgs& a) {
  std::ostringstream out;
  out << "n,forilp,bm,ged,forilp_closed_form,bm_closed_form,forilp_elapsed_ms\n";
  const auto costs = gedsim::unit_costs();
  int code = kOk;
  for (int n = 3; n <= 12; ++n) {
    const auto [s, c] = gedsim::star_cycle_instance(n);
    const auto fori = gedsim::fori_lp_bound(s, c, costs, {}, lp_options(a.common));
    const auto bm = gedsim::bm_bound(s, c, costs);
    gedsim::BbOptions opts;
    opts.budget.time_limit = std::chrono::milliseconds(a.exact_budget_ms);
    opts.seed = a.common.seed.value_or(0);
    const auto ged = gedsim::ilp_solve(gedsim::build_fori(s, c, costs), gedsim::SolveMode::Optimize, opts);
    if (ged.status != gedsim::IlpStatus::Optimal) code = kAborted;
    out << n << ',' << csv_number(fori.value(), 6) << ',' << csv_number(bm.value(), 6) << ','
        << (ged.status == gedsim::IlpStatus::Optimal ? csv_number(ged.value(), 6) : std::string{}) << ',' << 2 * n - 5
        << ',' << n - 2 << ',' << csv_number(timing(a.common, fori.elapsed_ms()), 3) << "\n";
  }
  emit(a.common, out.str());
  return code;
}

struct GapStats {
  double sum = 0;
  double max = 0;
  std::size_t count = 0;
  void add(double g) {
    sum += g;
    max = std::max(max, g);
    ++count;
  }
  std::string mean_field() const { return count ? csv_number(sum / static_cast<double>(count), 6) : std::string{}; }
  std::string max_field() const { return count ? csv_number(max, 6) : std::string{}; }
};

int run_bench(const BenchArgs& a) {
  if (!a.preset.empty()) {
    if (a.preset != "star-cycle") throw CLI::ValidationError("--preset", "unknown preset '" + a.preset + "'");
    return run_star_cycle_bench(a);
  }
  if (a.dataset.empty()) throw CLI::RequiredError("--dataset");
  if (a.taus.empty() == a.tau_mults.empty()) throw CLI::ValidationError("give exactly one of --taus and --tau-mults");
  const auto s = load_search_data(a.dataset, a.common);
  const auto& graphs = s.data.graphs;

  std::vector<const gedsim::LabeledGraph*> queries;
  if (!a.queries.empty()) {
    for (const auto& id : a.queries) {
      auto it = std::find_if(graphs.begin(), graphs.end(), [&](const auto& g) { return g.name() == id; });
      if (it == graphs.end()) throw gedsim::Error(gedsim::ErrorCode::SchemaViolation, "no graph with id '" + id + "'");
      queries.push_back(&*it);
    }
  } else {
    for (std::size_t i = 0; i < std::min(a.query_count, graphs.size()); ++i) queries.push_back(&graphs[i]);
  }

  std::vector<double> taus;
  for (double t : a.taus) taus.push_back(t);
  for (double m : a.tau_mults) taus.push_back(m * gedsim::tau_multiplier(s.costs));
  std::sort(taus.begin(), taus.end());

  const bool with_ls = s.costs.is_unit();
  std::ostringstream out;
  out << "query,tau,matches,accepted,discarded_ls,discarded_bm,discarded_forilp,discarded_verify,aborted,coverage,"
         "exact_pairs,mean_gap_ls,max_gap_ls,mean_gap_bm,max_gap_bm,mean_gap_forilp,max_gap_forilp,"
         "mean_ls_ms,mean_bm_ms,mean_forilp_ms,search_ms\n";
  int code = kOk;
  for (const auto* q : queries) {
    GapStats gls, gbm, gfori;
    double ls_ms = 0, bm_ms = 0, fori_ms = 0;
    std::size_t exact_pairs = 0;
    for (const auto& h : graphs) {
      std::optional<gedsim::BoundResult> ls;
      if (with_ls) ls = gedsim::ls_bound(*q, h, s.costs);
      const auto bm = gedsim::bm_bound(*q, h, s.costs);
      const auto model = gedsim::build_fori(*q, h, s.costs);
      const auto fori = gedsim::fori_lp_bound(model, {}, lp_options(a.common));
      if (ls) ls_ms += ls->elapsed_ms();
      bm_ms += bm.elapsed_ms();
      fori_ms += fori.elapsed_ms();
      gedsim::BbOptions opts;
      opts.budget.time_limit = std::chrono::milliseconds(a.exact_budget_ms);
      opts.seed = a.common.seed.value_or(0);
      opts.root_hint = &fori.certificate->lp;
      const auto exact = gedsim::ilp_solve(model, gedsim::SolveMode::Optimize, opts);
      if (exact.status != gedsim::IlpStatus::Optimal) continue;
      ++exact_pairs;
      const double ged = exact.value();
      // Bounds can exceed GED by solver tolerance only; clamp the noise away.
      auto add = [&](GapStats& st, double lb) { st.add(std::max(0.0, gedsim::gap(ged, std::min(lb, ged)))); };
      if (ls) add(gls, ls->value());
      add(gbm, bm.value());
      add(gfori, fori.value());
    }
    const double n = std::max<double>(1.0, static_cast<double>(graphs.size()));
    for (double tau : taus) {
      auto cfg = search_config(s.costs, gedsim::scaled_threshold(s.costs, tau), a.common, a.jobs, a.budget_ms,
                               std::nullopt, {});
      const auto start = std::chrono::steady_clock::now();
      const auto r = gedsim::fori_sim(*q, graphs, cfg);
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      if (!r.aborted.empty()) code = kAborted;
      auto disc = [&](const char* stage) {
        auto it = r.discarded_by.find(stage);
        return it == r.discarded_by.end() ? std::size_t{0} : it->second;
      };
      out << gedsim::detail::csv_field(q->name()) << ',' << csv_number(tau, 6) << ',' << csv_number(r.matches(), 6)
          << ',' << r.accepted.size() << ',' << disc("ls") << ',' << disc("bm") << ',' << disc("forilp") << ','
          << disc("verify") << ',' << r.aborted.size() << ',' << csv_number(r.coverage(), 6) << ',' << exact_pairs
          << ',' << gls.mean_field() << ',' << gls.max_field() << ',' << gbm.mean_field() << ',' << gbm.max_field()
          << ',' << gfori.mean_field() << ',' << gfori.max_field() << ','
          << (with_ls ? csv_number(timing(a.common, ls_ms / n), 3) : std::string{}) << ','
          << csv_number(timing(a.common, bm_ms / n), 3) << ',' << csv_number(timing(a.common, fori_ms / n), 3) << ','
          << csv_number(timing(a.common, ms), 3) << "\n";
    }
  }
  emit(a.common, out.str());
  return code;
}

// selftest ------------------------------------------------------------------

int run_selftest() {
  namespace st = gedsim::selftest;
  int failures = 0;
  int id = 0;
  for (const auto& criterion : st::criteria()) {
    const auto r = st::run(criterion, ++id);
    std::cout << st::format_line(r) << std::endl;
    if (r.outcome == st::Outcome::Fail) ++failures;
  }
  std::cout << (failures == 0 ? "selftest: ok" : "selftest: " + std::to_string(failures) + " failed") << "\n";
  return failures == 0 ? kOk : kDataError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact graph edit distance and similarity search"};
  app.require_subcommand(1);

  BoundArgs bound;
  auto* cmd_bound = app.add_subcommand("bound", "Lower bound for one graph pair");
  cmd_bound->add_option("G", bound.g, "First graph (.gxl or .json)")->required();
  cmd_bound->add_option("H", bound.h, "Second graph (.gxl or .json)")->required();
  cmd_bound->add_option("--alg", bound.alg, "ls, bm or forilp")->check(CLI::IsMember({"ls", "bm", "forilp"}));
  cmd_bound->add_option("--anchor", bound.anchors, "Fix node i of G to node k of H, as i:k (forilp only)");
  add_common(cmd_bound, bound.common);

  GedArgs ged;
  auto* cmd_ged = app.add_subcommand("ged", "Exact edit distance and an optimal edit path");
  cmd_ged->add_option("G", ged.g, "First graph")->required();
  cmd_ged->add_option("H", ged.h, "Second graph")->required();
  cmd_ged->add_flag("--oracle", ged.oracle, "Use brute-force enumeration (at most 8 nodes per graph)");
  cmd_ged->add_option("--dump-lp", ged.dump_lp, "Write the integer program in LP format");
  cmd_ged->add_option("--budget-ms", ged.budget_ms, "Time budget for branch and bound")->check(CLI::NonNegativeNumber);
  cmd_ged->add_option("--node-limit", ged.node_limit, "Node budget for branch and bound");
  add_common(cmd_ged, ged.common);

  SearchArgs search;
  auto* cmd_search = app.add_subcommand("search", "All dataset graphs within tau of a query");
  cmd_search->add_option("--query", search.query, "Query graph file")->required();
  cmd_search->add_option("--dataset", search.dataset, "Dataset directory")->required();
  auto* opt_tau = cmd_search->add_option("--tau", search.tau, "Threshold in cost units")->check(CLI::NonNegativeNumber);
  auto* opt_mult =
      cmd_search->add_option("--tau-mult", search.tau_mult, "Threshold as a multiple of the dataset constant")
          ->check(CLI::NonNegativeNumber);
  opt_tau->excludes(opt_mult);
  cmd_search->add_option("--jobs", search.jobs, "Parallel workers")->check(CLI::PositiveNumber);
  cmd_search->add_option("--budget-ms", search.budget_ms, "Verification budget per graph")->check(CLI::NonNegativeNumber);
  cmd_search->add_option("--node-limit", search.node_limit, "Verification node budget per graph");
  cmd_search->add_option("--chain", search.chain, "Filter chain, e.g. bm,forilp")->delimiter(',');
  cmd_search->add_flag("--csv", search.csv, "CSV instead of JSON");
  add_common(cmd_search, search.common);

  BenchArgs bench;
  auto* cmd_bench = app.add_subcommand("bench", "Bound quality and search statistics as CSV");
  cmd_bench->add_option("--dataset", bench.dataset, "Dataset directory");
  cmd_bench->add_option("--preset", bench.preset, "Built-in benchmark: star-cycle");
  cmd_bench->add_option("--queries", bench.queries, "Query graph ids from the dataset")->delimiter(',');
  cmd_bench->add_option("--query-count", bench.query_count, "Use the first N dataset graphs as queries");
  cmd_bench->add_option("--taus", bench.taus, "Thresholds in cost units")->delimiter(',');
  cmd_bench->add_option("--tau-mults", bench.tau_mults, "Thresholds as multiples of the dataset constant")->delimiter(',');
  cmd_bench->add_option("--jobs", bench.jobs, "Parallel workers")->check(CLI::PositiveNumber);
  cmd_bench->add_option("--budget-ms", bench.budget_ms, "Verification budget per graph")->check(CLI::NonNegativeNumber);
  cmd_bench->add_option("--exact-budget-ms", bench.exact_budget_ms, "Budget for each exact GED used in gaps");
  add_common(cmd_bench, bench.common);

  auto* cmd_selftest = app.add_subcommand("selftest", "Run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*cmd_bound) return run_bound(bound);
    if (*cmd_ged) return run_ged(ged);
    if (*cmd_search) {
      if (!search.tau && !search.tau_mult) throw CLI::RequiredError("--tau or --tau-mult");
      return run_search(search);
    }
    if (*cmd_bench) return run_bench(bench);
    if (*cmd_selftest) return run_selftest();
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const gedsim::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDataError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDataError;
  }
  return kUsage;
}
