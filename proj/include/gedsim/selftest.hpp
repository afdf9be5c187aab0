#pragma once

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <map>
#include <thread>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gedsim/bb_solver.hpp"
#include "gedsim/bounds.hpp"
#include "gedsim/costs.hpp"
#include "gedsim/graph.hpp"
#include "gedsim/ilp_model.hpp"
#include "gedsim/io.hpp"
#include "gedsim/lp_solver.hpp"
#include "gedsim/oracle.hpp"
#include "gedsim/random.hpp"
#include "gedsim/search.hpp"

namespace gedsim::selftest {

using gedsim::to_string;

enum class Outcome { Pass, Fail, Skip };

struct CriterionResult {
  int id = 0;
  std::string name;
  Outcome outcome = Outcome::Fail;
  std::string detail;
  double seconds = 0;
};

inline std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "PASS";
    case Outcome::Fail: return "FAIL";
    case Outcome::Skip: return "SKIP";
  }
  return "?";
}

/// Collects the first few failures of a criterion.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 5) messages_ << (failures_ > 1 ? "; " : "") << what;
  }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    std::ostringstream s;
    if (ok()) {
      s << checks_ << " checks";
    } else {
      s << failures_ << "/" << checks_ << " checks failed: " << messages_.str();
    }
    return s.str();
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::ostringstream messages_;
};

/// Dual point for the star/cycle family: center row 6, other G rows 2, and 2 on
/// every node-arc row of the center; all else 0.
inline std::vector<Rational> star_cycle_dual(const IlpModel& m) {
  std::vector<Rational> mu(m.num_rows(), 0);
  for (std::size_t r = 0; r < m.num_rows(); ++r) {
    const auto& row = m.rows[r];
    if (row.kind == RowKind::AssignG) mu[r] = row.first == 0 ? 6 : 2;
    if (row.kind == RowKind::NodeArc && row.first == 0) mu[r] = 2;
  }
  return mu;
}

/// Identity node map plus the two center edges landing on cycle edges.
inline std::vector<Rational> star_cycle_primal(const IlpModel& m, int n) {
  std::vector<Rational> x(m.num_vars(), 0);
  for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(m.x_var(static_cast<std::size_t>(i), static_cast<std::size_t>(i)))] = 1;
  for (std::size_t a = 0; a < m.arcs.g_arcs.size(); ++a) {
    const auto& ga = m.arcs.g_arcs[a];
    if (ga.head != 1 && ga.head != n - 1) continue;
    for (std::size_t b = 0; b < m.arcs.h_arcs.size(); ++b) {
      const auto& hb = m.arcs.h_arcs[b];
      if (hb.tail == ga.tail && hb.head == ga.head) x[static_cast<std::size_t>(m.z_var(a, b))] = 1;
    }
  }
  return x;
}

inline RandomGraphSpec pair_spec(std::mt19937_64& rng, std::size_t max_nodes, std::size_t max_edges) {
  RandomGraphSpec s;
  s.max_nodes = max_nodes;
  s.max_edges = max_edges;
  s.node_labels = 2 + rng() % 2;
  s.edge_labels = 2 + rng() % 2;
  return s;
}

inline CriterionResult star_cycle_closed_form() {
  Checker c;
  const auto costs = unit_costs();
  for (int n = 3; n <= 12; ++n) {
    auto [s, cyc] = star_cycle_instance(n);
    const IlpModel m = build_fori(s, cyc, costs);
    LpOptions exact;
    exact.arithmetic = Arithmetic::Exact;
    const auto rational = fori_lp_bound(m, {}, exact);
    const auto flt = fori_lp_bound(m);
    const std::string tag = "n=" + std::to_string(n);
    c.expect(rational.certificate->exact && rational.certificate->exact_value == Rational(2 * n - 5),
             tag + " exact FORI-LP " + to_string(rational.certificate->exact_value));
    c.expect(std::fabs(flt.scaled - (2 * n - 5)) <= 1e-9, tag + " float FORI-LP " + std::to_string(flt.scaled));
    const Cost bm2 = bm_bound_doubled(s, cyc, pair_costs(s, cyc, costs));
    c.expect(bm2 == 2 * (n - 2), tag + " BM " + std::to_string(bm2 / 2.0));
  }
  return {1, "Star/cycle closed form (n=3..12)", c.ok() ? Outcome::Pass : Outcome::Fail, c.summary()};
}

inline CriterionResult dual_certificate() {
  Checker c;
  for (int n = 3; n <= 12; ++n) {
    auto [s, cyc] = star_cycle_instance(n);
    const IlpModel m = build_fori(s, cyc, unit_costs());
    const auto mu = star_cycle_dual(m);
    const auto x = star_cycle_primal(m, n);
    const std::string tag = "n=" + std::to_string(n);
    c.expect(m.objective_value(x) == Rational(2 * n - 5), tag + " primal objective");
    c.expect(detail::dual_bound<Rational>(m, mu, detail::bounds_as_rational(m, {}, false), detail::bounds_as_rational(m, {}, true)) ==
                 Rational(2 * n - 5),
             tag + " dual objective");
    c.expect(check_dual_certificate(m, std::span<const Rational>(x), std::span<const Rational>(mu)), tag + " certificate rejected");
    auto bumped = mu;
    for (std::size_t r = 0; r < m.num_rows(); ++r) {
      if (m.rows[r].kind == RowKind::AssignG && m.rows[r].first == 0) bumped[r] = 7;
    }
    c.expect(!check_dual_certificate(m, std::span<const Rational>(x), std::span<const Rational>(bumped)), tag + " perturbed dual accepted");
    std::vector<Rational> zero(m.num_rows(), 0);
    c.expect(!check_dual_certificate(m, std::span<const Rational>(x), std::span<const Rational>(zero)), tag + " zero dual accepted");
  }
  return {2, "Dual certificate for the star/cycle family", c.ok() ? Outcome::Pass : Outcome::Fail, c.summary()};
}

inline CriterionResult worked_example() {
  Checker c;
  auto [g, h] = worked_example_pair();
  const auto costs = unit_costs();
  const IlpModel fori = build_fori(g, h, costs);
  const auto opt = ilp_solve(fori);
  c.expect(opt.status == IlpStatus::Optimal && opt.objective == 5, "FORI ILP " + std::to_string(opt.objective));
  const auto f1 = ilp_solve(build_f1(g, h, costs));
  c.expect(f1.status == IlpStatus::Optimal && f1.objective == 5, "F1 ILP " + std::to_string(f1.objective));
  const auto oracle = brute_force_ged(g, h, costs);
  c.expect(oracle.cost == 5, "oracle " + std::to_string(oracle.cost));
  c.expect(ilp_solve(add_threshold(fori, 4)).status == IlpStatus::Infeasible, "THR(4) not infeasible");
  c.expect(ilp_solve(add_threshold(fori, 5)).status == IlpStatus::Feasible, "THR(5) not feasible");
  const auto path = extract_edit_path(fori, opt, g, h, pair_costs(g, h, costs));
  c.expect(path.ops.size() == 5 && path.total == 5, "edit path of " + std::to_string(path.ops.size()) + " ops");
  return {3, "Worked example GED = 5", c.ok() ? Outcome::Pass : Outcome::Fail, c.summary()};
}

inline CriterionResult bound_hierarchy(std::size_t pairs = 500, std::uint64_t seed = 4) {
  Checker c;
  std::mt19937_64 rng(seed);
  const auto costs = unit_costs();
  LpOptions exact;
  exact.arithmetic = Arithmetic::Exact;
  for (std::size_t p = 0; p < pairs; ++p) {
    auto labels = make_label_space();
    const auto spec = pair_spec(rng, 7, 10);
    const auto g = random_graph(rng, spec, labels);
    const auto h = random_graph(rng, spec, labels);
    const auto fori = fori_lp_bound(g, h, costs, {}, exact);
    const Rational lp = fori.certificate->exact_value;
    const Rational bm = Rational(bm_bound_doubled(g, h, pair_costs(g, h, costs))) / 2;
    const Rational ls = Rational(static_cast<long long>(ls_bound(g, h).scaled));
    const Rational ged = Rational(brute_force_ged(g, h, costs).cost);
    const std::string tag = "pair " + std::to_string(p);
    c.expect(fori.certificate->exact, tag + " LP not certified");
    c.expect(lp >= bm, tag + " FORI-LP " + to_string(lp) + " < BM " + to_string(bm));
    c.expect(bm >= ls, tag + " BM < LS");
    c.expect(lp <= ged && bm <= ged && ls <= ged, tag + " bound above GED " + to_string(ged));
  }
  return {4, "Bound hierarchy and soundness (" + std::to_string(pairs) + " pairs)", c.ok() ? Outcome::Pass : Outcome::Fail,
          c.summary()};
}

inline CriterionResult oracle_equivalence(std::size_t pairs = 200, std::uint64_t seed = 5) {
  Checker c;
  std::mt19937_64 rng(seed);
  for (const auto& costs : {unit_costs(), aids_muta_costs()}) {
    for (std::size_t p = 0; p < pairs; ++p) {
      auto labels = make_label_space();
      const auto spec = pair_spec(rng, 6, 10);
      const auto g = random_graph(rng, spec, labels);
      const auto h = random_graph(rng, spec, labels);
      const IlpModel m = build_fori(g, h, costs);
      const auto s = ilp_solve(m);
      const auto oracle = brute_force_ged(g, h, costs);
      const auto path = extract_edit_path(m, s, g, h, pair_costs(g, h, costs));
      const std::string tag = costs.name() + " pair " + std::to_string(p);
      c.expect(s.status == IlpStatus::Optimal && s.objective == oracle.cost,
               tag + " B&B " + std::to_string(s.objective) + " vs oracle " + std::to_string(oracle.cost));
      c.expect(path.total == s.objective, tag + " edit path sums to " + std::to_string(path.total));
    }
  }
  return {5, "B&B optimum equals brute force (" + std::to_string(pairs) + " pairs x 2 models)",
          c.ok() ? Outcome::Pass : Outcome::Fail, c.summary()};
}

inline CriterionResult threshold_correctness(std::size_t pairs = 50, std::uint64_t seed = 6) {
  Checker c;
  std::mt19937_64 rng(seed);
  const auto costs = unit_costs();
  for (std::size_t p = 0; p < pairs; ++p) {
    auto labels = make_label_space();
    const auto spec = pair_spec(rng, 6, 10);
    const auto g = random_graph(rng, spec, labels);
    const auto h = random_graph(rng, spec, labels);
    const IlpModel m = build_fori(g, h, costs);
    const Cost ged = brute_force_ged(g, h, costs).cost;
    for (int step = 0; step < 8; ++step) {
      const Cost tau = (m.constant * step + 3) / 7;
      const auto s = ilp_solve(add_threshold(m, tau), SolveMode::FeasibilityOnly);
      const bool feasible = s.status == IlpStatus::Feasible;
      c.expect(s.status != IlpStatus::Aborted, "aborted");
      c.expect(feasible == (ged <= tau), "pair " + std::to_string(p) + " tau " + std::to_string(tau) + " GED " + std::to_string(ged));
    }
  }
  return {6, "Threshold verdicts match the oracle (" + std::to_string(pairs) + " pairs x 8 thresholds)",
          c.ok() ? Outcome::Pass : Outcome::Fail, c.summary()};
}

inline CriterionResult search_end_to_end(std::uint64_t seed = 7) {
  Checker c;
  const auto costs = unit_costs();
  auto labels = make_label_space();
  RandomGraphSpec spec;
  spec.min_nodes = 2;
  spec.max_nodes = 7;
  spec.max_edges = 9;
  spec.node_labels = 3;
  spec.edge_labels = 2;
  const auto dataset = random_dataset(seed, 30, spec, labels, "g");
  const auto queries = random_dataset(seed + 1, 3, spec, labels, "q");
  for (const auto& q : queries) {
    std::vector<Cost> ged;
    for (const auto& h : dataset) ged.push_back(brute_force_ged(q, h, costs).cost);
    std::set<std::string> previous;
    for (Cost tau = 1; tau <= 10; ++tau) {
      std::set<std::string> expected;
      for (std::size_t i = 0; i < dataset.size(); ++i) {
        if (ged[i] <= tau) expected.insert(dataset[i].name());
      }
      auto cfg = SearchConfig::for_model(costs, tau);
      cfg.jobs = 1;
      const auto serial = fori_sim(q, dataset, cfg);
      cfg.jobs = 4;
      const auto parallel = fori_sim(q, dataset, cfg);
      const std::set<std::string> got(serial.accepted.begin(), serial.accepted.end());
      const std::string tag = q.name() + " tau " + std::to_string(tau);
      c.expect(serial.aborted.empty(), tag + " aborted graphs");
      c.expect(got == expected, tag + " accepted " + std::to_string(got.size()) + " expected " + std::to_string(expected.size()));
      c.expect(serial.accepted == parallel.accepted, tag + " jobs=1 and jobs=4 differ");
      c.expect(std::includes(got.begin(), got.end(), previous.begin(), previous.end()), tag + " not monotone");
      previous = got;
    }
  }
  return {7, "Search end to end (30 graphs x 3 queries x tau 1..10)", c.ok() ? Outcome::Pass : Outcome::Fail, c.summary()};
}

inline CriterionResult cost_constants() {
  Checker c;
  auto real = [](const CostModel& m, Cost v) { return m.to_real(v); };
  auto near = [](double a, double b) { return std::fabs(a - b) <= 1e-12; };
  const auto am = aids_muta_costs();
  const LabelValue C{"C", {}}, N{"N", {}}, b1{"1", {}}, b2{"2", {}};
  struct Row {
    std::string what;
    double got;
    double want;
  };
  std::vector<Row> rows = {
      {"aids node subst mismatch", real(am, am.node_subst(C, N)), 5.5},
      {"aids node subst match", real(am, am.node_subst(C, C)), 0.0},
      {"aids node del", real(am, am.node_del(C)), 2.75},
      {"aids node ins", real(am, am.node_ins(N)), 2.75},
      {"aids edge subst mismatch", real(am, am.edge_subst(b1, b2)), 1.65},
      {"aids edge subst match", real(am, am.edge_subst(b1, b1)), 0.0},
      {"aids edge del", real(am, am.edge_del(b1)), 0.825},
      {"aids edge ins", real(am, am.edge_ins(b2)), 0.825},
  };
  const auto pr = protein_costs();
  const LabelValue helix_aa{"h", {{"t", "helix"}, {"s", "AA"}}}, sheet_aa{"s", {{"t", "sheet"}, {"s", "AA"}}},
      helix_ab{"h2", {{"t", "helix"}, {"s", "AB"}}}, helix_kitten{"h3", {{"t", "helix"}, {"s", "kitten"}}},
      helix_sitting{"h4", {{"t", "helix"}, {"s", "sitting"}}};
  const LabelValue single{"e1", {{"t1", "0"}}}, twin{"e2", {{"t1", "0"}, {"t2", "1"}}}, other{"e3", {{"t1", "1"}, {"t2", "0"}}},
      mismatch{"e4", {{"t1", "2"}, {"t2", "3"}}};
  rows.push_back({"protein node subst type mismatch", real(pr, pr.node_subst(helix_aa, sheet_aa)), 16.5});
  rows.push_back({"protein node subst LD 1", real(pr, pr.node_subst(helix_aa, helix_ab)), 0.75});
  rows.push_back({"protein node subst LD 3", real(pr, pr.node_subst(helix_kitten, helix_sitting)), 2.25});
  rows.push_back({"protein node del", real(pr, pr.node_del(helix_aa)), 8.25});
  rows.push_back({"protein node ins", real(pr, pr.node_ins(sheet_aa)), 8.25});
  rows.push_back({"protein edge del single", real(pr, pr.edge_del(single)), 0.25});
  rows.push_back({"protein edge ins pair", real(pr, pr.edge_ins(twin)), 0.5});
  rows.push_back({"protein edge subst permuted pair", real(pr, pr.edge_subst(twin, other)), 0.0});
  rows.push_back({"protein edge subst single vs pair", real(pr, pr.edge_subst(single, twin)), 0.25});
  rows.push_back({"protein edge subst full mismatch", real(pr, pr.edge_subst(twin, mismatch)), 1.0});
  rows.push_back({"protein edge subst identity", real(pr, pr.edge_subst(mismatch, mismatch)), 0.0});
  rows.push_back({"aids tau multiplier", tau_multiplier(am), 3.575});
  rows.push_back({"protein tau multiplier", tau_multiplier(pr), 8.375});
  for (const auto& r : rows) c.expect(near(r.got, r.want), r.what + " = " + std::to_string(r.got));
  return {8, "Cost model constants", c.ok() ? Outcome::Pass : Outcome::Fail, c.summary()};
}

/// Directory holding a GEDLIB AIDS export, if any: $GEDSEARCH_DATA_DIR/AIDS.
inline std::optional<std::filesystem::path> gedlib_aids_dir() {
  const char* root = std::getenv("GEDSEARCH_DATA_DIR");
  if (!root || !*root) return std::nullopt;
  for (const char* sub : {"AIDS", "aids", "data/AIDS"}) {
    const auto p = std::filesystem::path(root) / sub;
    if (std::filesystem::is_directory(p)) return p;
  }
  return std::nullopt;
}

inline CriterionResult gedlib_smoke() {
  const auto dir = gedlib_aids_dir();
  if (!dir) {
    return {9, "Dataset-scale smoke run", Outcome::Skip,
            "no GEDLIB AIDS export under $GEDSEARCH_DATA_DIR; hour-budget experiments are out of desk scale"};
  }
  Checker c;
  auto labels = make_label_space();
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(*dir)) {
    if (e.path().extension() == ".gxl") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  if (files.size() > 100) files.resize(100);
  std::vector<LabeledGraph> graphs;
  for (const auto& f : files) graphs.push_back(load_graph(f, labels, gxl_preset("aids")));
  c.expect(graphs.size() >= 2, "fewer than two graphs");
  if (graphs.size() >= 2) {
    const auto costs = aids_muta_costs();
    std::map<std::string, std::size_t> stage_hits;
    for (double mult : {1.0, 5.0, 10.0}) {
      auto cfg = SearchConfig::for_model(costs, scaled_threshold(costs, mult * tau_multiplier(costs)));
      cfg.jobs = std::max(1u, std::thread::hardware_concurrency());
      const auto r = fori_sim(graphs.front(), graphs, cfg);
      c.expect(r.aborted.empty(), "coverage below 100% at multiplier " + std::to_string(mult));
      for (const auto& [stage, n] : r.discarded_by) stage_hits[stage] += n;
    }
    for (const char* stage : {"bm", "forilp", "verify"}) c.expect(stage_hits[stage] > 0, std::string("no discards at ") + stage);
  }
  return {9, "Dataset-scale smoke run", c.ok() ? Outcome::Pass : Outcome::Fail, c.summary()};
}

inline std::vector<std::function<CriterionResult()>> criteria() {
  return {star_cycle_closed_form, dual_certificate, worked_example, [] { return bound_hierarchy(); },
          [] { return oracle_equivalence(); }, [] { return threshold_correctness(); }, [] { return search_end_to_end(); },
          cost_constants, gedlib_smoke};
}

/// Runs one criterion, turning an escaped exception into a failure.
inline CriterionResult run(const std::function<CriterionResult()>& criterion, int id) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = criterion();
  } catch (const std::exception& e) {
    r = {id, "criterion " + std::to_string(id), Outcome::Fail, std::string("exception: ") + e.what()};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline std::string format_line(const CriterionResult& r) {
  std::ostringstream s;
  s << to_string(r.outcome) << "  [" << r.id << "] " << r.name << " (" << std::fixed << std::setprecision(2) << r.seconds
    << " s): " << r.detail;
  return s.str();
}

}  // namespace gedsim::selftest
