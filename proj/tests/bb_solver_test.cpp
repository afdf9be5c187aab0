#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>
#include <stop_token>

#include "gedsim/bb_solver.hpp"
#include "gedsim/oracle.hpp"
#include "gedsim/random.hpp"
#include "test_util.hpp"

using namespace gedsim;

namespace {

std::vector<std::pair<LabeledGraph, LabeledGraph>> random_pairs(std::uint64_t seed, int count, RandomGraphSpec spec) {
  std::mt19937_64 rng(seed);
  auto labels = make_label_space();
  std::vector<std::pair<LabeledGraph, LabeledGraph>> out;
  for (int t = 0; t < count; ++t) out.emplace_back(random_graph(rng, spec, labels), random_graph(rng, spec, labels));
  return out;
}

std::map<EditKind, int> kinds(const EditPath& p) {
  std::map<EditKind, int> out;
  for (const auto& op : p.ops) ++out[op.kind];
  return out;
}

}  // namespace

TEST(IlpSolve, WorkedExampleOptimum) {
  const auto [g, h] = worked_example_pair();
  const auto pc = pair_costs(g, h, unit_costs());
  const auto m = build_fori(g, h, pc);
  const auto s = ilp_solve(m);
  ASSERT_EQ(s.status, IlpStatus::Optimal);
  EXPECT_EQ(s.objective, 5);
  const auto path = extract_edit_path(m, s, g, h, pc);
  EXPECT_EQ(path.total, 5);
  EXPECT_EQ(path.ops.size(), 5u);
  const auto k = kinds(path);
  EXPECT_EQ(k.at(EditKind::NodeDel), 1);
  EXPECT_EQ(k.at(EditKind::NodeSubst), 1);
  EXPECT_EQ(k.at(EditKind::EdgeDel), 1);
  EXPECT_EQ(k.at(EditKind::EdgeIns), 2);
}

TEST(IlpSolve, WorkedExampleThreshold) {
  const auto [g, h] = worked_example_pair();
  const auto m = build_fori(g, h, unit_costs());
  EXPECT_EQ(ilp_solve(ThresholdedModel{m, 4}).status, IlpStatus::Infeasible);
  const auto s = ilp_solve(ThresholdedModel{m, 5});
  EXPECT_EQ(s.status, IlpStatus::Feasible);
  EXPECT_LE(s.objective, 5);
  EXPECT_EQ(ilp_solve(ThresholdedModel{m, 4}, SolveMode::Optimize).status, IlpStatus::Infeasible);
  EXPECT_EQ(ilp_solve(ThresholdedModel{m, 5}, SolveMode::Optimize).objective, 5);
  EXPECT_CODE(ilp_solve(m, SolveMode::FeasibilityOnly), SchemaViolation);
}

TEST(IlpSolve, EqualsOracle) {
  for (const auto& costs : {unit_costs(), aids_muta_costs()}) {
    for (const auto& [g, h] : random_pairs(80, 60, {1, 6, 10, 3, 2})) {
      const auto pc = pair_costs(g, h, costs);
      const auto m = build_fori(g, h, pc);
      const auto s = ilp_solve(m);
      ASSERT_EQ(s.status, IlpStatus::Optimal);
      EXPECT_EQ(s.objective, brute_force_ged(g, h, costs).cost);
      EXPECT_TRUE(detail::satisfies_rows(m, s.values));
      EXPECT_EQ(extract_edit_path(m, s, g, h, pc).total, s.objective);
      EXPECT_EQ(mapping_cost(g, h, pc, s.mapping), s.objective);
      EXPECT_GE(static_cast<double>(s.objective) + 1e-6, s.best_bound);
    }
  }
}

TEST(IlpSolve, ProteinEqualsOracle) {
  std::mt19937_64 rng(81);
  auto labels = make_label_space();
  const auto costs = protein_costs();
  for (int t = 0; t < 30; ++t) {
    const auto g = random_protein_graph(rng, 5, labels), h = random_protein_graph(rng, 5, labels);
    EXPECT_EQ(ilp_solve(build_fori(g, h, costs)).objective, brute_force_ged(g, h, costs).cost);
  }
}

TEST(IlpSolve, ObjectiveIndependentOfSeed) {
  for (const auto& [g, h] : random_pairs(82, 30, {2, 6, 10, 2, 2})) {
    const auto m = build_fori(g, h, unit_costs());
    std::vector<Cost> objectives;
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      BbOptions o;
      o.seed = seed;
      objectives.push_back(ilp_solve(m, SolveMode::Optimize, o).objective);
    }
    EXPECT_EQ(objectives[0], objectives[1]);
    EXPECT_EQ(objectives[1], objectives[2]);
  }
}

TEST(IlpSolve, FeasibilityMatchesOptimize) {
  for (const auto& [g, h] : random_pairs(83, 30, {1, 6, 10, 3, 2})) {
    const auto m = build_fori(g, h, aids_muta_costs());
    const Cost opt = ilp_solve(m).objective;
    for (int step = 0; step <= 8; ++step) {
      const Cost tau = m.constant * step / 8;
      const auto s = ilp_solve(ThresholdedModel{m, tau});
      EXPECT_EQ(s.status == IlpStatus::Feasible, opt <= tau) << tau << " vs " << opt;
      if (s.status == IlpStatus::Feasible) {
        EXPECT_LE(s.objective, tau);
      } else {
        EXPECT_EQ(s.status, IlpStatus::Infeasible);
      }
    }
  }
}

TEST(IlpSolve, AuditedPrunesAreJustified) {
  std::size_t prunes = 0;
  for (const auto& [g, h] : random_pairs(84, 40, {3, 7, 12, 2, 2})) {
    const auto m = build_fori(g, h, unit_costs());
    BbOptions o;
    o.audit = true;
    const auto opt = ilp_solve(m, SolveMode::Optimize, o);
    for (const auto& p : opt.audit) {
      if (std::isnan(p.bound)) continue;
      EXPECT_GE(std::ceil(p.bound - 1e-6), static_cast<double>(p.limit));
    }
    const auto thr = ilp_solve(ThresholdedModel{m, std::max<Cost>(0, opt.objective - 1)}, SolveMode::FeasibilityOnly, o);
    for (const auto& p : thr.audit) {
      if (std::isnan(p.bound)) continue;
      EXPECT_GT(std::ceil(p.bound - 1e-6), static_cast<double>(p.limit));
    }
    prunes += opt.audit.size() + thr.audit.size();
  }
  EXPECT_GT(prunes, 0u);
}

TEST(IlpSolve, BudgetsAbort) {
  const auto [s, c] = star_cycle_instance(8);
  const auto m = build_fori(s, c, unit_costs());
  BbOptions none;
  none.budget.node_limit = 0;
  EXPECT_EQ(ilp_solve(m, SolveMode::Optimize, none).status, IlpStatus::Aborted);
  EXPECT_EQ(ilp_solve(ThresholdedModel{m, 20}, SolveMode::FeasibilityOnly, none).status, IlpStatus::Aborted);
  std::stop_source stop;
  stop.request_stop();
  BbOptions cancelled;
  cancelled.budget.stop = stop.get_token();
  EXPECT_EQ(ilp_solve(m, SolveMode::Optimize, cancelled).status, IlpStatus::Aborted);
}

TEST(EditPath, IdentityIsEmpty) {
  const auto [g, h] = worked_example_pair();
  const auto pc = pair_costs(g, g, unit_costs());
  const auto path = extract_edit_path(g, g, pc, {0, 1, 2, 3, 4});
  EXPECT_TRUE(path.ops.empty());
  EXPECT_EQ(path.total, 0);
}

TEST(EditPath, EmptyMappingCostsK) {
  const auto [g, h] = worked_example_pair();
  const auto pc = pair_costs(g, h, unit_costs());
  const auto m = build_fori(g, h, pc);
  const auto path = extract_edit_path(m, std::vector<double>(m.num_vars(), 0.0), g, h, pc);
  EXPECT_EQ(path.total, 18);
  EXPECT_EQ(path.ops.size(), 18u);
  const auto k = kinds(path);
  EXPECT_EQ(k.at(EditKind::NodeDel), 5);
  EXPECT_EQ(k.at(EditKind::NodeIns), 4);
  EXPECT_EQ(k.at(EditKind::EdgeDel), 4);
  EXPECT_EQ(k.at(EditKind::EdgeIns), 5);
}

TEST(EditPath, Errors) {
  const auto [g, h] = worked_example_pair();
  const auto pc = pair_costs(g, h, unit_costs());
  const auto m = build_fori(g, h, pc);
  std::vector<double> frac(m.num_vars(), 0.0);
  frac[0] = 0.5;
  EXPECT_CODE(extract_edit_path(m, frac, g, h, pc), NonIntegralSolution);
  EXPECT_CODE(extract_edit_path(g, h, pc, {0, 0, kDeleted, kDeleted, kDeleted}), NonIntegralSolution);
  EXPECT_CODE(extract_edit_path(g, h, pc, {0}), DimensionMismatch);
}

TEST(EditPath, OpCostsSumToTotal) {
  for (const auto& [g, h] : random_pairs(85, 50, {1, 6, 10, 3, 2})) {
    const auto costs = aids_muta_costs();
    const auto pc = pair_costs(g, h, costs);
    const auto s = ilp_solve(build_fori(g, h, pc));
    const auto path = extract_edit_path(g, h, pc, s.mapping);
    Cost sum = 0;
    for (const auto& op : path.ops) {
      EXPECT_GT(op.cost, 0);
      sum += op.cost;
    }
    EXPECT_EQ(sum, path.total);
    EXPECT_EQ(sum, s.objective);
  }
}
