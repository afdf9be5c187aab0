#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <stop_token>
#include <string>
#include <thread>
#include <vector>

#include "gedsim/bb_solver.hpp"
#include "gedsim/bounds.hpp"
#include "gedsim/costs.hpp"
#include "gedsim/graph.hpp"
#include "gedsim/ilp_model.hpp"

namespace gedsim {

/// LS only applies to unit costs; BM is left out for protein graphs, whose
/// branches are too uninformative to pay for themselves.
inline std::vector<BoundAlgorithm> default_filter_chain(const CostModel& model) {
  switch (model.family()) {
    case CostFamily::Unit: return {BoundAlgorithm::LS, BoundAlgorithm::BM, BoundAlgorithm::FORILP};
    case CostFamily::AidsMuta: return {BoundAlgorithm::BM, BoundAlgorithm::FORILP};
    case CostFamily::Protein: return {BoundAlgorithm::FORILP};
  }
  return {BoundAlgorithm::FORILP};
}

struct SearchConfig {
  CostModel costs = unit_costs();
  /// Threshold in the cost model's integer units.
  Cost tau = 0;
  std::vector<BoundAlgorithm> filter_chain = default_filter_chain(unit_costs());
  /// Per-graph verification budget.
  std::optional<std::chrono::milliseconds> budget;
  std::optional<std::size_t> node_limit;
  std::size_t jobs = 1;
  std::uint64_t seed = 0;
  LpOptions lp;
  /// Cancels the whole search; unfinished graphs land in the aborted bucket.
  std::stop_token stop;

  static SearchConfig for_model(const CostModel& model, Cost tau) {
    SearchConfig cfg;
    cfg.costs = model;
    cfg.tau = tau;
    cfg.filter_chain = default_filter_chain(model);
    return cfg;
  }
};

inline void validate(const SearchConfig& cfg) {
  for (auto alg : cfg.filter_chain) {
    if (alg == BoundAlgorithm::LS && !cfg.costs.is_unit()) {
      throw Error(ErrorCode::UnsupportedCostModel, "filter chain uses LS under " + cfg.costs.name() + " costs");
    }
  }
}

struct FilterOutcome {
  bool discard = false;
  /// Bound in integer cost units.
  double bound = 0;
};

inline constexpr double kBoundTolerance = 1e-6;

/// Discards exactly when the bound exceeds tau; a bound equal to tau passes.
inline FilterOutcome filter_stage(const BoundResult& bound, Cost tau) {
  return {bound.scaled > static_cast<double>(tau) + kBoundTolerance, bound.scaled};
}

inline FilterOutcome filter_stage(const LabeledGraph& q, const LabeledGraph& h, BoundAlgorithm alg, Cost tau,
                                  const CostModel& costs) {
  return filter_stage(compute_bound(alg, q, h, costs), tau);
}

enum class Verdict { Accepted, Discarded, Aborted };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Accepted: return "accepted";
    case Verdict::Discarded: return "discarded";
    case Verdict::Aborted: return "aborted";
  }
  return "?";
}

inline constexpr const char* kVerifyStage = "verify";

struct GraphOutcome {
  std::string graph_id;
  /// Last stage run: a bound name or "verify".
  std::string stage_reached;
  /// Bound values in real cost units, when computed.
  std::optional<double> ls;
  std::optional<double> bm;
  std::optional<double> forilp;
  Verdict verdict = Verdict::Aborted;
  std::size_t bb_nodes = 0;
  double elapsed_ms = 0;
  std::string note;
};

struct SearchReport {
  std::string query_id;
  std::string cost_model;
  double tau = 0;
  Cost tau_scaled = 0;
  std::vector<std::string> filter_chain;
  std::vector<GraphOutcome> outcomes;  // dataset order
  std::vector<std::string> accepted;
  /// Graphs discarded by each stage, "verify" for proven-infeasible verification.
  std::map<std::string, std::size_t> discarded_by;
  std::vector<std::string> aborted;

  double matches() const { return outcomes.empty() ? 0.0 : static_cast<double>(accepted.size()) / static_cast<double>(outcomes.size()); }
  double coverage() const {
    return outcomes.empty() ? 1.0 : 1.0 - static_cast<double>(aborted.size()) / static_cast<double>(outcomes.size());
  }
};

inline std::string graph_id(const LabeledGraph& g, std::size_t index) {
  return g.name().empty() ? std::to_string(index) : g.name();
}

/// Filter chain plus threshold verification for one dataset graph.
inline GraphOutcome evaluate_graph(const LabeledGraph& q, const LabeledGraph& h, const std::string& id, const SearchConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  GraphOutcome out;
  out.graph_id = id;
  auto finish = [&](Verdict v) {
    out.verdict = v;
    out.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return out;
  };
  try {
    const PairCosts pc = pair_costs(q, h, cfg.costs);
    std::optional<IlpModel> model;
    std::optional<LpSolution> root;
    for (auto alg : cfg.filter_chain) {
      if (cfg.stop.stop_requested()) {
        out.note = "cancelled";
        return finish(Verdict::Aborted);
      }
      out.stage_reached = to_string(alg);
      BoundResult b;
      switch (alg) {
        case BoundAlgorithm::LS:
          b = ls_bound(q, h, cfg.costs);
          out.ls = b.value();
          break;
        case BoundAlgorithm::BM:
          b.algorithm = alg;
          b.scale = pc.scale;
          b.scaled = static_cast<double>(bm_bound_doubled(q, h, pc)) / 2.0;
          out.bm = b.value();
          break;
        case BoundAlgorithm::FORILP:
          model = build_fori(q, h, pc);
          b = fori_lp_bound(*model, {}, cfg.lp);
          out.forilp = b.value();
          root = b.certificate->lp;
          break;
      }
      if (filter_stage(b, cfg.tau).discard) return finish(Verdict::Discarded);
    }
    out.stage_reached = kVerifyStage;
    if (!model) model = build_fori(q, h, pc);
    BbOptions opts;
    opts.budget.time_limit = cfg.budget;
    opts.budget.node_limit = cfg.node_limit;
    opts.budget.stop = cfg.stop;
    opts.seed = cfg.seed;
    opts.lp = cfg.lp;
    if (root) opts.root_hint = &*root;
    const ThresholdedModel thr{*model, cfg.tau};
    const IlpSolution s = ilp_solve(thr, SolveMode::FeasibilityOnly, opts);
    out.bb_nodes = s.node_count;
    switch (s.status) {
      case IlpStatus::Feasible:
      case IlpStatus::Optimal: return finish(Verdict::Accepted);
      case IlpStatus::Infeasible: return finish(Verdict::Discarded);
      case IlpStatus::Aborted: out.note = "budget exhausted"; return finish(Verdict::Aborted);
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::LpNumericalFailure) throw;
    out.note = e.what();
  }
  return finish(Verdict::Aborted);
}

/// Filter-and-verify similarity search: every dataset graph within tau of the
/// query. Graphs are processed in parallel; the report is ordered as the dataset.
inline SearchReport fori_sim(const LabeledGraph& q, const std::vector<LabeledGraph>& dataset, const SearchConfig& cfg) {
  validate(cfg);
  for (const auto& h : dataset) require_shared_labels(q, h);

  SearchReport report;
  report.query_id = q.name();
  report.cost_model = cfg.costs.name();
  report.tau_scaled = cfg.tau;
  report.tau = cfg.costs.to_real(cfg.tau);
  for (auto alg : cfg.filter_chain) report.filter_chain.push_back(to_string(alg));
  report.outcomes.resize(dataset.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < dataset.size(); i = next++) {
      try {
        report.outcomes[i] = evaluate_graph(q, dataset[i], graph_id(dataset[i], i), cfg);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(cfg.jobs, dataset.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  for (const auto& o : report.outcomes) {
    switch (o.verdict) {
      case Verdict::Accepted: report.accepted.push_back(o.graph_id); break;
      case Verdict::Discarded: ++report.discarded_by[o.stage_reached]; break;
      case Verdict::Aborted: report.aborted.push_back(o.graph_id); break;
    }
  }
  return report;
}

}  // namespace gedsim
