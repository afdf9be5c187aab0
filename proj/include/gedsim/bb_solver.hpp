#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <queue>
#include <random>
#include <stop_token>
#include <string>
#include <vector>

#include "gedsim/assignment.hpp"
#include "gedsim/costs.hpp"
#include "gedsim/error.hpp"
#include "gedsim/graph.hpp"
#include "gedsim/ilp_model.hpp"
#include "gedsim/lp_solver.hpp"

namespace gedsim {

enum class SolveMode { Optimize, FeasibilityOnly };
enum class IlpStatus { Optimal, Feasible, Infeasible, Aborted };

inline std::string to_string(IlpStatus s) {
  switch (s) {
    case IlpStatus::Optimal: return "optimal";
    case IlpStatus::Feasible: return "feasible";
    case IlpStatus::Infeasible: return "infeasible";
    case IlpStatus::Aborted: return "aborted";
  }
  return "?";
}

struct Budget {
  std::optional<std::size_t> node_limit;
  std::optional<std::chrono::milliseconds> time_limit;
  std::stop_token stop;
};

struct PruneRecord {
  std::size_t node = 0;
  /// LP bound of the pruned node in integer cost units; NaN when its LP was infeasible.
  double bound = 0;
  /// Incumbent (Optimize) or threshold (FeasibilityOnly) at the time of pruning.
  Cost limit = 0;
};

struct BbOptions {
  Budget budget;
  /// Seeds the tie-break among equally fractional branching candidates.
  std::uint64_t seed = 0;
  bool audit = false;
  LpOptions lp;
  /// Root relaxation computed elsewhere on the same model and bounds.
  const LpSolution* root_hint = nullptr;
};

struct IlpSolution {
  IlpStatus status = IlpStatus::Aborted;
  /// Objective in integer cost units, constant included. Meaningful at Optimal/Feasible.
  Cost objective = 0;
  Cost scale = 1;
  std::vector<Cost> values;
  /// G node -> H node or kDeleted.
  std::vector<std::int32_t> mapping;
  /// Largest proven lower bound on the optimum (Optimize) in integer cost units.
  double best_bound = 0;
  std::size_t node_count = 0;
  std::chrono::nanoseconds elapsed{0};
  std::vector<PruneRecord> audit;

  double value() const { return static_cast<double>(objective) / static_cast<double>(scale); }
  double elapsed_ms() const { return std::chrono::duration<double, std::milli>(elapsed).count(); }
};

namespace detail {

inline constexpr double kIntegrality = 1e-6;

inline bool satisfies_rows(const IlpModel& m, const std::vector<Cost>& v) {
  for (std::size_t j = 0; j < m.num_vars(); ++j) {
    if (v[j] < m.vars[j].lower || v[j] > m.vars[j].upper) return false;
  }
  for (const auto& row : m.rows) {
    Cost act = 0;
    for (const auto& t : row.terms) act += t.coef * v[static_cast<std::size_t>(t.var)];
    if (row.relation == Relation::Equal ? act != row.rhs : act > row.rhs) return false;
  }
  return true;
}

inline Cost integer_objective(const IlpModel& m, const std::vector<Cost>& v) {
  Cost acc = m.constant;
  for (std::size_t j = 0; j < v.size(); ++j) acc += m.objective[j] * v[j];
  return acc;
}

/// Node mapping read from the node-map variables of a FORI or F1 model.
inline std::vector<std::int32_t> mapping_from_values(const IlpModel& m, const std::vector<double>& v, double cut) {
  std::vector<std::int32_t> map(m.g_nodes, kDeleted);
  for (std::size_t i = 0; i < m.g_nodes; ++i) {
    for (std::size_t k = 0; k < m.h_nodes; ++k) {
      if (v[static_cast<std::size_t>(m.x_var(i, k))] > cut) map[i] = static_cast<std::int32_t>(k);
    }
  }
  return map;
}

/// Cheapest integral point of the model consistent with a node mapping: an
/// edge pair is mapped whenever both endpoints follow it and mapping beats
/// deleting plus inserting.
inline std::vector<Cost> complete_mapping(const IlpModel& m, const std::vector<std::int32_t>& map) {
  std::vector<Cost> v(m.num_vars(), 0);
  std::vector<std::int32_t> inverse(m.h_nodes, kDeleted);
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (map[i] == kDeleted) continue;
    inverse[static_cast<std::size_t>(map[i])] = static_cast<std::int32_t>(i);
  }
  for (std::size_t j = 0; j < m.num_vars(); ++j) {
    const auto& var = m.vars[j];
    const auto a = var.first, b = var.second;
    switch (var.kind) {
      case VarKind::NodeMap:
        if (a == kEpsilon) {
          v[j] = inverse[static_cast<std::size_t>(b)] == kDeleted ? 1 : 0;
        } else if (b == kEpsilon) {
          v[j] = map[static_cast<std::size_t>(a)] == kDeleted ? 1 : 0;
        } else {
          v[j] = map[static_cast<std::size_t>(a)] == b ? 1 : 0;
        }
        break;
      case VarKind::ArcMap: {
        const auto& ga = m.arcs.g_arcs[static_cast<std::size_t>(a)];
        const auto& hb = m.arcs.h_arcs[static_cast<std::size_t>(b)];
        const bool follows = map[static_cast<std::size_t>(ga.tail)] == hb.tail && map[static_cast<std::size_t>(ga.head)] == hb.head;
        v[j] = follows && m.objective[j] < 0 ? 1 : 0;
        break;
      }
      case VarKind::EdgeMap:
        break;  // second pass
    }
  }
  if (m.formulation == Formulation::Fori) return v;

  // F1 family: edge variables follow the node mapping. Endpoints are
  // recovered from the topological rows.
  const auto edge_endpoints = [&](std::size_t y, std::pair<std::int32_t, std::int32_t>& ge,
                                  std::pair<std::int32_t, std::int32_t>& he) {
    for (const auto& row : m.rows) {
      if ((row.kind != RowKind::EdgeTopo && row.kind != RowKind::EdgeTopoRelaxed) || row.terms.front().var != static_cast<std::int32_t>(y)) continue;
      // Terms: y, x_ik, x_jk [, x_il, x_jl]
      const auto& xa = m.vars[static_cast<std::size_t>(row.terms[1].var)];
      const auto& xb = m.vars[static_cast<std::size_t>(row.terms[2].var)];
      ge = {xa.first, xb.first};
      if (row.kind == RowKind::EdgeTopoRelaxed) {
        he = {xa.second, m.vars[static_cast<std::size_t>(row.terms[3].var)].second};
        return;
      }
      if (he.first == kEpsilon) {
        he.first = xa.second;
      } else {
        he.second = xa.second;
        return;
      }
    }
  };
  std::vector<char> g_edge_mapped, h_edge_mapped;
  std::int32_t max_e = -1, max_f = -1;
  for (const auto& var : m.vars) {
    if (var.kind != VarKind::EdgeMap) continue;
    max_e = std::max(max_e, var.first);
    max_f = std::max(max_f, var.second);
  }
  g_edge_mapped.assign(static_cast<std::size_t>(max_e + 1), 0);
  h_edge_mapped.assign(static_cast<std::size_t>(max_f + 1), 0);
  for (std::size_t j = 0; j < m.num_vars(); ++j) {
    const auto& var = m.vars[j];
    if (var.kind != VarKind::EdgeMap || var.first == kEpsilon || var.second == kEpsilon) continue;
    std::pair<std::int32_t, std::int32_t> ge{kEpsilon, kEpsilon}, he{kEpsilon, kEpsilon};
    edge_endpoints(j, ge, he);
    const auto mi = map[static_cast<std::size_t>(ge.first)], mj = map[static_cast<std::size_t>(ge.second)];
    const bool follows = (mi == he.first && mj == he.second) || (mi == he.second && mj == he.first);
    if (!follows || g_edge_mapped[static_cast<std::size_t>(var.first)] || h_edge_mapped[static_cast<std::size_t>(var.second)]) continue;
    // Compare against deleting and inserting.
    Cost del = 0, ins = 0;
    for (std::size_t j2 = 0; j2 < m.num_vars(); ++j2) {
      const auto& w = m.vars[j2];
      if (w.kind != VarKind::EdgeMap) continue;
      if (w.first == var.first && w.second == kEpsilon) del = m.objective[j2];
      if (w.first == kEpsilon && w.second == var.second) ins = m.objective[j2];
    }
    if (m.objective[j] > del + ins) continue;
    v[j] = 1;
    g_edge_mapped[static_cast<std::size_t>(var.first)] = 1;
    h_edge_mapped[static_cast<std::size_t>(var.second)] = 1;
  }
  for (std::size_t j = 0; j < m.num_vars(); ++j) {
    const auto& var = m.vars[j];
    if (var.kind != VarKind::EdgeMap) continue;
    if (var.second == kEpsilon) v[j] = g_edge_mapped[static_cast<std::size_t>(var.first)] ? 0 : 1;
    if (var.first == kEpsilon) v[j] = h_edge_mapped[static_cast<std::size_t>(var.second)] ? 0 : 1;
  }
  return v;
}

struct BbNode {
  std::vector<Fixing> fixings;
  double parent_bound = -std::numeric_limits<double>::infinity();
  std::size_t order = 0;
};

struct BestFirst {
  bool operator()(const BbNode& a, const BbNode& b) const {
    if (a.parent_bound != b.parent_bound) return a.parent_bound > b.parent_bound;
    return a.order > b.order;
  }
};

class BranchAndBound {
 public:
  BranchAndBound(const IlpModel& model, SolveMode mode, std::optional<Cost> tau, const BbOptions& options)
      : model_(model), mode_(mode), tau_(tau), options_(options), rng_(options.seed) {
    priority_.resize(model.num_vars());
    for (std::size_t j = 0; j < priority_.size(); ++j) priority_[j] = j;
    if (options.seed != 0) std::shuffle(priority_.begin(), priority_.end(), rng_);
    rank_.resize(priority_.size());
    for (std::size_t r = 0; r < priority_.size(); ++r) rank_[priority_[r]] = r;
  }

  IlpSolution run() {
    start_ = std::chrono::steady_clock::now();
    result_.scale = model_.scale;
    if (mode_ == SolveMode::Optimize) {
      optimize();
    } else {
      feasibility();
    }
    result_.elapsed = std::chrono::steady_clock::now() - start_;
    if (result_.status == IlpStatus::Optimal || result_.status == IlpStatus::Feasible) {
      result_.mapping = mapping_from_values(model_, std::vector<double>(result_.values.begin(), result_.values.end()), 0.5);
    }
    return std::move(result_);
  }

 private:
  bool out_of_budget() const {
    const auto& b = options_.budget;
    if (b.stop.stop_requested()) return true;
    if (b.node_limit && result_.node_count >= *b.node_limit) return true;
    if (b.time_limit && std::chrono::steady_clock::now() - start_ >= *b.time_limit) return true;
    return false;
  }

  LpSolution relax(const std::vector<Fixing>& fixings) {
    if (fixings.empty() && options_.root_hint && options_.root_hint->status == LpStatus::Optimal) return *options_.root_hint;
    LpSolution lp = lp_solve(model_, fixings, options_.lp);
    if (lp.status == LpStatus::NumericalFailure) {
      LpOptions exact = options_.lp;
      exact.arithmetic = Arithmetic::RationalSimplex;
      lp = lp_solve(model_, fixings, exact);
      if (lp.status == LpStatus::NumericalFailure) throw Error(ErrorCode::LpNumericalFailure, "node relaxation failed");
    }
    return lp;
  }

  static double lp_bound(const LpSolution& lp) { return lp.exact ? to_double(lp.exact_objective) : lp.objective; }

  // Integer objective means a node can only improve on `limit` if its bound
  // rounds up to something smaller.
  static bool closes(double bound, Cost limit) {
    if (!std::isfinite(bound)) return false;
    return std::ceil(bound - kIntegrality) >= static_cast<double>(limit);
  }

  void offer(const std::vector<Cost>& v) {
    if (!satisfies_rows(model_, v)) return;
    const Cost obj = integer_objective(model_, v);
    if (tau_ && obj > *tau_) return;
    if (!incumbent_ || obj < *incumbent_) {
      incumbent_ = obj;
      result_.objective = obj;
      result_.values = v;
    }
  }

  void try_incumbents(const LpSolution& lp) {
    // Rounded mapping completion, then the LP point itself when integral.
    offer(complete_mapping(model_, mapping_from_values(model_, lp.primal, 0.5)));
    std::vector<Cost> rounded(model_.num_vars());
    bool integral = true;
    for (std::size_t j = 0; j < rounded.size(); ++j) {
      rounded[j] = static_cast<Cost>(std::llround(lp.primal[j]));
      if (std::fabs(lp.primal[j] - static_cast<double>(rounded[j])) > kIntegrality) integral = false;
    }
    if (integral) offer(rounded);
  }

  std::optional<std::size_t> branching_variable(const LpSolution& lp) const {
    std::optional<std::size_t> best;
    double best_frac = kIntegrality;
    auto consider = [&](bool node_maps_only) {
      for (std::size_t j : priority_) {
        const auto& var = model_.vars[j];
        if (!var.integer) continue;
        const bool is_x = var.kind == VarKind::NodeMap && var.first != kEpsilon && var.second != kEpsilon;
        if (node_maps_only != is_x) continue;
        const double frac = std::fabs(lp.primal[j] - std::round(lp.primal[j]));
        if (frac > best_frac + 1e-12 || (best && std::fabs(frac - best_frac) <= 1e-12 && rank_[j] < rank_[*best])) {
          if (frac <= kIntegrality) continue;
          best = j;
          best_frac = frac;
        }
      }
    };
    consider(true);
    if (!best) consider(false);
    return best;
  }

  void record_prune(double bound, Cost limit) {
    if (options_.audit) result_.audit.push_back({result_.node_count, bound, limit});
  }

  void optimize() {
    std::priority_queue<BbNode, std::vector<BbNode>, BestFirst> open;
    open.push(BbNode{});
    std::size_t order = 0;
    while (!open.empty()) {
      BbNode node = open.top();
      open.pop();
      if (incumbent_ && closes(node.parent_bound, *incumbent_)) {
        record_prune(node.parent_bound, *incumbent_);
        continue;
      }
      if (out_of_budget()) {
        result_.status = IlpStatus::Aborted;
        result_.best_bound = node.parent_bound;
        return;
      }
      ++result_.node_count;
      const LpSolution lp = relax(node.fixings);
      if (lp.status == LpStatus::Infeasible) {
        record_prune(std::numeric_limits<double>::quiet_NaN(), incumbent_.value_or(0));
        continue;
      }
      const double bound = lp_bound(lp);
      try_incumbents(lp);
      if (incumbent_ && closes(bound, *incumbent_)) {
        record_prune(bound, *incumbent_);
        continue;
      }
      const auto var = branching_variable(lp);
      if (!var) continue;  // integral LP point already offered
      for (Cost value : {Cost{1}, Cost{0}}) {
        BbNode child{node.fixings, bound, ++order};
        child.fixings.push_back({static_cast<std::int32_t>(*var), value});
        open.push(std::move(child));
      }
    }
    if (!incumbent_) {
      result_.status = IlpStatus::Infeasible;
      return;
    }
    result_.status = IlpStatus::Optimal;
    result_.best_bound = static_cast<double>(*incumbent_);
  }

  void feasibility() {
    const Cost tau = *tau_;
    std::vector<BbNode> stack;
    stack.push_back(BbNode{});
    while (!stack.empty()) {
      if (incumbent_) break;
      if (out_of_budget()) {
        result_.status = IlpStatus::Aborted;
        return;
      }
      BbNode node = std::move(stack.back());
      stack.pop_back();
      ++result_.node_count;
      const LpSolution lp = relax(node.fixings);
      if (lp.status == LpStatus::Infeasible) {
        record_prune(std::numeric_limits<double>::quiet_NaN(), tau);
        continue;
      }
      const double bound = lp_bound(lp);
      if (closes(bound, tau + 1)) {
        record_prune(bound, tau);
        continue;
      }
      try_incumbents(lp);
      if (incumbent_) break;
      const auto var = branching_variable(lp);
      if (!var) continue;
      // The x = 1 child is explored first.
      for (Cost value : {Cost{0}, Cost{1}}) {
        BbNode child{node.fixings, bound, 0};
        child.fixings.push_back({static_cast<std::int32_t>(*var), value});
        stack.push_back(std::move(child));
      }
    }
    result_.status = incumbent_ ? IlpStatus::Feasible : IlpStatus::Infeasible;
  }

  const IlpModel& model_;
  SolveMode mode_;
  std::optional<Cost> tau_;
  BbOptions options_;
  std::mt19937_64 rng_;
  std::vector<std::size_t> priority_;
  std::vector<std::size_t> rank_;
  std::chrono::steady_clock::time_point start_;
  std::optional<Cost> incumbent_;
  IlpSolution result_;
};

}  // namespace detail

/// Exact optimum of a 0/1 model by LP-based branch and bound.
inline IlpSolution ilp_solve(const IlpModel& model, SolveMode mode = SolveMode::Optimize, const BbOptions& options = {}) {
  if (mode == SolveMode::FeasibilityOnly) {
    throw Error(ErrorCode::SchemaViolation, "feasibility mode needs a thresholded model");
  }
  return detail::BranchAndBound(model, mode, std::nullopt, options).run();
}

/// Optimize finds the optimum subject to the threshold; FeasibilityOnly stops
/// at the first solution within it. The threshold enters as a bound test on
/// each node relaxation of the base model, which is equivalent to carrying the
/// threshold row and lets callers reuse an unthresholded root relaxation.
inline IlpSolution ilp_solve(const ThresholdedModel& model, SolveMode mode = SolveMode::FeasibilityOnly,
                             const BbOptions& options = {}) {
  if (mode == SolveMode::Optimize) {
    IlpSolution s = detail::BranchAndBound(model.base, mode, std::nullopt, options).run();
    if (s.status == IlpStatus::Optimal && s.objective > model.tau) s.status = IlpStatus::Infeasible;
    return s;
  }
  return detail::BranchAndBound(model.base, mode, model.tau, options).run();
}

enum class EditKind { NodeSubst, NodeDel, NodeIns, EdgeSubst, EdgeDel, EdgeIns };

inline std::string to_string(EditKind k) {
  switch (k) {
    case EditKind::NodeSubst: return "node_subst";
    case EditKind::NodeDel: return "node_del";
    case EditKind::NodeIns: return "node_ins";
    case EditKind::EdgeSubst: return "edge_subst";
    case EditKind::EdgeDel: return "edge_del";
    case EditKind::EdgeIns: return "edge_ins";
  }
  return "?";
}

/// One edit operation. Node ops carry node ids, edge ops edge indices;
/// kEpsilon marks the absent side.
struct EditOp {
  EditKind kind;
  std::int32_t g_element = kEpsilon;
  std::int32_t h_element = kEpsilon;
  Cost cost = 0;
};

struct EditPath {
  std::vector<EditOp> ops;
  Cost total = 0;
};

/// Edit path induced by a node mapping. Zero-cost substitutions are omitted;
/// a mapped edge pair is deleted and reinserted when that is cheaper.
inline EditPath extract_edit_path(const LabeledGraph& g, const LabeledGraph& h, const PairCosts& pc,
                                  const std::vector<std::int32_t>& mapping) {
  if (mapping.size() != g.size()) throw Error(ErrorCode::DimensionMismatch, "mapping size differs from |V_G|");
  EditPath path;
  auto add = [&](EditKind kind, std::int32_t a, std::int32_t b, Cost c) {
    path.total += c;
    if (c != 0 || (kind != EditKind::NodeSubst && kind != EditKind::EdgeSubst)) path.ops.push_back({kind, a, b, c});
  };
  std::vector<char> h_used(h.size(), 0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto k = mapping[i];
    if (k == kDeleted) {
      add(EditKind::NodeDel, static_cast<std::int32_t>(i), kEpsilon, pc.node_del[i]);
    } else {
      if (k < 0 || static_cast<std::size_t>(k) >= h.size() || h_used[static_cast<std::size_t>(k)]) {
        throw Error(ErrorCode::NonIntegralSolution, "mapping is not an injective partial map");
      }
      h_used[static_cast<std::size_t>(k)] = 1;
      add(EditKind::NodeSubst, static_cast<std::int32_t>(i), k, pc.node_subst(i, static_cast<std::size_t>(k)));
    }
  }
  std::vector<char> f_covered(h.edge_count(), 0);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto ku = mapping[static_cast<std::size_t>(g.edge(e).u)];
    const auto kv = mapping[static_cast<std::size_t>(g.edge(e).v)];
    std::optional<std::int32_t> f;
    if (ku != kDeleted && kv != kDeleted) f = h.find_edge(ku, kv);
    if (f && pc.edge_subst(e, static_cast<std::size_t>(*f)) <= pc.edge_del[e] + pc.edge_ins[static_cast<std::size_t>(*f)]) {
      f_covered[static_cast<std::size_t>(*f)] = 1;
      add(EditKind::EdgeSubst, static_cast<std::int32_t>(e), *f, pc.edge_subst(e, static_cast<std::size_t>(*f)));
    } else {
      add(EditKind::EdgeDel, static_cast<std::int32_t>(e), kEpsilon, pc.edge_del[e]);
    }
  }
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (!h_used[k]) add(EditKind::NodeIns, kEpsilon, static_cast<std::int32_t>(k), pc.node_ins[k]);
  }
  for (std::size_t f = 0; f < h.edge_count(); ++f) {
    if (!f_covered[f]) add(EditKind::EdgeIns, kEpsilon, static_cast<std::int32_t>(f), pc.edge_ins[f]);
  }
  return path;
}

/// Edit path of an integral model solution.
inline EditPath extract_edit_path(const IlpModel& model, const std::vector<double>& values, const LabeledGraph& g,
                                  const LabeledGraph& h, const PairCosts& pc) {
  if (values.size() != model.num_vars()) throw Error(ErrorCode::DimensionMismatch, "solution size differs from model");
  for (double v : values) {
    if (std::fabs(v - std::round(v)) > detail::kIntegrality) {
      throw Error(ErrorCode::NonIntegralSolution, "fractional value " + std::to_string(v));
    }
  }
  return extract_edit_path(g, h, pc, detail::mapping_from_values(model, values, 0.5));
}

inline EditPath extract_edit_path(const IlpModel& model, const IlpSolution& sol, const LabeledGraph& g,
                                  const LabeledGraph& h, const PairCosts& pc) {
  return extract_edit_path(model, std::vector<double>(sol.values.begin(), sol.values.end()), g, h, pc);
}

}  // namespace gedsim
