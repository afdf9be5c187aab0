#pragma once

#include <chrono>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gedsim/assignment.hpp"
#include "gedsim/costs.hpp"
#include "gedsim/error.hpp"
#include "gedsim/graph.hpp"
#include "gedsim/ilp_model.hpp"
#include "gedsim/lp_solver.hpp"

namespace gedsim {

enum class BoundAlgorithm { LS, BM, FORILP };

inline std::string to_string(BoundAlgorithm a) {
  switch (a) {
    case BoundAlgorithm::LS: return "ls";
    case BoundAlgorithm::BM: return "bm";
    case BoundAlgorithm::FORILP: return "forilp";
  }
  return "?";
}

inline BoundAlgorithm bound_algorithm_by_name(const std::string& name) {
  if (name == "ls") return BoundAlgorithm::LS;
  if (name == "bm") return BoundAlgorithm::BM;
  if (name == "forilp") return BoundAlgorithm::FORILP;
  throw Error(ErrorCode::SchemaViolation, "unknown bound algorithm '" + name + "'");
}

struct LpCertificate {
  double primal_objective = 0;
  double dual_objective = 0;
  bool exact = false;
  Rational exact_value;
  LpSolution lp;
};

struct BoundResult {
  BoundAlgorithm algorithm = BoundAlgorithm::LS;
  /// In the cost model's integer units (may be fractional for BM and FORILP).
  double scaled = 0;
  Cost scale = 1;
  std::chrono::nanoseconds elapsed{0};
  std::optional<LpCertificate> certificate;

  /// Value in real cost units.
  double value() const { return scaled / static_cast<double>(scale); }
  double elapsed_ms() const { return std::chrono::duration<double, std::milli>(elapsed).count(); }
};

namespace detail {

template <class F>
BoundResult timed(BoundAlgorithm alg, F&& body) {
  const auto start = std::chrono::steady_clock::now();
  BoundResult r = body();
  r.algorithm = alg;
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

}  // namespace detail

/// Label-set bound: multiset edit distance of node labels plus that of edge labels.
inline BoundResult ls_bound(const LabeledGraph& g, const LabeledGraph& h) {
  require_shared_labels(g, h);
  return detail::timed(BoundAlgorithm::LS, [&] {
    std::vector<LabelId> gv(g.node_labels().begin(), g.node_labels().end());
    std::vector<LabelId> hv(h.node_labels().begin(), h.node_labels().end());
    std::vector<LabelId> ge, he;
    for (const auto& e : g.edges()) ge.push_back(e.label);
    for (const auto& e : h.edges()) he.push_back(e.label);
    BoundResult r;
    r.scaled = static_cast<double>(multiset_edit_distance(gv, hv) + multiset_edit_distance(ge, he));
    return r;
  });
}

inline BoundResult ls_bound(const LabeledGraph& g, const LabeledGraph& h, const CostModel& model) {
  if (!model.is_unit()) {
    throw Error(ErrorCode::UnsupportedCostModel, "the label-set bound needs unit costs, got " + model.name());
  }
  return ls_bound(g, h);
}

/// Twice the branch-match bound, in integer cost units: an outer assignment of
/// branches, each priced by 2 * node cost plus the best inner matching of the
/// incident edges (so the edge part carries the factor 1/2).
inline Cost bm_bound_doubled(const LabeledGraph& g, const LabeledGraph& h, const PairCosts& pc) {
  const std::size_t n = g.size();
  const std::size_t m = h.size();
  const auto g_inc = [&](std::size_t i) { return g.incident_edges(static_cast<NodeId>(i)); };
  const auto h_inc = [&](std::size_t k) { return h.incident_edges(static_cast<NodeId>(k)); };

  auto edge_del_sum = [&](const std::vector<std::int32_t>& es) {
    Cost s = 0;
    for (auto e : es) s += pc.edge_del[static_cast<std::size_t>(e)];
    return s;
  };
  auto edge_ins_sum = [&](const std::vector<std::int32_t>& fs) {
    Cost s = 0;
    for (auto f : fs) s += pc.edge_ins[static_cast<std::size_t>(f)];
    return s;
  };

  Matrix<Cost> outer(n, m);
  std::vector<Cost> del(n), ins(m);
  std::vector<std::vector<std::int32_t>> hs(m);
  for (std::size_t k = 0; k < m; ++k) {
    hs[k] = h_inc(k);
    ins[k] = 2 * pc.node_ins[k] + edge_ins_sum(hs[k]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto gs = g_inc(i);
    del[i] = 2 * pc.node_del[i] + edge_del_sum(gs);
    for (std::size_t k = 0; k < m; ++k) {
      Matrix<Cost> inner(gs.size(), hs[k].size());
      std::vector<Cost> idel, iins;
      for (std::size_t a = 0; a < gs.size(); ++a) {
        for (std::size_t b = 0; b < hs[k].size(); ++b) {
          inner(a, b) = pc.edge_subst(static_cast<std::size_t>(gs[a]), static_cast<std::size_t>(hs[k][b]));
        }
        idel.push_back(pc.edge_del[static_cast<std::size_t>(gs[a])]);
      }
      for (auto f : hs[k]) iins.push_back(pc.edge_ins[static_cast<std::size_t>(f)]);
      const auto padded = pad_for_insert_delete(inner, idel, iins);
      outer(i, k) = 2 * pc.node_subst(i, k) + lsap_solve(padded.matrix).total_cost;
    }
  }
  return lsap_solve(pad_for_insert_delete(outer, del, ins).matrix).total_cost;
}

inline BoundResult bm_bound(const LabeledGraph& g, const LabeledGraph& h, const CostModel& model) {
  return detail::timed(BoundAlgorithm::BM, [&] {
    const PairCosts pc = pair_costs(g, h, model);
    BoundResult r;
    r.scale = pc.scale;
    r.scaled = static_cast<double>(bm_bound_doubled(g, h, pc)) / 2.0;
    return r;
  });
}

/// Unit-cost closed form of BM: assignment over label mismatch plus half the
/// multiset edit distance of incident edge labels. Twice the value, as an integer.
inline Cost bm_unit_closed_form_doubled(const LabeledGraph& g, const LabeledGraph& h) {
  const std::size_t n = g.size(), m = h.size();
  Matrix<Cost> outer(n, m);
  std::vector<Cost> del(n), ins(m);
  for (std::size_t i = 0; i < n; ++i) {
    const auto bi = branch_structure(g, static_cast<NodeId>(i));
    del[i] = 2 + static_cast<Cost>(bi.incident_edge_labels.size());
    for (std::size_t k = 0; k < m; ++k) {
      const auto bk = branch_structure(h, static_cast<NodeId>(k));
      outer(i, k) = (bi.center_label == bk.center_label ? 0 : 2) +
                    static_cast<Cost>(multiset_edit_distance(bi.incident_edge_labels, bk.incident_edge_labels));
    }
  }
  for (std::size_t k = 0; k < m; ++k) ins[k] = 2 + static_cast<Cost>(h.degree(static_cast<NodeId>(k)));
  return lsap_solve(pad_for_insert_delete(outer, del, ins).matrix).total_cost;
}

using NodeFixing = std::pair<NodeId, NodeId>;

/// Translates anchored node pairs into x-variable fixings, rejecting
/// non-injective or out-of-range anchors.
inline std::vector<Fixing> node_fixings(const IlpModel& model, const std::vector<NodeFixing>& anchors) {
  std::set<NodeId> seen_g, seen_h;
  std::vector<Fixing> out;
  for (auto [i, k] : anchors) {
    if (i < 0 || k < 0 || static_cast<std::size_t>(i) >= model.g_nodes || static_cast<std::size_t>(k) >= model.h_nodes) {
      throw Error(ErrorCode::InfeasibleFixings, "anchor (" + std::to_string(i) + "," + std::to_string(k) + ") out of range");
    }
    if (!seen_g.insert(i).second || !seen_h.insert(k).second) {
      throw Error(ErrorCode::InfeasibleFixings, "anchors are not injective at (" + std::to_string(i) + "," + std::to_string(k) + ")");
    }
    out.push_back({model.x_var(static_cast<std::size_t>(i), static_cast<std::size_t>(k)), 1});
  }
  return out;
}

/// LP relaxation value of a prebuilt FORI model.
inline BoundResult fori_lp_bound(const IlpModel& model, const std::vector<NodeFixing>& anchors = {},
                                 const LpOptions& options = {}) {
  return detail::timed(BoundAlgorithm::FORILP, [&] {
    const auto fixings = node_fixings(model, anchors);
    LpSolution lp = lp_solve(model, fixings, options);
    if (lp.status == LpStatus::Infeasible) throw Error(ErrorCode::InfeasibleFixings, "anchored LP is infeasible");
    if (lp.status == LpStatus::NumericalFailure) throw Error(ErrorCode::LpNumericalFailure, "simplex failed to converge");
    BoundResult r;
    r.scale = model.scale;
    r.scaled = lp.exact ? to_double(lp.exact_objective) : lp.objective;
    if (r.scaled < 0) r.scaled = 0;
    LpCertificate cert{lp.objective, lp.dual_objective, lp.exact, lp.exact_objective, std::move(lp)};
    r.certificate = std::move(cert);
    return r;
  });
}

inline BoundResult fori_lp_bound(const LabeledGraph& g, const LabeledGraph& h, const CostModel& model,
                                 const std::vector<NodeFixing>& anchors = {}, const LpOptions& options = {}) {
  const auto start = std::chrono::steady_clock::now();
  BoundResult r = fori_lp_bound(build_fori(g, h, model), anchors, options);
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

inline BoundResult compute_bound(BoundAlgorithm alg, const LabeledGraph& g, const LabeledGraph& h,
                                 const CostModel& model, const LpOptions& options = {}) {
  switch (alg) {
    case BoundAlgorithm::LS: return ls_bound(g, h, model);
    case BoundAlgorithm::BM: return bm_bound(g, h, model);
    case BoundAlgorithm::FORILP: return fori_lp_bound(g, h, model, {}, options);
  }
  throw Error(ErrorCode::SchemaViolation, "unknown bound algorithm");
}

/// Relative gap (ged - lb) / ged.
inline double gap(double ged, double lb) {
  if (ged == 0) {
    if (lb == 0) return 0;
    throw Error(ErrorCode::DivisionByZeroGed, "gap undefined for GED 0 with bound " + std::to_string(lb));
  }
  return (ged - lb) / ged;
}

}  // namespace gedsim
