#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gedsim/error.hpp"
#include "gedsim/graph.hpp"
#include "gedsim/matrix.hpp"

namespace gedsim {

/// Edit costs are exact integers in units of 1/scale of a real cost.
using Cost = std::int64_t;

/// Unit-cost string edit distance.
inline std::size_t levenshtein(std::string_view a, std::string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<std::size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i + 1;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const std::size_t up = row[j + 1];
      row[j + 1] = std::min({up + 1, row[j] + 1, diag + (a[i] == b[j] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

/// Error-correcting assignment on a (p+1)x(q+1) matrix: the last column holds
/// deletion costs, the last row insertion costs. Solved by exhaustion, which
/// is only meant for the tiny matrices built from edge tuples.
template <class T>
T lsape_small(const Matrix<T>& c) {
  if (c.rows() == 0 || c.cols() == 0) throw Error(ErrorCode::MatrixShape, "LSAPE matrix must be at least 1x1");
  const std::size_t p = c.rows() - 1;
  const std::size_t q = c.cols() - 1;
  if (p > 8 || q > 8) throw Error(ErrorCode::MatrixShape, "LSAPE enumeration limited to 8x8 cores");

  std::vector<bool> used(q, false);
  T best = std::numeric_limits<T>::max();
  // Assign row r to a free column or delete it; leftover columns are inserted.
  std::function<void(std::size_t, T)> rec = [&](std::size_t r, T acc) {
    if (acc >= best) return;
    if (r == p) {
      for (std::size_t s = 0; s < q; ++s) {
        if (!used[s]) acc += c(p, s);
      }
      best = std::min(best, acc);
      return;
    }
    rec(r + 1, acc + c(r, q));
    for (std::size_t s = 0; s < q; ++s) {
      if (used[s]) continue;
      used[s] = true;
      rec(r + 1, acc + c(r, s));
      used[s] = false;
    }
  };
  rec(0, T{0});
  return best;
}

enum class CostFamily { Unit, AidsMuta, Protein };

/// Node and edge edit-cost functions, including the dummy-element (ε)
/// deletion/insertion channels. Immutable value object.
class CostModel {
 public:
  using Subst = std::function<Cost(const LabelValue&, const LabelValue&)>;
  using Single = std::function<Cost(const LabelValue&)>;

  CostModel(std::string name, CostFamily family, Cost scale, Subst node_subst, Single node_del, Single node_ins,
            Subst edge_subst, Single edge_del, Single edge_ins)
      : name_(std::move(name)),
        family_(family),
        scale_(scale),
        node_subst_(std::move(node_subst)),
        node_del_(std::move(node_del)),
        node_ins_(std::move(node_ins)),
        edge_subst_(std::move(edge_subst)),
        edge_del_(std::move(edge_del)),
        edge_ins_(std::move(edge_ins)) {}

  const std::string& name() const { return name_; }
  CostFamily family() const { return family_; }
  bool is_unit() const { return family_ == CostFamily::Unit; }
  /// Integer cost units per real cost unit.
  Cost scale() const { return scale_; }
  double to_real(Cost c) const { return static_cast<double>(c) / static_cast<double>(scale_); }
  double to_real(double c) const { return c / static_cast<double>(scale_); }

  Cost node_subst(const LabelValue& a, const LabelValue& b) const { return node_subst_(a, b); }
  Cost node_del(const LabelValue& a) const { return node_del_(a); }
  Cost node_ins(const LabelValue& b) const { return node_ins_(b); }
  Cost edge_subst(const LabelValue& a, const LabelValue& b) const { return edge_subst_(a, b); }
  Cost edge_del(const LabelValue& a) const { return edge_del_(a); }
  Cost edge_ins(const LabelValue& b) const { return edge_ins_(b); }

 private:
  std::string name_;
  CostFamily family_;
  Cost scale_;
  Subst node_subst_;
  Single node_del_;
  Single node_ins_;
  Subst edge_subst_;
  Single edge_del_;
  Single edge_ins_;
};

inline CostModel unit_costs() {
  auto subst = [](const LabelValue& a, const LabelValue& b) -> Cost { return a.token == b.token ? 0 : 1; };
  auto one = [](const LabelValue&) -> Cost { return 1; };
  return CostModel("unit", CostFamily::Unit, 1, subst, one, one, subst, one, one);
}

/// Molecule costs: node 5.5 / 2.75, edge 1.65 / 0.825, scaled by 40.
inline CostModel aids_muta_costs() {
  auto node_subst = [](const LabelValue& a, const LabelValue& b) -> Cost { return a.token == b.token ? 0 : 220; };
  auto node_single = [](const LabelValue&) -> Cost { return 110; };
  auto edge_subst = [](const LabelValue& a, const LabelValue& b) -> Cost { return a.token == b.token ? 0 : 66; };
  auto edge_single = [](const LabelValue&) -> Cost { return 33; };
  return CostModel("aids-muta", CostFamily::AidsMuta, 40, node_subst, node_single, node_single, edge_subst,
                   edge_single, edge_single);
}

namespace detail {

inline const std::string& payload_field(const LabelValue& v, const char* key, const char* what) {
  auto it = v.payload.find(key);
  if (it == v.payload.end()) {
    throw Error(ErrorCode::MissingPayload, std::string(what) + " label '" + v.token + "' lacks '" + key + "'");
  }
  return it->second;
}

/// Connection types of a protein edge: t1 always, t2 when present.
inline std::vector<std::string> protein_edge_types(const LabelValue& v) {
  std::vector<std::string> types{payload_field(v, "t1", "edge")};
  if (auto it = v.payload.find("t2"); it != v.payload.end() && it->second != "null") types.push_back(it->second);
  return types;
}

}  // namespace detail

/// Protein costs. Node payload (t, s); edge payload (t1, t2?), scaled by 40.
inline CostModel protein_costs() {
  auto node_subst = [](const LabelValue& a, const LabelValue& b) -> Cost {
    const auto& ta = detail::payload_field(a, "t", "node");
    const auto& tb = detail::payload_field(b, "t", "node");
    if (ta != tb) return 660;
    return 30 * static_cast<Cost>(levenshtein(detail::payload_field(a, "s", "node"),
                                              detail::payload_field(b, "s", "node")));
  };
  auto node_single = [](const LabelValue& v) -> Cost {
    detail::payload_field(v, "t", "node");
    detail::payload_field(v, "s", "node");
    return 330;
  };
  auto edge_subst = [](const LabelValue& a, const LabelValue& b) -> Cost {
    const auto ta = detail::protein_edge_types(a);
    const auto tb = detail::protein_edge_types(b);
    Matrix<Cost> c(ta.size() + 1, tb.size() + 1, 1);
    c(ta.size(), tb.size()) = 0;
    for (std::size_t r = 0; r < ta.size(); ++r) {
      for (std::size_t s = 0; s < tb.size(); ++s) c(r, s) = ta[r] == tb[s] ? 0 : 2;
    }
    return 10 * lsape_small(c);
  };
  auto edge_single = [](const LabelValue& v) -> Cost {
    return 10 * static_cast<Cost>(detail::protein_edge_types(v).size());
  };
  return CostModel("protein", CostFamily::Protein, 40, node_subst, node_single, node_single, edge_subst,
                   edge_single, edge_single);
}

inline CostModel cost_model_by_name(std::string_view name) {
  if (name == "unit") return unit_costs();
  if (name == "aids-muta" || name == "aids" || name == "muta") return aids_muta_costs();
  if (name == "protein") return protein_costs();
  throw Error(ErrorCode::UnsupportedCostModel, "unknown cost model '" + std::string(name) + "'");
}

/// Dataset constant that turns a threshold multiplier into raw cost units.
inline double tau_multiplier(const CostModel& model) {
  switch (model.family()) {
    case CostFamily::Unit: return 1.0;
    case CostFamily::AidsMuta: return 3.575;
    case CostFamily::Protein: return 8.375;
  }
  return 1.0;
}

/// Real threshold converted to the model's integer scale. Costs are integers,
/// so GED <= tau is equivalent to GED <= floor(tau * scale).
inline Cost scaled_threshold(const CostModel& model, double tau) {
  return static_cast<Cost>(std::floor(tau * static_cast<double>(model.scale()) + 1e-9));
}

/// All element-level costs for one (G, H) pair, indexed by node id / edge index.
struct PairCosts {
  Cost scale = 1;
  Matrix<Cost> node_subst;
  std::vector<Cost> node_del;
  std::vector<Cost> node_ins;
  Matrix<Cost> edge_subst;
  std::vector<Cost> edge_del;
  std::vector<Cost> edge_ins;

  /// Cost of deleting all of G and inserting all of H.
  Cost constant() const {
    auto sum = [](const std::vector<Cost>& v) { return std::accumulate(v.begin(), v.end(), Cost{0}); };
    return sum(node_del) + sum(node_ins) + sum(edge_del) + sum(edge_ins);
  }
};

inline void require_shared_labels(const LabeledGraph& g, const LabeledGraph& h) {
  if (g.label_space() != h.label_space()) {
    throw Error(ErrorCode::AlphabetMismatch, "graphs '" + g.name() + "' and '" + h.name() +
                                                 "' use different label spaces");
  }
}

inline PairCosts pair_costs(const LabeledGraph& g, const LabeledGraph& h, const CostModel& model) {
  require_shared_labels(g, h);
  const auto& nodes = g.labels().nodes;
  const auto& edges = g.labels().edges;
  PairCosts pc;
  pc.scale = model.scale();

  // Label-level memo: datasets repeat labels heavily and protein substitution runs a DP.
  std::map<std::pair<LabelId, LabelId>, Cost> node_memo;
  std::map<std::pair<LabelId, LabelId>, Cost> edge_memo;

  pc.node_subst = Matrix<Cost>(g.size(), h.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t k = 0; k < h.size(); ++k) {
      const auto key = std::pair(g.node_label(static_cast<NodeId>(i)), h.node_label(static_cast<NodeId>(k)));
      auto it = node_memo.find(key);
      if (it == node_memo.end()) it = node_memo.emplace(key, model.node_subst(nodes[key.first], nodes[key.second])).first;
      pc.node_subst(i, k) = it->second;
    }
  }
  for (std::size_t i = 0; i < g.size(); ++i) pc.node_del.push_back(model.node_del(nodes[g.node_label(static_cast<NodeId>(i))]));
  for (std::size_t k = 0; k < h.size(); ++k) pc.node_ins.push_back(model.node_ins(nodes[h.node_label(static_cast<NodeId>(k))]));

  pc.edge_subst = Matrix<Cost>(g.edge_count(), h.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    for (std::size_t f = 0; f < h.edge_count(); ++f) {
      const auto key = std::pair(g.edge(e).label, h.edge(f).label);
      auto it = edge_memo.find(key);
      if (it == edge_memo.end()) it = edge_memo.emplace(key, model.edge_subst(edges[key.first], edges[key.second])).first;
      pc.edge_subst(e, f) = it->second;
    }
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) pc.edge_del.push_back(model.edge_del(edges[g.edge(e).label]));
  for (std::size_t f = 0; f < h.edge_count(); ++f) pc.edge_ins.push_back(model.edge_ins(edges[h.edge(f).label]));
  return pc;
}

}  // namespace gedsim
