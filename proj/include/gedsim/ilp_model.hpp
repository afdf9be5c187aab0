#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "gedsim/costs.hpp"
#include "gedsim/graph.hpp"
#include "gedsim/matrix.hpp"

namespace gedsim {

enum class VarKind { NodeMap, ArcMap, EdgeMap };
enum class Relation { LessEqual, Equal };
enum class Formulation { Fori, F1, BmPolytope };

/// Row families. The FORI ones map onto the dual variables u, v, r, s, t.
enum class RowKind {
  AssignG,    // (1)  sum_k x_ik <= 1
  AssignH,    // (2)  sum_i x_ik <= 1
  ArcTail,    // (3)  sum_{l in d+(k)} z_ij,kl <= x_ik
  ArcHead,    // (4)  sum_{l in d-(k)} z_ij,lk <= x_jk
  NodeArc,    // (5)  sum z_ij,kl + sum z_ji,lk <= x_ik
  NodeG,      // F1: every G node mapped or deleted
  NodeH,      // F1: every H node mapped or inserted
  EdgeG,      // F1: every G edge mapped or deleted
  EdgeH,      // F1: every H edge mapped or inserted
  EdgeTopo,   // F1: y_ij,kl <= x_ik + x_jk  /  <= x_il + x_jl
  EdgeTopoRelaxed,  // 2 y_ij,kl <= x_ik + x_jk + x_il + x_jl
  Threshold,  // objective + K <= tau
};

inline constexpr std::int32_t kEpsilon = -1;

struct Variable {
  std::string name;
  VarKind kind;
  /// NodeMap: (i, k) with kEpsilon for dummies. ArcMap: (G arc, H arc).
  /// EdgeMap: (G edge, H edge) with kEpsilon for dummies.
  std::int32_t first = kEpsilon;
  std::int32_t second = kEpsilon;
  Cost lower = 0;
  Cost upper = 1;
  bool integer = true;
};

struct Term {
  std::int32_t var;
  Cost coef;
};

struct Row {
  std::vector<Term> terms;
  Relation relation = Relation::LessEqual;
  Cost rhs = 0;
  RowKind kind;
  std::int32_t first = -1;
  std::int32_t second = -1;
};

/// A 0/1 linear program min c.x + K over sparse rows. Integer coefficients
/// throughout, in the cost model's scale.
struct IlpModel {
  Formulation formulation = Formulation::Fori;
  std::vector<Variable> vars;
  std::vector<Cost> objective;
  Cost constant = 0;
  std::vector<Row> rows;

  std::size_t g_nodes = 0;
  std::size_t h_nodes = 0;
  OrientedArcSet arcs;  // FORI only
  Cost scale = 1;

  std::size_t num_vars() const { return vars.size(); }
  std::size_t num_rows() const { return rows.size(); }

  /// FORI / F1 layout: node-map variables come first, row-major over (i, k).
  std::int32_t x_var(std::size_t i, std::size_t k) const { return static_cast<std::int32_t>(i * h_nodes + k); }
  std::int32_t z_var(std::size_t g_arc, std::size_t h_arc) const {
    return static_cast<std::int32_t>(g_nodes * h_nodes + g_arc * arcs.h_arcs.size() + h_arc);
  }

  std::int32_t add_var(Variable v, Cost cost) {
    vars.push_back(std::move(v));
    objective.push_back(cost);
    return static_cast<std::int32_t>(vars.size() - 1);
  }

  template <class Values>
  auto objective_value(const Values& x) const {
    using T = std::decay_t<decltype(x[0])>;
    T acc = T(constant);
    for (std::size_t j = 0; j < vars.size(); ++j) acc += T(objective[j]) * x[j];
    return acc;
  }
};

/// FORI plus the threshold row "objective + K <= tau".
struct ThresholdedModel {
  IlpModel base;
  Cost tau = 0;
};

struct ReducedCosts {
  Matrix<Cost> node;  // c_ik - c_i,eps - c_eps,k
  Matrix<Cost> arc;   // over (G arc, H arc), from the underlying undirected edges
  Cost constant = 0;  // K
  OrientedArcSet arcs;
};

inline ReducedCosts reduced_costs(const LabeledGraph& g, const LabeledGraph& h, const PairCosts& pc) {
  ReducedCosts rc;
  rc.arcs = orient(g, h);
  rc.constant = pc.constant();
  rc.node = Matrix<Cost>(g.size(), h.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t k = 0; k < h.size(); ++k) rc.node(i, k) = pc.node_subst(i, k) - pc.node_del[i] - pc.node_ins[k];
  }
  rc.arc = Matrix<Cost>(rc.arcs.g_arcs.size(), rc.arcs.h_arcs.size());
  for (std::size_t a = 0; a < rc.arcs.g_arcs.size(); ++a) {
    const auto e = static_cast<std::size_t>(rc.arcs.g_arcs[a].edge);
    for (std::size_t b = 0; b < rc.arcs.h_arcs.size(); ++b) {
      const auto f = static_cast<std::size_t>(rc.arcs.h_arcs[b].edge);
      rc.arc(a, b) = pc.edge_subst(e, f) - pc.edge_del[e] - pc.edge_ins[f];
    }
  }
  return rc;
}

inline ReducedCosts reduced_costs(const LabeledGraph& g, const LabeledGraph& h, const CostModel& c) {
  return reduced_costs(g, h, pair_costs(g, h, c));
}

inline IlpModel build_fori(const LabeledGraph& g, const LabeledGraph& h, const PairCosts& pc) {
  const ReducedCosts rc = reduced_costs(g, h, pc);
  IlpModel m;
  m.formulation = Formulation::Fori;
  m.g_nodes = g.size();
  m.h_nodes = h.size();
  m.arcs = rc.arcs;
  m.constant = rc.constant;
  m.scale = pc.scale;
  const auto& g_arcs = m.arcs.g_arcs;
  const auto& h_arcs = m.arcs.h_arcs;

  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t k = 0; k < h.size(); ++k) {
      m.add_var({"x_" + std::to_string(i) + "_" + std::to_string(k), VarKind::NodeMap, static_cast<std::int32_t>(i),
                 static_cast<std::int32_t>(k)},
                rc.node(i, k));
    }
  }
  for (std::size_t a = 0; a < g_arcs.size(); ++a) {
    for (std::size_t b = 0; b < h_arcs.size(); ++b) {
      m.add_var({"z_" + std::to_string(g_arcs[a].tail) + "_" + std::to_string(g_arcs[a].head) + "_" +
                     std::to_string(h_arcs[b].tail) + "_" + std::to_string(h_arcs[b].head),
                 VarKind::ArcMap, static_cast<std::int32_t>(a), static_cast<std::int32_t>(b)},
                rc.arc(a, b));
    }
  }

  // Arc lookup in H: out_arcs[k] / in_arcs[k] list H-arc indices.
  std::vector<std::vector<std::size_t>> h_out(h.size()), h_in(h.size());
  for (std::size_t b = 0; b < h_arcs.size(); ++b) {
    h_out[static_cast<std::size_t>(h_arcs[b].tail)].push_back(b);
    h_in[static_cast<std::size_t>(h_arcs[b].head)].push_back(b);
  }
  std::vector<std::vector<std::size_t>> g_out(g.size()), g_in(g.size());
  for (std::size_t a = 0; a < g_arcs.size(); ++a) {
    g_out[static_cast<std::size_t>(g_arcs[a].tail)].push_back(a);
    g_in[static_cast<std::size_t>(g_arcs[a].head)].push_back(a);
  }
  // Index of the reverse arc (l,k) for every H arc (k,l).
  std::vector<std::size_t> reverse(h_arcs.size());
  for (std::size_t b = 0; b < h_arcs.size(); ++b) {
    for (std::size_t b2 : h_out[static_cast<std::size_t>(h_arcs[b].head)]) {
      if (h_arcs[b2].head == h_arcs[b].tail) reverse[b] = b2;
    }
  }

  for (std::size_t i = 0; i < g.size(); ++i) {
    Row row{{}, Relation::LessEqual, 1, RowKind::AssignG, static_cast<std::int32_t>(i)};
    for (std::size_t k = 0; k < h.size(); ++k) row.terms.push_back({m.x_var(i, k), 1});
    m.rows.push_back(std::move(row));
  }
  for (std::size_t k = 0; k < h.size(); ++k) {
    Row row{{}, Relation::LessEqual, 1, RowKind::AssignH, static_cast<std::int32_t>(k)};
    for (std::size_t i = 0; i < g.size(); ++i) row.terms.push_back({m.x_var(i, k), 1});
    m.rows.push_back(std::move(row));
  }
  for (std::size_t a = 0; a < g_arcs.size(); ++a) {
    for (std::size_t k = 0; k < h.size(); ++k) {
      Row row{{}, Relation::LessEqual, 0, RowKind::ArcTail, static_cast<std::int32_t>(a), static_cast<std::int32_t>(k)};
      for (std::size_t b : h_out[k]) row.terms.push_back({m.z_var(a, b), 1});
      row.terms.push_back({m.x_var(static_cast<std::size_t>(g_arcs[a].tail), k), -1});
      m.rows.push_back(std::move(row));
    }
  }
  for (std::size_t a = 0; a < g_arcs.size(); ++a) {
    for (std::size_t k = 0; k < h.size(); ++k) {
      Row row{{}, Relation::LessEqual, 0, RowKind::ArcHead, static_cast<std::int32_t>(a), static_cast<std::int32_t>(k)};
      for (std::size_t b : h_in[k]) row.terms.push_back({m.z_var(a, b), 1});
      row.terms.push_back({m.x_var(static_cast<std::size_t>(g_arcs[a].head), k), -1});
      m.rows.push_back(std::move(row));
    }
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t b = 0; b < h_arcs.size(); ++b) {
      Row row{{}, Relation::LessEqual, 0, RowKind::NodeArc, static_cast<std::int32_t>(i), static_cast<std::int32_t>(b)};
      for (std::size_t a : g_out[i]) row.terms.push_back({m.z_var(a, b), 1});
      for (std::size_t a : g_in[i]) row.terms.push_back({m.z_var(a, reverse[b]), 1});
      row.terms.push_back({m.x_var(i, static_cast<std::size_t>(h_arcs[b].tail)), -1});
      m.rows.push_back(std::move(row));
    }
  }
  return m;
}

inline IlpModel build_fori(const LabeledGraph& g, const LabeledGraph& h, const CostModel& c) {
  return build_fori(g, h, pair_costs(g, h, c));
}

namespace detail {

// Shared by F1 and its relaxed-topology variant.
inline IlpModel build_f1_family(const LabeledGraph& g, const LabeledGraph& h, const PairCosts& pc, bool relaxed) {
  IlpModel m;
  m.formulation = relaxed ? Formulation::BmPolytope : Formulation::F1;
  m.g_nodes = g.size();
  m.h_nodes = h.size();
  m.scale = pc.scale;
  const std::size_t ng = g.size(), nh = h.size(), mg = g.edge_count(), mh = h.edge_count();
  auto s = [](auto v) { return v == kEpsilon ? std::string("eps") : std::to_string(v); };
  auto add_x = [&](std::int32_t i, std::int32_t k, Cost cost) {
    return m.add_var({"x_" + s(i) + "_" + s(k), VarKind::NodeMap, i, k}, cost);
  };
  auto add_y = [&](std::int32_t e, std::int32_t f, Cost cost) {
    return m.add_var({"y_" + s(e) + "_" + s(f), VarKind::EdgeMap, e, f}, cost);
  };

  for (std::size_t i = 0; i < ng; ++i) {
    for (std::size_t k = 0; k < nh; ++k) add_x(static_cast<std::int32_t>(i), static_cast<std::int32_t>(k), pc.node_subst(i, k));
  }
  std::vector<std::int32_t> x_del(ng), x_ins(nh);
  for (std::size_t i = 0; i < ng; ++i) x_del[i] = add_x(static_cast<std::int32_t>(i), kEpsilon, pc.node_del[i]);
  for (std::size_t k = 0; k < nh; ++k) x_ins[k] = add_x(kEpsilon, static_cast<std::int32_t>(k), pc.node_ins[k]);
  std::vector<std::int32_t> y_map(mg * mh), y_del(mg), y_ins(mh);
  for (std::size_t e = 0; e < mg; ++e) {
    for (std::size_t f = 0; f < mh; ++f) y_map[e * mh + f] = add_y(static_cast<std::int32_t>(e), static_cast<std::int32_t>(f), pc.edge_subst(e, f));
  }
  for (std::size_t e = 0; e < mg; ++e) y_del[e] = add_y(static_cast<std::int32_t>(e), kEpsilon, pc.edge_del[e]);
  for (std::size_t f = 0; f < mh; ++f) y_ins[f] = add_y(kEpsilon, static_cast<std::int32_t>(f), pc.edge_ins[f]);

  for (std::size_t i = 0; i < ng; ++i) {
    Row row{{}, Relation::Equal, 1, RowKind::NodeG, static_cast<std::int32_t>(i)};
    for (std::size_t k = 0; k < nh; ++k) row.terms.push_back({m.x_var(i, k), 1});
    row.terms.push_back({x_del[i], 1});
    m.rows.push_back(std::move(row));
  }
  for (std::size_t k = 0; k < nh; ++k) {
    Row row{{}, Relation::Equal, 1, RowKind::NodeH, static_cast<std::int32_t>(k)};
    for (std::size_t i = 0; i < ng; ++i) row.terms.push_back({m.x_var(i, k), 1});
    row.terms.push_back({x_ins[k], 1});
    m.rows.push_back(std::move(row));
  }
  for (std::size_t e = 0; e < mg; ++e) {
    Row row{{}, Relation::Equal, 1, RowKind::EdgeG, static_cast<std::int32_t>(e)};
    for (std::size_t f = 0; f < mh; ++f) row.terms.push_back({y_map[e * mh + f], 1});
    row.terms.push_back({y_del[e], 1});
    m.rows.push_back(std::move(row));
  }
  for (std::size_t f = 0; f < mh; ++f) {
    Row row{{}, Relation::Equal, 1, RowKind::EdgeH, static_cast<std::int32_t>(f)};
    for (std::size_t e = 0; e < mg; ++e) row.terms.push_back({y_map[e * mh + f], 1});
    row.terms.push_back({y_ins[f], 1});
    m.rows.push_back(std::move(row));
  }
  for (std::size_t e = 0; e < mg; ++e) {
    const auto i = static_cast<std::size_t>(g.edge(e).u), j = static_cast<std::size_t>(g.edge(e).v);
    for (std::size_t f = 0; f < mh; ++f) {
      const auto k = static_cast<std::size_t>(h.edge(f).u), l = static_cast<std::size_t>(h.edge(f).v);
      const auto y = y_map[e * mh + f];
      const auto ei = static_cast<std::int32_t>(e), fi = static_cast<std::int32_t>(f);
      if (relaxed) {
        m.rows.push_back({{{y, 2}, {m.x_var(i, k), -1}, {m.x_var(j, k), -1}, {m.x_var(i, l), -1}, {m.x_var(j, l), -1}},
                          Relation::LessEqual, 0, RowKind::EdgeTopoRelaxed, ei, fi});
      } else {
        m.rows.push_back({{{y, 1}, {m.x_var(i, k), -1}, {m.x_var(j, k), -1}}, Relation::LessEqual, 0, RowKind::EdgeTopo, ei, fi});
        m.rows.push_back({{{y, 1}, {m.x_var(i, l), -1}, {m.x_var(j, l), -1}}, Relation::LessEqual, 0, RowKind::EdgeTopo, ei, fi});
      }
    }
  }
  return m;
}

}  // namespace detail

/// Edge-variable formulation over the ε-augmented node and edge sets, with
/// raw (not reduced) costs and no constant.
inline IlpModel build_f1(const LabeledGraph& g, const LabeledGraph& h, const CostModel& c) {
  return detail::build_f1_family(g, h, pair_costs(g, h, c), false);
}

/// F1 with each pair of topological rows replaced by their halved sum.
inline IlpModel build_bm_polytope(const LabeledGraph& g, const LabeledGraph& h, const CostModel& c) {
  return detail::build_f1_family(g, h, pair_costs(g, h, c), true);
}

inline ThresholdedModel add_threshold(IlpModel m, Cost tau) {
  Row row{{}, Relation::LessEqual, tau - m.constant, RowKind::Threshold};
  for (std::size_t j = 0; j < m.vars.size(); ++j) {
    if (m.objective[j] != 0) row.terms.push_back({static_cast<std::int32_t>(j), m.objective[j]});
  }
  m.rows.push_back(std::move(row));
  return {std::move(m), tau};
}

/// CPLEX-style LP text for cross-checking with external solvers.
inline void write_lp(std::ostream& os, const IlpModel& m) {
  auto term = [&](std::ostringstream& line, Cost coef, const std::string& name, bool& first) {
    if (coef == 0) return;
    if (coef < 0) {
      line << (first ? "- " : " - ");
    } else if (!first) {
      line << " + ";
    }
    const Cost mag = coef < 0 ? -coef : coef;
    if (mag != 1) line << mag << ' ';
    line << name;
    first = false;
  };
  os << "\\ formulation " << (m.formulation == Formulation::Fori ? "FORI" : m.formulation == Formulation::F1 ? "F1" : "BM-polytope")
     << ", cost scale " << m.scale << "\n";
  os << "Minimize\n obj: ";
  {
    std::ostringstream line;
    bool first = true;
    for (std::size_t j = 0; j < m.vars.size(); ++j) term(line, m.objective[j], m.vars[j].name, first);
    if (m.constant != 0 || first) line << (first ? "" : " + ") << m.constant;
    os << line.str() << "\n";
  }
  os << "Subject To\n";
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    std::ostringstream line;
    bool first = true;
    for (const auto& t : m.rows[r].terms) term(line, t.coef, m.vars[static_cast<std::size_t>(t.var)].name, first);
    if (first) {
      os << "\\ c" << r << " has no terms\n";
      continue;
    }
    os << " c" << r << ": " << line.str() << (m.rows[r].relation == Relation::Equal ? " = " : " <= ") << m.rows[r].rhs << "\n";
  }
  os << "Bounds\n";
  for (const auto& v : m.vars) os << " " << v.lower << " <= " << v.name << " <= " << v.upper << "\n";
  os << "Binaries\n";
  for (const auto& v : m.vars) {
    if (v.integer) os << " " << v.name << "\n";
  }
  os << "End\n";
}

}  // namespace gedsim
