#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "gedsim/assignment.hpp"
#include "gedsim/costs.hpp"
#include "gedsim/error.hpp"
#include "gedsim/graph.hpp"

namespace gedsim {

inline constexpr std::size_t kOracleMaxNodes = 8;

struct OracleResult {
  /// Minimum edit cost in integer cost units.
  Cost cost = 0;
  Cost scale = 1;
  /// G node -> H node, kDeleted for deleted nodes.
  std::vector<std::int32_t> mapping;

  double value() const { return static_cast<double>(cost) / static_cast<double>(scale); }
};

namespace detail {

inline void require_oracle_size(const LabeledGraph& g, const LabeledGraph& h) {
  if (g.size() > kOracleMaxNodes || h.size() > kOracleMaxNodes) {
    throw Error(ErrorCode::TooLarge, "oracle limited to " + std::to_string(kOracleMaxNodes) + " nodes per graph, got " +
                                         std::to_string(g.size()) + " and " + std::to_string(h.size()));
  }
}

}  // namespace detail

/// Cost of the edit path induced by a partial node mapping. A mapped edge pair
/// is substituted or deleted-and-reinserted, whichever is cheaper.
inline Cost mapping_cost(const LabeledGraph& g, const LabeledGraph& h, const PairCosts& pc,
                         const std::vector<std::int32_t>& mapping) {
  Cost total = 0;
  std::vector<char> h_used(h.size(), 0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto k = mapping[i];
    if (k == kDeleted) {
      total += pc.node_del[i];
    } else {
      total += pc.node_subst(i, static_cast<std::size_t>(k));
      h_used[static_cast<std::size_t>(k)] = 1;
    }
  }
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (!h_used[k]) total += pc.node_ins[k];
  }
  std::vector<char> f_covered(h.edge_count(), 0);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto ku = mapping[static_cast<std::size_t>(g.edge(e).u)];
    const auto kv = mapping[static_cast<std::size_t>(g.edge(e).v)];
    std::optional<std::int32_t> f;
    if (ku != kDeleted && kv != kDeleted) f = h.find_edge(ku, kv);
    if (f) {
      const auto fi = static_cast<std::size_t>(*f);
      f_covered[fi] = 1;
      total += std::min(pc.edge_subst(e, fi), pc.edge_del[e] + pc.edge_ins[fi]);
    } else {
      total += pc.edge_del[e];
    }
  }
  for (std::size_t f = 0; f < h.edge_count(); ++f) {
    if (!f_covered[f]) total += pc.edge_ins[f];
  }
  return total;
}

/// Exact GED by depth-first enumeration of injective partial node mappings,
/// pruned by the running cost.
inline OracleResult brute_force_ged(const LabeledGraph& g, const LabeledGraph& h, const CostModel& model) {
  detail::require_oracle_size(g, h);
  const PairCosts pc = pair_costs(g, h, model);
  const std::size_t n = g.size();
  const std::size_t m = h.size();

  OracleResult best;
  best.scale = pc.scale;
  best.mapping.assign(n, kDeleted);
  best.cost = mapping_cost(g, h, pc, best.mapping);

  std::vector<std::int32_t> map(n, kDeleted);
  std::vector<char> used(m, 0);
  // Incremental cost of placing node i given earlier placements; H-edge
  // insertions are settled once all of G is placed.
  auto step_cost = [&](std::size_t i, std::int32_t k) {
    Cost c = k == kDeleted ? pc.node_del[i] : pc.node_subst(i, static_cast<std::size_t>(k));
    for (const auto& nb : g.neighbors(static_cast<NodeId>(i))) {
      const auto j = static_cast<std::size_t>(nb.node);
      if (j >= i) continue;
      const auto e = static_cast<std::size_t>(nb.edge);
      std::optional<std::int32_t> f;
      if (k != kDeleted && map[j] != kDeleted) f = h.find_edge(k, map[j]);
      c += f ? std::min(pc.edge_subst(e, static_cast<std::size_t>(*f)), pc.edge_del[e] + pc.edge_ins[static_cast<std::size_t>(*f)])
             : pc.edge_del[e];
    }
    return c;
  };
  auto finish_cost = [&] {
    Cost c = 0;
    for (std::size_t k = 0; k < m; ++k) {
      if (!used[k]) c += pc.node_ins[k];
    }
    for (std::size_t f = 0; f < h.edge_count(); ++f) {
      const auto& ed = h.edge(f);
      if (!used[static_cast<std::size_t>(ed.u)] || !used[static_cast<std::size_t>(ed.v)]) {
        c += pc.edge_ins[f];
        continue;
      }
      // Both endpoints used: covered iff their preimages are adjacent in G.
      std::int32_t pu = -1, pv = -1;
      for (std::size_t i = 0; i < n; ++i) {
        if (map[i] == ed.u) pu = static_cast<std::int32_t>(i);
        if (map[i] == ed.v) pv = static_cast<std::int32_t>(i);
      }
      if (!g.has_edge(pu, pv)) c += pc.edge_ins[f];
    }
    return c;
  };

  auto rec = [&](auto&& self, std::size_t i, Cost acc) -> void {
    if (acc >= best.cost) return;
    if (i == n) {
      const Cost total = acc + finish_cost();
      if (total < best.cost) {
        best.cost = total;
        best.mapping = map;
      }
      return;
    }
    for (std::size_t k = 0; k < m; ++k) {
      if (used[k]) continue;
      const Cost c = step_cost(i, static_cast<std::int32_t>(k));
      used[k] = 1;
      map[i] = static_cast<std::int32_t>(k);
      self(self, i + 1, acc + c);
      map[i] = kDeleted;
      used[k] = 0;
    }
    self(self, i + 1, acc + step_cost(i, kDeleted));
  };
  rec(rec, 0, 0);
  return best;
}

/// Twice the branch-match bound by exhaustion: every injective partial outer
/// mapping, each branch pair priced by an exhaustive inner edge matching.
inline Cost brute_force_bm_doubled(const LabeledGraph& g, const LabeledGraph& h, const CostModel& model) {
  detail::require_oracle_size(g, h);
  const PairCosts pc = pair_costs(g, h, model);
  const std::size_t n = g.size();
  const std::size_t m = h.size();

  auto branch_pair = [&](std::size_t i, std::size_t k) {
    const auto gs = g.incident_edges(static_cast<NodeId>(i));
    const auto hs = h.incident_edges(static_cast<NodeId>(k));
    Matrix<Cost> c(gs.size() + 1, hs.size() + 1, 0);
    for (std::size_t a = 0; a < gs.size(); ++a) {
      for (std::size_t b = 0; b < hs.size(); ++b) {
        c(a, b) = pc.edge_subst(static_cast<std::size_t>(gs[a]), static_cast<std::size_t>(hs[b]));
      }
      c(a, hs.size()) = pc.edge_del[static_cast<std::size_t>(gs[a])];
    }
    for (std::size_t b = 0; b < hs.size(); ++b) c(gs.size(), b) = pc.edge_ins[static_cast<std::size_t>(hs[b])];
    return 2 * pc.node_subst(i, k) + lsape_small(c);
  };
  std::vector<Cost> del(n), ins(m);
  for (std::size_t i = 0; i < n; ++i) {
    del[i] = 2 * pc.node_del[i];
    for (auto e : g.incident_edges(static_cast<NodeId>(i))) del[i] += pc.edge_del[static_cast<std::size_t>(e)];
  }
  for (std::size_t k = 0; k < m; ++k) {
    ins[k] = 2 * pc.node_ins[k];
    for (auto f : h.incident_edges(static_cast<NodeId>(k))) ins[k] += pc.edge_ins[static_cast<std::size_t>(f)];
  }
  Matrix<Cost> pair(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < m; ++k) pair(i, k) = branch_pair(i, k);
  }

  Cost best = std::numeric_limits<Cost>::max();
  std::vector<char> used(m, 0);
  auto rec = [&](auto&& self, std::size_t i, Cost acc) -> void {
    if (i == n) {
      for (std::size_t k = 0; k < m; ++k) {
        if (!used[k]) acc += ins[k];
      }
      best = std::min(best, acc);
      return;
    }
    for (std::size_t k = 0; k < m; ++k) {
      if (used[k]) continue;
      used[k] = 1;
      self(self, i + 1, acc + pair(i, k));
      used[k] = 0;
    }
    self(self, i + 1, acc + del[i]);
  };
  rec(rec, 0, 0);
  return best;
}

inline double brute_force_bm(const LabeledGraph& g, const LabeledGraph& h, const CostModel& model) {
  return static_cast<double>(brute_force_bm_doubled(g, h, model)) / 2.0 / static_cast<double>(model.scale());
}

}  // namespace gedsim
