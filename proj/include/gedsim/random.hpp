#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gedsim/graph.hpp"

namespace gedsim {

struct RandomGraphSpec {
  std::size_t min_nodes = 1;
  std::size_t max_nodes = 6;
  std::size_t max_edges = 10;
  std::size_t node_labels = 2;
  std::size_t edge_labels = 1;
};

namespace detail {

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace detail

/// Uniform node count, labels drawn uniformly from "A", "B", ... for nodes and
/// "a", "b", ... for edges, edges sampled without replacement.
inline LabeledGraph random_graph(std::mt19937_64& rng, const RandomGraphSpec& spec, LabelSpacePtr labels,
                                 std::string name = {}) {
  const std::size_t n = detail::uniform(rng, spec.min_nodes, spec.max_nodes);
  GraphBuilder b(std::move(labels));
  b.name(std::move(name));
  for (std::size_t v = 0; v < n; ++v) {
    b.add_node(std::string(1, static_cast<char>('A' + detail::uniform(rng, 0, spec.node_labels - 1))));
  }
  std::vector<std::pair<NodeId, NodeId>> slots;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) slots.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
  }
  std::shuffle(slots.begin(), slots.end(), rng);
  const std::size_t m = detail::uniform(rng, 0, std::min(spec.max_edges, slots.size()));
  for (std::size_t e = 0; e < m; ++e) {
    b.add_edge(slots[e].first, slots[e].second,
               std::string(1, static_cast<char>('a' + detail::uniform(rng, 0, spec.edge_labels - 1))));
  }
  return b.build();
}

/// Protein-style graph: nodes carry (type, sequence) payloads, edges one or two
/// connection types.
inline LabeledGraph random_protein_graph(std::mt19937_64& rng, std::size_t max_nodes, LabelSpacePtr labels,
                                         std::string name = {}) {
  static const char* kTypes[] = {"helix", "sheet", "loop"};
  const std::size_t n = detail::uniform(rng, 1, max_nodes);
  GraphBuilder b(std::move(labels));
  b.name(std::move(name));
  for (std::size_t v = 0; v < n; ++v) {
    const std::string t = kTypes[detail::uniform(rng, 0, 2)];
    std::string s;
    for (std::size_t c = detail::uniform(rng, 1, 4); c > 0; --c) s += "ACDE"[detail::uniform(rng, 0, 3)];
    b.add_node(t + "|" + s, {{"t", t}, {"s", s}});
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (detail::uniform(rng, 0, 2) != 0) continue;
      const std::string t1 = std::to_string(detail::uniform(rng, 0, 1));
      if (detail::uniform(rng, 0, 1) == 0) {
        b.add_edge(static_cast<NodeId>(u), static_cast<NodeId>(v), t1 + "|null", {{"t1", t1}});
      } else {
        const std::string t2 = std::to_string(detail::uniform(rng, 0, 1));
        b.add_edge(static_cast<NodeId>(u), static_cast<NodeId>(v), t1 + "|" + t2, {{"t1", t1}, {"t2", t2}});
      }
    }
  }
  return b.build();
}

/// Named dataset of random graphs sharing one label space.
inline std::vector<LabeledGraph> random_dataset(std::uint64_t seed, std::size_t count, const RandomGraphSpec& spec,
                                                LabelSpacePtr labels, const std::string& prefix = "g") {
  std::mt19937_64 rng(seed);
  std::vector<LabeledGraph> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::string id = std::to_string(i);
    id.insert(0, 3 - std::min<std::size_t>(3, id.size()), '0');
    out.push_back(random_graph(rng, spec, labels, prefix + id));
  }
  return out;
}

}  // namespace gedsim
