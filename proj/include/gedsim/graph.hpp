#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gedsim/error.hpp"

namespace gedsim {

using NodeId = std::int32_t;
using LabelId = std::int32_t;

/// Opaque attributes attached to a label, e.g. the (type, sequence) tuple of a
/// protein secondary-structure element. An absent key means "null".
using Payload = std::map<std::string, std::string>;

struct LabelValue {
  std::string token;
  Payload payload;
};

/// Interning table for one label alphabet. Ids are dense and stable; the table
/// only ever grows, so ids handed out earlier stay valid.
class Alphabet {
 public:
  LabelId intern(const std::string& token, const Payload& payload = {}) {
    if (auto it = index_.find(token); it != index_.end()) {
      if (!payload.empty() && values_[it->second].payload != payload) {
        throw Error(ErrorCode::SchemaViolation,
                    "label '" + token + "' reused with a different payload");
      }
      return it->second;
    }
    const auto id = static_cast<LabelId>(values_.size());
    values_.push_back({token, payload});
    index_.emplace(token, id);
    return id;
  }

  std::optional<LabelId> find(const std::string& token) const {
    if (auto it = index_.find(token); it != index_.end()) return it->second;
    return std::nullopt;
  }

  bool contains(LabelId id) const { return id >= 0 && static_cast<std::size_t>(id) < values_.size(); }
  const LabelValue& operator[](LabelId id) const { return values_.at(static_cast<std::size_t>(id)); }
  std::size_t size() const { return values_.size(); }

 private:
  std::vector<LabelValue> values_;
  std::unordered_map<std::string, LabelId> index_;
};

/// Node alphabet and edge alphabet shared by every graph of one dataset.
struct LabelSpace {
  Alphabet nodes;
  Alphabet edges;
};

using LabelSpacePtr = std::shared_ptr<LabelSpace>;

inline LabelSpacePtr make_label_space() { return std::make_shared<LabelSpace>(); }

struct Edge {
  NodeId u;
  NodeId v;
  LabelId label;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct EdgeInput {
  NodeId u;
  NodeId v;
  LabelId label;
};

/// Center label plus the sorted multiset of incident edge labels.
struct BranchStructure {
  LabelId center_label;
  std::vector<LabelId> incident_edge_labels;

  friend bool operator==(const BranchStructure&, const BranchStructure&) = default;
};

/// Simple undirected labeled graph with dense node ids. Immutable once built.
class LabeledGraph {
 public:
  struct Neighbor {
    NodeId node;
    std::int32_t edge;  // index into edges()
  };

  std::size_t size() const { return node_labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  LabelId node_label(NodeId v) const { return node_labels_.at(checked(v)); }
  std::span<const LabelId> node_labels() const { return node_labels_; }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }

  /// δ(v), sorted by neighbor id.
  std::span<const Neighbor> neighbors(NodeId v) const { return adjacency_.at(checked(v)); }
  std::size_t degree(NodeId v) const { return neighbors(v).size(); }

  /// Γ(v) as edge indices, in neighbor order.
  std::vector<std::int32_t> incident_edges(NodeId v) const {
    std::vector<std::int32_t> out;
    for (const auto& nb : neighbors(v)) out.push_back(nb.edge);
    return out;
  }

  std::optional<std::int32_t> find_edge(NodeId a, NodeId b) const {
    if (!valid(a) || !valid(b)) return std::nullopt;
    const auto& adj = adjacency_[static_cast<std::size_t>(a)];
    auto it = std::lower_bound(adj.begin(), adj.end(), b,
                               [](const Neighbor& nb, NodeId x) { return nb.node < x; });
    if (it != adj.end() && it->node == b) return it->edge;
    return std::nullopt;
  }
  bool has_edge(NodeId a, NodeId b) const { return find_edge(a, b).has_value(); }

  const std::string& original_id(NodeId v) const { return original_ids_.at(checked(v)); }
  const std::string& name() const { return name_; }

  const LabelSpace& labels() const { return *labels_; }
  const std::shared_ptr<const LabelSpace>& label_space() const { return labels_; }

  const std::string& node_token(NodeId v) const { return labels_->nodes[node_label(v)].token; }
  const std::string& edge_token(std::size_t e) const { return labels_->edges[edge(e).label].token; }

  /// Structural equality on label tokens, payloads, edges and original ids.
  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    if (a.size() != b.size() || a.edges_.size() != b.edges_.size()) return false;
    for (std::size_t v = 0; v < a.size(); ++v) {
      const auto& la = a.labels_->nodes[a.node_labels_[v]];
      const auto& lb = b.labels_->nodes[b.node_labels_[v]];
      if (la.token != lb.token || la.payload != lb.payload) return false;
      if (a.original_ids_[v] != b.original_ids_[v]) return false;
    }
    for (std::size_t e = 0; e < a.edges_.size(); ++e) {
      const auto& ea = a.edges_[e];
      const auto& eb = b.edges_[e];
      if (ea.u != eb.u || ea.v != eb.v) return false;
      const auto& la = a.labels_->edges[ea.label];
      const auto& lb = b.labels_->edges[eb.label];
      if (la.token != lb.token || la.payload != lb.payload) return false;
    }
    return true;
  }

 private:
  friend LabeledGraph build_graph(std::shared_ptr<const LabelSpace>, std::vector<LabelId>,
                                  const std::vector<EdgeInput>&, std::vector<std::string>,
                                  std::string);

  bool valid(NodeId v) const { return v >= 0 && static_cast<std::size_t>(v) < node_labels_.size(); }
  std::size_t checked(NodeId v) const {
    if (!valid(v)) throw Error(ErrorCode::UnknownNode, "node " + std::to_string(v));
    return static_cast<std::size_t>(v);
  }

  std::shared_ptr<const LabelSpace> labels_;
  std::vector<LabelId> node_labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<std::string> original_ids_;
  std::string name_;
};

/// Validates and canonicalizes a graph. Nodes are 0..node_labels.size()-1;
/// edges are stored with u < v and sorted lexicographically.
inline LabeledGraph build_graph(std::shared_ptr<const LabelSpace> labels,
                                std::vector<LabelId> node_labels,
                                const std::vector<EdgeInput>& edges,
                                std::vector<std::string> original_ids = {},
                                std::string name = {}) {
  if (!labels) throw Error(ErrorCode::UnknownLabel, "graph built without a label space");
  const auto n = static_cast<NodeId>(node_labels.size());
  for (LabelId l : node_labels) {
    if (!labels->nodes.contains(l)) {
      throw Error(ErrorCode::UnknownLabel, "node label id " + std::to_string(l));
    }
  }
  if (original_ids.empty()) {
    for (NodeId v = 0; v < n; ++v) original_ids.push_back(std::to_string(v));
  } else if (original_ids.size() != node_labels.size()) {
    throw Error(ErrorCode::DimensionMismatch, "original id table size differs from node count");
  }

  LabeledGraph g;
  g.labels_ = std::move(labels);
  g.node_labels_ = std::move(node_labels);
  g.original_ids_ = std::move(original_ids);
  g.name_ = std::move(name);

  g.edges_.reserve(edges.size());
  for (const auto& in : edges) {
    if (in.u < 0 || in.u >= n || in.v < 0 || in.v >= n) {
      throw Error(ErrorCode::DanglingEndpoint,
                  "edge (" + std::to_string(in.u) + "," + std::to_string(in.v) + ")");
    }
    if (in.u == in.v) throw Error(ErrorCode::SelfLoop, "edge (" + std::to_string(in.u) + "," + std::to_string(in.v) + ")");
    if (!g.labels_->edges.contains(in.label)) {
      throw Error(ErrorCode::UnknownLabel, "edge label id " + std::to_string(in.label));
    }
    g.edges_.push_back({std::min(in.u, in.v), std::max(in.u, in.v), in.label});
  }
  std::sort(g.edges_.begin(), g.edges_.end(),
            [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
  for (std::size_t e = 1; e < g.edges_.size(); ++e) {
    if (g.edges_[e].u == g.edges_[e - 1].u && g.edges_[e].v == g.edges_[e - 1].v) {
      throw Error(ErrorCode::DuplicateEdge, "edge {" + std::to_string(g.edges_[e].u) + "," +
                                                std::to_string(g.edges_[e].v) + "}");
    }
  }

  g.adjacency_.assign(static_cast<std::size_t>(n), {});
  for (std::size_t e = 0; e < g.edges_.size(); ++e) {
    const auto& ed = g.edges_[e];
    g.adjacency_[static_cast<std::size_t>(ed.u)].push_back({ed.v, static_cast<std::int32_t>(e)});
    g.adjacency_[static_cast<std::size_t>(ed.v)].push_back({ed.u, static_cast<std::int32_t>(e)});
  }
  for (auto& adj : g.adjacency_) {
    std::sort(adj.begin(), adj.end(), [](const auto& a, const auto& b) { return a.node < b.node; });
  }
  return g;
}

/// Convenience builder working on label tokens; interns into a shared label space.
class GraphBuilder {
 public:
  explicit GraphBuilder(LabelSpacePtr labels) : labels_(std::move(labels)) {}

  NodeId add_node(const std::string& token, const Payload& payload = {}, std::string original_id = {}) {
    node_labels_.push_back(labels_->nodes.intern(token, payload));
    const auto id = static_cast<NodeId>(node_labels_.size() - 1);
    original_ids_.push_back(original_id.empty() ? std::to_string(id) : std::move(original_id));
    return id;
  }

  GraphBuilder& add_edge(NodeId u, NodeId v, const std::string& token, const Payload& payload = {}) {
    edges_.push_back({u, v, labels_->edges.intern(token, payload)});
    return *this;
  }

  GraphBuilder& name(std::string n) {
    name_ = std::move(n);
    return *this;
  }

  LabeledGraph build() const { return build_graph(labels_, node_labels_, edges_, original_ids_, name_); }

 private:
  LabelSpacePtr labels_;
  std::vector<LabelId> node_labels_;
  std::vector<EdgeInput> edges_;
  std::vector<std::string> original_ids_;
  std::string name_;
};

inline BranchStructure branch_structure(const LabeledGraph& g, NodeId v) {
  BranchStructure b{g.node_label(v), {}};
  for (const auto& nb : g.neighbors(v)) b.incident_edge_labels.push_back(g.edge(static_cast<std::size_t>(nb.edge)).label);
  std::sort(b.incident_edge_labels.begin(), b.incident_edge_labels.end());
  return b;
}

struct Arc {
  NodeId tail;
  NodeId head;
  std::int32_t edge;  // underlying undirected edge index

  friend bool operator==(const Arc& a, const Arc& b) { return a.tail == b.tail && a.head == b.head; }
};

/// G's edges oriented low-to-high, H's edges doubled into both directions.
struct OrientedArcSet {
  std::vector<Arc> g_arcs;
  std::vector<Arc> h_arcs;
};

inline OrientedArcSet orient(const LabeledGraph& g, const LabeledGraph& h) {
  OrientedArcSet arcs;
  arcs.g_arcs.reserve(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    arcs.g_arcs.push_back({g.edge(e).u, g.edge(e).v, static_cast<std::int32_t>(e)});
  }
  arcs.h_arcs.reserve(2 * h.edge_count());
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    arcs.h_arcs.push_back({h.edge(e).u, h.edge(e).v, static_cast<std::int32_t>(e)});
    arcs.h_arcs.push_back({h.edge(e).v, h.edge(e).u, static_cast<std::int32_t>(e)});
  }
  std::sort(arcs.h_arcs.begin(), arcs.h_arcs.end(), [](const Arc& a, const Arc& b) {
    return std::pair(a.tail, a.head) < std::pair(b.tail, b.head);
  });
  return arcs;
}

inline constexpr const char* kPlainLabel = "_";

/// Unlabeled star S_n (center 0) and cycle C_n over one shared label space.
inline std::pair<LabeledGraph, LabeledGraph> star_cycle_instance(int n, LabelSpacePtr labels = make_label_space()) {
  if (n < 3) throw Error(ErrorCode::InvalidSize, "star/cycle instance needs n >= 3, got " + std::to_string(n));
  GraphBuilder star(labels);
  GraphBuilder cycle(labels);
  for (int i = 0; i < n; ++i) {
    star.add_node(kPlainLabel);
    cycle.add_node(kPlainLabel);
  }
  for (int i = 1; i < n; ++i) star.add_edge(0, i, kPlainLabel);
  for (int i = 0; i < n; ++i) cycle.add_edge(i, (i + 1) % n, kPlainLabel);
  star.name("S" + std::to_string(n));
  cycle.name("C" + std::to_string(n));
  return {star.build(), cycle.build()};
}

/// The two-graph worked example: a star with an A-center and leaves {B,B,A,A}
/// against a 4-cycle with one chord. Its unit-cost edit distance is 5.
inline std::pair<LabeledGraph, LabeledGraph> worked_example_pair(LabelSpacePtr labels = make_label_space()) {
  GraphBuilder g(labels);
  g.add_node("A", {}, "center");
  g.add_node("B", {}, "top");
  g.add_node("B", {}, "right");
  g.add_node("A", {}, "bottom");
  g.add_node("A", {}, "left");
  for (int leaf = 1; leaf <= 4; ++leaf) g.add_edge(0, leaf, kPlainLabel);
  g.name("G");

  GraphBuilder h(labels);
  h.add_node("A", {}, "top");
  h.add_node("B", {}, "left");
  h.add_node("B", {}, "right");
  h.add_node("A", {}, "bottom");
  h.add_edge(1, 0, kPlainLabel)
      .add_edge(0, 2, kPlainLabel)
      .add_edge(2, 3, kPlainLabel)
      .add_edge(3, 1, kPlainLabel)
      .add_edge(1, 2, kPlainLabel)
      .name("H");
  return {g.build(), h.build()};
}

}  // namespace gedsim
