#pragma once

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <nlohmann/json.hpp>

#include "gedsim/error.hpp"
#include "gedsim/graph.hpp"
#include "gedsim/search.hpp"

namespace gedsim {

using Json = nlohmann::ordered_json;

/// Which GXL attributes make up a label. The token is the `|`-joined values
/// of `fields` (in order); the payload stores each field under its renamed key.
/// Attributes not listed here are not carried over.
struct GxlLabelSchema {
  std::vector<std::string> fields{"label"};
  std::map<std::string, std::string> rename;
  /// Fields allowed to be absent; they are then left out of the payload.
  std::set<std::string> optional;
  /// Keep the token only, without a payload.
  bool token_only = true;
};

struct GxlSchema {
  GxlLabelSchema node;
  GxlLabelSchema edge;
};

/// Attribute layouts of the molecule and protein collections.
inline GxlSchema gxl_preset(std::string_view name) {
  GxlSchema s;
  if (name == "aids" || name == "muta" || name == "aids-muta") {
    s.node.fields = {"chem"};
    s.edge.fields = {"valence"};
  } else if (name == "protein") {
    s.node = {{"type", "sequence"}, {{"type", "t"}, {"sequence", "s"}}, {}, false};
    s.edge = {{"type0", "type1"}, {{"type0", "t1"}, {"type1", "t2"}}, {"type1"}, false};
  } else if (name != "default" && !name.empty()) {
    throw Error(ErrorCode::SchemaViolation, "unknown GXL preset '" + std::string(name) + "'");
  }
  return s;
}

namespace detail {

namespace pt = boost::property_tree;

inline std::map<std::string, std::string> gxl_attributes(const pt::ptree& element) {
  std::map<std::string, std::string> out;
  for (const auto& [tag, child] : element) {
    if (tag != "attr") continue;
    const auto name = child.get_optional<std::string>("<xmlattr>.name");
    if (!name) continue;
    std::string value;
    for (const auto& [vtag, vchild] : child) {
      if (vtag == "<xmlattr>") continue;
      value = vchild.get_value<std::string>();
      break;
    }
    out[*name] = value;
  }
  return out;
}

inline std::pair<std::string, Payload> gxl_label(const std::map<std::string, std::string>& attrs,
                                                 const GxlLabelSchema& schema, const std::string& where) {
  std::string token;
  Payload payload;
  bool first = true;
  for (const auto& field : schema.fields) {
    auto it = attrs.find(field);
    std::string value;
    if (it == attrs.end()) {
      if (!schema.optional.count(field)) throw Error(ErrorCode::MissingLabelAttr, where + " lacks attribute '" + field + "'");
      value = "null";
    } else {
      value = it->second;
      auto key = schema.rename.count(field) ? schema.rename.at(field) : field;
      if (!schema.token_only) payload[key] = value;
    }
    token += (first ? "" : "|") + value;
    first = false;
  }
  return {token, payload};
}

}  // namespace detail

/// Parses one undirected GXL graph. Node ids are kept as original ids;
/// internal ids follow document order.
inline LabeledGraph parse_gxl(std::string_view bytes, LabelSpacePtr labels, const GxlSchema& schema = {},
                              std::string name = {}) {
  namespace pt = boost::property_tree;
  pt::ptree doc;
  try {
    std::istringstream in{std::string(bytes)};
    pt::read_xml(in, doc);
  } catch (const pt::xml_parser_error& e) {
    throw Error(ErrorCode::XmlMalformed, e.what());
  }
  const auto gxl = doc.get_child_optional("gxl");
  if (!gxl) throw Error(ErrorCode::XmlMalformed, "missing <gxl> root");
  const pt::ptree* graph = nullptr;
  for (const auto& [tag, child] : *gxl) {
    if (tag != "graph") continue;
    if (graph) throw Error(ErrorCode::XmlMalformed, "more than one <graph>");
    graph = &child;
  }
  if (!graph) throw Error(ErrorCode::XmlMalformed, "missing <graph>");
  if (graph->get<std::string>("<xmlattr>.edgemode", "undirected") == "directed") {
    throw Error(ErrorCode::DirectedUnsupported, "graph declares edgemode=\"directed\"");
  }
  if (name.empty()) name = graph->get<std::string>("<xmlattr>.id", "");

  GraphBuilder builder(std::move(labels));
  builder.name(name);
  std::map<std::string, NodeId> ids;
  struct PendingEdge {
    std::string from, to, token;
    Payload payload;
  };
  std::vector<PendingEdge> edges;
  for (const auto& [tag, child] : *graph) {
    if (tag == "node") {
      const auto id = child.get_optional<std::string>("<xmlattr>.id");
      if (!id) throw Error(ErrorCode::XmlMalformed, "<node> without id");
      if (ids.count(*id)) throw Error(ErrorCode::SchemaViolation, "duplicate node id '" + *id + "'");
      auto [token, payload] = detail::gxl_label(detail::gxl_attributes(child), schema.node, "node '" + *id + "'");
      ids[*id] = builder.add_node(token, payload, *id);
    } else if (tag == "edge") {
      if (child.get<std::string>("<xmlattr>.isdirected", "false") == "true") {
        throw Error(ErrorCode::DirectedUnsupported, "edge marked isdirected");
      }
      const auto from = child.get_optional<std::string>("<xmlattr>.from");
      const auto to = child.get_optional<std::string>("<xmlattr>.to");
      if (!from || !to) throw Error(ErrorCode::XmlMalformed, "<edge> without from/to");
      auto [token, payload] = detail::gxl_label(detail::gxl_attributes(child), schema.edge, "edge " + *from + "-" + *to);
      edges.push_back({*from, *to, token, payload});
    }
  }
  for (const auto& e : edges) {
    auto u = ids.find(e.from), v = ids.find(e.to);
    if (u == ids.end() || v == ids.end()) {
      throw Error(ErrorCode::DanglingEndpoint, "edge " + e.from + "-" + e.to + " references an unknown node");
    }
    builder.add_edge(u->second, v->second, e.token, e.payload);
  }
  return builder.build();
}

namespace detail {

inline bool all_digits(const std::string& s) {
  return !s.empty() && s.size() < 10 && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

inline Json id_json(const std::string& id) {
  if (all_digits(id)) return std::stoll(id);
  return id;
}

inline std::string id_string(const Json& j, const char* what) {
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  if (j.is_string()) return j.get<std::string>();
  throw Error(ErrorCode::SchemaViolation, std::string(what) + " must be an integer or string id");
}

inline Payload payload_from(const Json& obj) {
  Payload p;
  auto it = obj.find("payload");
  if (it == obj.end() || it->is_null()) return p;
  if (!it->is_object()) throw Error(ErrorCode::SchemaViolation, "payload must be an object");
  for (const auto& [k, v] : it->items()) {
    if (v.is_null()) continue;
    if (!v.is_string()) throw Error(ErrorCode::SchemaViolation, "payload values must be strings or null");
    p[k] = v.get<std::string>();
  }
  return p;
}

inline std::string label_from(const Json& obj, const std::string& where) {
  auto it = obj.find("label");
  if (it == obj.end() || !it->is_string()) throw Error(ErrorCode::SchemaViolation, where + " lacks a string \"label\"");
  return it->get<std::string>();
}

}  // namespace detail

/// Native format: {"name"?, "nodes":[{id,label,payload?}], "edges":[{u,v,label,payload?}]}.
inline LabeledGraph parse_native(std::string_view bytes, LabelSpacePtr labels) {
  Json doc;
  try {
    doc = Json::parse(bytes);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::SchemaViolation, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::SchemaViolation, "graph document must be an object");
  if (doc.value("directed", false)) throw Error(ErrorCode::DirectedUnsupported, "directed graphs are not supported");
  auto nodes = doc.find("nodes");
  auto edges = doc.find("edges");
  if (nodes == doc.end() || !nodes->is_array()) throw Error(ErrorCode::SchemaViolation, "missing \"nodes\" array");
  if (edges != doc.end() && !edges->is_array()) throw Error(ErrorCode::SchemaViolation, "\"edges\" must be an array");

  GraphBuilder builder(std::move(labels));
  if (auto n = doc.find("name"); n != doc.end() && n->is_string()) builder.name(n->get<std::string>());
  std::map<std::string, NodeId> ids;
  for (const auto& node : *nodes) {
    if (!node.is_object() || !node.contains("id")) throw Error(ErrorCode::SchemaViolation, "node lacks \"id\"");
    const auto id = detail::id_string(node["id"], "node id");
    if (ids.count(id)) throw Error(ErrorCode::SchemaViolation, "duplicate node id '" + id + "'");
    ids[id] = builder.add_node(detail::label_from(node, "node '" + id + "'"), detail::payload_from(node), id);
  }
  if (edges != doc.end()) {
    for (const auto& edge : *edges) {
      if (!edge.is_object() || !edge.contains("u") || !edge.contains("v")) {
        throw Error(ErrorCode::SchemaViolation, "edge lacks \"u\"/\"v\"");
      }
      const auto u = detail::id_string(edge["u"], "edge endpoint");
      const auto v = detail::id_string(edge["v"], "edge endpoint");
      auto iu = ids.find(u), iv = ids.find(v);
      if (iu == ids.end() || iv == ids.end()) {
        throw Error(ErrorCode::DanglingEndpoint, "edge " + u + "-" + v + " references an unknown node");
      }
      builder.add_edge(iu->second, iv->second, detail::label_from(edge, "edge " + u + "-" + v), detail::payload_from(edge));
    }
  }
  return builder.build();
}

inline Json to_json(const LabeledGraph& g) {
  Json doc = Json::object();
  if (!g.name().empty()) doc["name"] = g.name();
  Json nodes = Json::array();
  for (std::size_t v = 0; v < g.size(); ++v) {
    const auto id = static_cast<NodeId>(v);
    const auto& label = g.labels().nodes[g.node_label(id)];
    Json n = {{"id", detail::id_json(g.original_id(id))}, {"label", label.token}};
    if (!label.payload.empty()) n["payload"] = label.payload;
    nodes.push_back(std::move(n));
  }
  Json edges = Json::array();
  for (const auto& e : g.edges()) {
    const auto& label = g.labels().edges[e.label];
    Json j = {{"u", detail::id_json(g.original_id(e.u))}, {"v", detail::id_json(g.original_id(e.v))}, {"label", label.token}};
    if (!label.payload.empty()) j["payload"] = label.payload;
    edges.push_back(std::move(j));
  }
  doc["nodes"] = std::move(nodes);
  doc["edges"] = std::move(edges);
  return doc;
}

/// Canonical native JSON: nodes in id order, edges sorted, two-space indent.
inline std::string write_native(const LabeledGraph& g) { return to_json(g).dump(2) + "\n"; }

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  out << bytes;
}

/// Graph file by extension: .gxl or native .json.
inline LabeledGraph load_graph(const std::filesystem::path& path, LabelSpacePtr labels, const GxlSchema& schema = {}) {
  const auto bytes = read_file(path);
  if (path.extension() == ".gxl") return parse_gxl(bytes, std::move(labels), schema, path.stem().string());
  LabeledGraph g = parse_native(bytes, labels);
  if (!g.name().empty()) return g;
  // Unnamed native graphs take the file stem.
  Json doc = Json::parse(bytes);
  doc["name"] = path.stem().string();
  return parse_native(doc.dump(), std::move(labels));
}

struct DatasetManifest {
  std::string cost_model;
  std::vector<std::pair<std::string, std::filesystem::path>> graphs;
  GxlSchema schema;
};

struct Dataset {
  LabelSpacePtr labels;
  std::vector<LabeledGraph> graphs;
  std::string cost_model;
};

namespace detail {

inline GxlLabelSchema label_schema_from(const Json& j, GxlLabelSchema base) {
  if (auto it = j.find("fields"); it != j.end()) base.fields = it->get<std::vector<std::string>>();
  if (auto it = j.find("rename"); it != j.end()) base.rename = it->get<std::map<std::string, std::string>>();
  if (auto it = j.find("optional"); it != j.end()) {
    auto v = it->get<std::vector<std::string>>();
    base.optional = {v.begin(), v.end()};
  }
  if (auto it = j.find("payload"); it != j.end()) base.token_only = !it->get<bool>();
  return base;
}

}  // namespace detail

/// Resolves a dataset path, falling back to $GEDSEARCH_DATA_DIR for relative
/// paths that do not exist locally.
inline std::filesystem::path resolve_data_path(const std::filesystem::path& p) {
  if (p.is_absolute() || std::filesystem::exists(p)) return p;
  if (const char* root = std::getenv("GEDSEARCH_DATA_DIR"); root && *root) return std::filesystem::path(root) / p;
  return p;
}

/// manifest.json: {"cost_model"?, "gxl_preset"?, "gxl": {"node": {...}, "edge": {...}}?,
/// "graphs": [{"id", "file"}]?}. Without "graphs" (or without a manifest)
/// every .gxl / .json file in the directory is loaded, ordered by name.
inline DatasetManifest load_manifest(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  DatasetManifest m;
  const fs::path file = dir / "manifest.json";
  Json doc = Json::object();
  if (fs::exists(file)) {
    try {
      doc = Json::parse(read_file(file));
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::SchemaViolation, "manifest: " + std::string(e.what()));
    }
  }
  try {
    m.cost_model = doc.value("cost_model", std::string{});
    m.schema = gxl_preset(doc.value("gxl_preset", m.cost_model == "protein" ? "protein" : m.cost_model.empty() ? "default" : "aids"));
    if (m.cost_model == "unit" && !doc.contains("gxl_preset")) m.schema = gxl_preset("default");
    if (auto g = doc.find("gxl"); g != doc.end()) {
      if (auto n = g->find("node"); n != g->end()) m.schema.node = detail::label_schema_from(*n, m.schema.node);
      if (auto e = g->find("edge"); e != g->end()) m.schema.edge = detail::label_schema_from(*e, m.schema.edge);
    }
    if (auto graphs = doc.find("graphs"); graphs != doc.end()) {
      for (const auto& entry : *graphs) m.graphs.emplace_back(detail::id_string(entry.at("id"), "graph id"), dir / entry.at("file").get<std::string>());
    }
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::SchemaViolation, "manifest: " + std::string(e.what()));
  }
  if (m.graphs.empty()) {
    if (!fs::is_directory(dir)) throw Error(ErrorCode::Io, dir.string() + " is not a directory");
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
      const auto ext = entry.path().extension();
      if (entry.path().filename() == "manifest.json") continue;
      if (ext == ".gxl" || ext == ".json") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) m.graphs.emplace_back(f.stem().string(), f);
  }
  std::set<std::string> seen;
  for (const auto& [id, path] : m.graphs) {
    if (!seen.insert(id).second) throw Error(ErrorCode::SchemaViolation, "duplicate graph id '" + id + "'");
  }
  return m;
}

/// Loads every graph of a dataset directory into one shared label space.
inline Dataset load_dataset(const std::filesystem::path& dir, LabelSpacePtr labels = make_label_space()) {
  const auto m = load_manifest(dir);
  Dataset d{labels, {}, m.cost_model};
  for (const auto& [id, path] : m.graphs) {
    LabeledGraph g = load_graph(path, labels, m.schema);
    // The manifest id wins over any embedded name.
    Json doc = to_json(g);
    doc["name"] = id;
    d.graphs.push_back(parse_native(doc.dump(), labels));
  }
  return d;
}

enum class ReportFormat { Json, Csv };

inline constexpr const char* kCsvHeader = "graph_id,stage_reached,ls,bm,forilp,verdict,elapsed_ms";

namespace detail {

inline std::string fixed(double v, int digits) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(digits) << v;
  return ss.str();
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

/// Report bytes. With timings off, elapsed fields are written as 0 so that
/// runs are byte-reproducible.
inline std::string write_report(const SearchReport& r, ReportFormat format, bool timings = true) {
  auto opt = [](const std::optional<double>& v) { return v ? detail::fixed(*v, 6) : std::string{}; };
  if (format == ReportFormat::Csv) {
    std::ostringstream out;
    out << kCsvHeader << "\n";
    for (const auto& o : r.outcomes) {
      out << detail::csv_field(o.graph_id) << ',' << o.stage_reached << ',' << opt(o.ls) << ',' << opt(o.bm) << ','
          << opt(o.forilp) << ',' << to_string(o.verdict) << ',' << detail::fixed(timings ? o.elapsed_ms : 0.0, 3) << "\n";
    }
    return out.str();
  }
  auto num = [](double v, int digits) { return Json::parse(detail::fixed(v, digits)); };
  Json doc = Json::object();
  doc["query"] = r.query_id;
  doc["cost_model"] = r.cost_model;
  doc["tau"] = num(r.tau, 6);
  doc["tau_scaled"] = r.tau_scaled;
  doc["filter_chain"] = r.filter_chain;
  doc["dataset_size"] = r.outcomes.size();
  doc["accepted"] = r.accepted;
  Json discarded = Json::object();
  for (const auto& [stage, count] : r.discarded_by) discarded[stage] = count;
  doc["discarded_by"] = discarded;
  doc["aborted"] = r.aborted;
  doc["matches"] = num(r.matches(), 6);
  doc["coverage"] = num(r.coverage(), 6);
  Json outcomes = Json::array();
  for (const auto& o : r.outcomes) {
    Json j = Json::object();
    j["graph_id"] = o.graph_id;
    j["stage_reached"] = o.stage_reached;
    j["ls"] = o.ls ? num(*o.ls, 6) : Json(nullptr);
    j["bm"] = o.bm ? num(*o.bm, 6) : Json(nullptr);
    j["forilp"] = o.forilp ? num(*o.forilp, 6) : Json(nullptr);
    j["verdict"] = to_string(o.verdict);
    j["bb_nodes"] = o.bb_nodes;
    j["elapsed_ms"] = num(timings ? o.elapsed_ms : 0.0, 3);
    if (!o.note.empty()) j["note"] = o.note;
    outcomes.push_back(std::move(j));
  }
  doc["outcomes"] = outcomes;
  return doc.dump(2) + "\n";
}

}  // namespace gedsim
