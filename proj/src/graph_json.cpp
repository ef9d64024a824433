#include "afcore/graph_json.hpp"

#include "afcore/error.hpp"

namespace afcore {

namespace {

std::vector<VertexId> read_vertices(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
    fail(ErrorKind::InvalidInput, "expected an object with a \"vertices\" array");
  std::vector<VertexId> vertices;
  for (const auto& v : j["vertices"]) {
    if (v.is_string()) {
      vertices.push_back(v.get<std::string>());
    } else if (v.is_number_integer()) {
      vertices.push_back(std::to_string(v.get<long long>()));
    } else {
      fail(ErrorKind::InvalidInput, "vertex ids must be strings");
    }
  }
  return vertices;
}

VertexId read_endpoint(const nlohmann::json& e, const char* key) {
  if (!e.contains(key)) fail(ErrorKind::InvalidInput, std::string("edge is missing \"") + key + "\"");
  const auto& v = e[key];
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  fail(ErrorKind::InvalidInput, "edge endpoints must be vertex ids");
}

const nlohmann::json& read_edges(const nlohmann::json& j) {
  static const nlohmann::json empty = nlohmann::json::array();
  if (!j.contains("edges")) return empty;
  if (!j["edges"].is_array()) fail(ErrorKind::InvalidInput, "\"edges\" must be an array");
  return j["edges"];
}

}  // namespace

nlohmann::json graph_to_json(const MultiGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges()) {
    nlohmann::json mult;
    if (e.mult.is_infinite()) {
      mult = "inf";
    } else {
      mult = e.mult.count();
    }
    edges.push_back({{"src", g.vertices()[e.src]}, {"dst", g.vertices()[e.dst]}, {"mult", mult}});
  }
  return {{"vertices", g.vertices()}, {"edges", edges}};
}

MultiGraph graph_from_json(const nlohmann::json& j) {
  auto vertices = read_vertices(j);
  std::vector<EdgeSpec> edges;
  for (const auto& e : read_edges(j)) {
    EdgeSpec spec{read_endpoint(e, "src"), read_endpoint(e, "dst"), Multiplicity(1)};
    if (e.contains("mult")) {
      const auto& m = e["mult"];
      if (m.is_string() && m.get<std::string>() == "inf") {
        spec.mult = Multiplicity::infinite();
      } else if (m.is_number_integer() && m.get<long long>() >= 1) {
        spec.mult = Multiplicity(m.get<std::uint64_t>());
      } else {
        fail(ErrorKind::InvalidInput, "\"mult\" must be a positive integer or \"inf\"");
      }
    }
    edges.push_back(std::move(spec));
  }
  return MultiGraph(std::move(vertices), edges);
}

nlohmann::json relation_to_json(const DagRelation& r) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [v, w] : r.pairs())
    edges.push_back({{"src", r.vertices()[v]}, {"dst", r.vertices()[w]}});
  return {{"vertices", r.vertices()}, {"edges", edges}};
}

DagRelation relation_from_json(const nlohmann::json& j) {
  auto vertices = read_vertices(j);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (const auto& e : read_edges(j)) pairs.emplace_back(read_endpoint(e, "src"), read_endpoint(e, "dst"));
  return DagRelation::from_named(std::move(vertices), pairs);
}

}  // namespace afcore
