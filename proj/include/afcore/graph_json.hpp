#pragma once

#include <json.hpp>

#include "afcore/graph.hpp"

namespace afcore {

// Graph JSON:    {"vertices":["1","2"],"edges":[{"src":"1","dst":"2","mult":1}]}
//                with "mult" a positive integer or the string "inf".
// Relation JSON: the same shape without "mult".
nlohmann::json graph_to_json(const MultiGraph& g);
MultiGraph graph_from_json(const nlohmann::json& j);

nlohmann::json relation_to_json(const DagRelation& r);
DagRelation relation_from_json(const nlohmann::json& j);

}  // namespace afcore
