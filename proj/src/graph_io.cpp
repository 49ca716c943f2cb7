#include "flextile/graph_io.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

#include "flextile/errors.hpp"

namespace flextile {

std::string graph_to_json(const LabeledMultigraph& graph, const Pot& pot) {
  nlohmann::ordered_json doc;
  doc["pot"] = render_pot(pot);
  doc["vertices"] = nlohmann::ordered_json::array();
  for (const auto& v : graph.vertices) {
    doc["vertices"].push_back({{"id", v.id}, {"tile", v.tile + 1}});
  }
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : graph.edges) {
    doc["edges"].push_back({{"from", e.from}, {"to", e.to}, {"label", std::string(1, e.label)}});
  }
  return doc.dump(2) + "\n";
}

ParsedGraph graph_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte, std::string("invalid graph JSON: ") + e.what());
  }
  ParsedGraph out;
  try {
    if (!doc.is_object()) throw ParseError(0, "graph JSON must be an object");
    if (doc.contains("pot")) out.pot_text = doc.at("pot").get<std::string>();
    for (const auto& v : doc.at("vertices")) {
      const auto tile = v.at("tile").get<std::int64_t>();
      if (tile < 1) throw ParseError(0, "vertex tile indices are 1-based");
      out.graph.vertices.push_back({v.at("id").get<std::int64_t>(), static_cast<std::size_t>(tile - 1)});
    }
    for (const auto& e : doc.at("edges")) {
      const auto label = e.at("label").get<std::string>();
      if (label.size() != 1 || label[0] < 'a' || label[0] > 'z') {
        throw ParseError(0, "edge label must be a single letter a-z");
      }
      out.graph.edges.push_back({e.at("from").get<std::int64_t>(), e.at("to").get<std::int64_t>(), label[0]});
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("graph JSON schema: ") + e.what());
  }
  return out;
}

std::string graph_to_dot(const LabeledMultigraph& graph) {
  std::ostringstream out;
  out << "digraph complex {\n";
  for (const auto& v : graph.vertices) out << "  v" << v.id << " [label=\"t" << v.tile + 1 << "\"];\n";
  for (const auto& e : graph.edges) {
    out << "  v" << e.from << " -> v" << e.to << " [label=\"" << e.label << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace flextile
