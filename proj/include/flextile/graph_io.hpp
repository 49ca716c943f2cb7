#pragma once

#include <string>
#include <string_view>

#include "flextile/complex.hpp"
#include "flextile/pot.hpp"

namespace flextile {

/// {"pot": "...", "vertices": [{"id", "tile"}], "edges": [{"from", "to", "label"}]}
/// with 1-based tile indices. Keys are emitted in this order.
std::string graph_to_json(const LabeledMultigraph& graph, const Pot& pot);

struct ParsedGraph {
  std::string pot_text;  // empty when the document has no "pot" key
  LabeledMultigraph graph;
};

/// Throws ParseError on malformed JSON or schema violations.
ParsedGraph graph_from_json(std::string_view text);

/// Directed DOT: vertices "v<id>" with label="t<j>", edges with label="<letter>".
std::string graph_to_dot(const LabeledMultigraph& graph);

}  // namespace flextile
