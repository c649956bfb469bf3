#ifndef STELLATE_GRAPH_IO_HPP
#define STELLATE_GRAPH_IO_HPP

#include <string>
#include <string_view>

#include "json.hpp"
#include "stellate/graph.hpp"

namespace stellate {

// graph6: 6 bits per byte, bias 63, upper triangle in column-major order.
Graph parse_graph6(std::string_view line);
std::string encode_graph6(const Graph& g);

// {"n": int, "edges": [[u,v], ...]} with 1-based vertices; optional "labels".
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);

// Accepts either format: a line starting with '{' is JSON, anything else graph6.
Graph parse_graph_line(std::string_view line);

} // namespace stellate

#endif
