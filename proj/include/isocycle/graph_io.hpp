#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "isocycle/plane_graph.hpp"

namespace isocycle {

/// Graph file format:
///   { "vertices": [id...], "rotation": { id: [neighbour ids clockwise] },
///     "outer_face": [id...] (optional) }
/// Identifiers may be strings or integers; they are kept as strings.
PlaneGraph graph_from_json(const nlohmann::json& doc);
nlohmann::json graph_to_json(const PlaneGraph& g);

PlaneGraph read_graph_file(const std::string& path);
void write_graph_file(const PlaneGraph& g, const std::string& path);

/// Parses "a,b,c" into vertex indices of g. Throws ParseError on unknown ids.
std::vector<VertexId> parse_vertex_list(const PlaneGraph& g, const std::string& csv);
/// Accepts {"cycle": [...]} or a bare array.
std::vector<VertexId> cycle_from_json(const PlaneGraph& g, const nlohmann::json& doc);

struct DotStyle {
    std::vector<VertexId> highlight_cycle;
    std::vector<VertexId> highlight_vertices;
    std::string graph_name = "G";
};

void write_dot(std::ostream& os, const PlaneGraph& g, const DotStyle& style = {});
std::string to_dot(const PlaneGraph& g, const DotStyle& style = {});

}  // namespace isocycle
