#include "isocycle/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace isocycle {

namespace {

std::string id_string(const nlohmann::json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw Error(ErrorKind::ParseError, "vertex identifiers must be strings or integers");
}

std::string quote_dot(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    out += '"';
    return out;
}

}  // namespace

PlaneGraph graph_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("rotation")) {
        throw Error(ErrorKind::ParseError, "graph JSON needs \"vertices\" and \"rotation\"");
    }
    const auto& verts = doc.at("vertices");
    const auto& rot = doc.at("rotation");
    if (!verts.is_array() || !rot.is_object()) {
        throw Error(ErrorKind::ParseError, "\"vertices\" must be an array, \"rotation\" an object");
    }
    std::vector<std::string> names;
    std::map<std::string, VertexId> index;
    for (const auto& v : verts) {
        std::string name = id_string(v);
        if (index.count(name)) throw Error(ErrorKind::ParseError, "duplicate vertex " + name);
        index[name] = static_cast<VertexId>(names.size());
        names.push_back(std::move(name));
    }
    auto lookup = [&index](const std::string& name) {
        auto it = index.find(name);
        if (it == index.end()) throw Error(ErrorKind::ParseError, "unknown vertex " + name);
        return it->second;
    };
    std::vector<std::vector<VertexId>> rotation(names.size());
    for (auto it = rot.begin(); it != rot.end(); ++it) {
        VertexId v = lookup(it.key());
        if (!it.value().is_array()) {
            throw Error(ErrorKind::ParseError, "rotation of " + it.key() + " must be an array");
        }
        for (const auto& w : it.value()) rotation[v].push_back(lookup(id_string(w)));
    }
    std::optional<std::vector<VertexId>> outer;
    if (doc.contains("outer_face") && !doc.at("outer_face").is_null()) {
        std::vector<VertexId> face;
        for (const auto& w : doc.at("outer_face")) face.push_back(lookup(id_string(w)));
        outer = std::move(face);
    }
    return PlaneGraph::build(std::move(names), std::move(rotation), std::move(outer));
}

nlohmann::json graph_to_json(const PlaneGraph& g) {
    nlohmann::json doc;
    doc["vertices"] = g.names();
    nlohmann::json rot = nlohmann::json::object();
    for (int v = 0; v < g.vertex_count(); ++v) {
        nlohmann::json list = nlohmann::json::array();
        for (VertexId w : g.rotation(v)) list.push_back(g.name(w));
        rot[g.name(v)] = std::move(list);
    }
    doc["rotation"] = std::move(rot);
    nlohmann::json outer = nlohmann::json::array();
    for (VertexId v : g.face_vertices(g.outer_face())) outer.push_back(g.name(v));
    doc["outer_face"] = std::move(outer);
    return doc;
}

PlaneGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, path + ": " + e.what());
    }
    return graph_from_json(doc);
}

void write_graph_file(const PlaneGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
    out << graph_to_json(g).dump(2) << '\n';
}

std::vector<VertexId> parse_vertex_list(const PlaneGraph& g, const std::string& csv) {
    std::vector<VertexId> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (item.empty()) continue;
        auto v = g.find(item);
        if (!v) throw Error(ErrorKind::ParseError, "unknown vertex " + item);
        out.push_back(*v);
    }
    return out;
}

std::vector<VertexId> cycle_from_json(const PlaneGraph& g, const nlohmann::json& doc) {
    const nlohmann::json& list = doc.is_object() ? doc.at("cycle") : doc;
    if (!list.is_array()) throw Error(ErrorKind::ParseError, "cycle must be an array");
    std::vector<VertexId> out;
    for (const auto& item : list) {
        auto v = g.find(id_string(item));
        if (!v) throw Error(ErrorKind::ParseError, "unknown vertex " + id_string(item));
        out.push_back(*v);
    }
    return out;
}

void write_dot(std::ostream& os, const PlaneGraph& g, const DotStyle& style) {
    std::set<Edge> cycle_edges;
    const auto& cyc = style.highlight_cycle;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        cycle_edges.insert(Edge(cyc[i], cyc[(i + 1) % cyc.size()]));
    }
    std::set<VertexId> on_cycle(cyc.begin(), cyc.end());
    std::set<VertexId> marked(style.highlight_vertices.begin(), style.highlight_vertices.end());

    os << "graph " << quote_dot(style.graph_name) << " {\n";
    os << "  node [shape=circle, fontsize=10];\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        os << "  " << quote_dot(g.name(v));
        if (marked.count(v)) {
            os << " [style=filled, fillcolor=orange]";
        } else if (on_cycle.count(v)) {
            os << " [style=filled, fillcolor=lightblue]";
        }
        os << ";\n";
    }
    for (const Edge& e : g.edges()) {
        os << "  " << quote_dot(g.name(e.u)) << " -- " << quote_dot(g.name(e.v));
        if (cycle_edges.count(e)) os << " [penwidth=3, color=blue]";
        os << ";\n";
    }
    os << "}\n";
}

std::string to_dot(const PlaneGraph& g, const DotStyle& style) {
    std::ostringstream os;
    write_dot(os, g, style);
    return os.str();
}

}  // namespace isocycle
