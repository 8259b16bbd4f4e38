// gcl/io.hpp -- the shared edge-list text format and JSON helpers.
//
// Edge-list format: first line "n m", then m lines "u v" with 0-based
// endpoints. Duplicate edges and self-loops are rejected on read and can
// never be produced on write.
#pragma once

#include "gcl/graph.hpp"

#include <json.hpp>

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace gcl {

inline void write_edge_list(std::ostream& os, const Graph& g) {
    os << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

inline std::string edge_list_string(const Graph& g) {
    std::ostringstream ss;
    write_edge_list(ss, g);
    return ss.str();
}

inline Graph read_edge_list(std::istream& is) {
    long n = -1, m = -1;
    if (!(is >> n >> m)) throw std::runtime_error("edge list: missing 'n m' header");
    if (n < 1) throw std::runtime_error("edge list: need n >= 1");
    if (m < 0) throw std::runtime_error("edge list: negative edge count");
    Graph g((int)n);
    for (long i = 0; i < m; ++i) {
        long u, v;
        if (!(is >> u >> v))
            throw std::runtime_error("edge list: expected " + std::to_string(m) +
                                     " edges, got " + std::to_string(i));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::runtime_error("edge list: endpoint out of range at edge " +
                                     std::to_string(i));
        g.add_edge((int)u, (int)v); // rejects self-loops and duplicates
    }
    return g;
}

inline Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_edge_list(in);
}

inline void save_graph(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    write_edge_list(out, g);
}

inline nlohmann::json set_to_json(const VertexSet& s) {
    return nlohmann::json(s.to_vector()); // to_vector is sorted ascending
}

inline VertexSet set_from_json(const nlohmann::json& j, int n) {
    VertexSet s(n);
    for (const auto& v : j) s.insert(v.get<int>());
    return s;
}

} // namespace gcl
