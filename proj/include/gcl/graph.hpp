// gcl/graph.hpp -- simple undirected graphs with bitset adjacency rows and the
// exact set/degree primitives used by every other component.
#pragma once

#include "gcl/rational.hpp"
#include "gcl/vertex_set.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gcl {

/// Immutable-by-convention simple graph on vertices 0..n-1. Mutation is only
/// add_edge during construction; all queries are const and thread-safe.
class Graph {
public:
    explicit Graph(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("Graph: need n >= 1");
        adj_.assign(n, VertexSet(n));
    }

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    static Graph complete(int n) {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
        return g;
    }

    void add_edge(int u, int v) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw std::out_of_range("Graph: edge endpoint outside 0..n-1");
        if (u == v) throw std::invalid_argument("Graph: self-loop rejected");
        if (adj_[u].contains(v)) throw std::invalid_argument("Graph: duplicate edge rejected");
        adj_[u].insert(v);
        adj_[v].insert(u);
        ++m_;
    }

    bool has_edge(int u, int v) const { return adj_[u].contains(v); }
    int vertex_count() const { return n_; }
    long edge_count() const { return m_; }
    const VertexSet& neighbors(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
        return adj_[v];
    }
    int degree(int v) const { return neighbors(v).count(); }

    VertexSet all_vertices() const { return VertexSet::full(n_); }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(m_);
        for (int u = 0; u < n_; ++u)
            adj_[u].for_each([&](int v) {
                if (u < v) out.emplace_back(u, v);
            });
        return out;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_;
    long m_ = 0;
    std::vector<VertexSet> adj_;
};

inline void require_same_universe(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.vertex_count())
        throw std::invalid_argument("vertex set universe does not match graph");
}

/// |E(S)|: edges with both endpoints in s.
inline long edge_count_within(const Graph& g, const VertexSet& s) {
    require_same_universe(g, s);
    long twice = 0;
    s.for_each([&](int v) { twice += g.neighbors(v).intersection_count(s); });
    return twice / 2;
}

/// |E(S,T)|: edges with one endpoint in s and one in t, each edge counted once.
/// With s == t this equals edge_count_within(g, s).
inline long edge_count_between(const Graph& g, const VertexSet& s, const VertexSet& t) {
    require_same_universe(g, s);
    require_same_universe(g, t);
    long from_s = 0;
    s.for_each([&](int v) { from_s += g.neighbors(v).intersection_count(t); });
    return from_s - edge_count_within(g, s & t);
}

/// |N(v) ∩ s|; membership of v itself in s is irrelevant (no self-loops).
inline int degree_in(const Graph& g, int v, const VertexSet& s) {
    require_same_universe(g, s);
    return g.neighbors(v).intersection_count(s);
}

/// S_{↑v} = members of s with strictly more neighbours in s than v has.
inline VertexSet upset(const Graph& g, const VertexSet& s, int v) {
    require_same_universe(g, s);
    int dv = degree_in(g, v, s);
    VertexSet out(s.universe());
    s.for_each([&](int u) {
        if (g.neighbors(u).intersection_count(s) > dv) out.insert(u);
    });
    return out;
}

/// |E(S)| / C(|S|,2), exactly; 0 for |S| <= 1.
inline Rat edge_density(const Graph& g, const VertexSet& s) {
    long k = s.count();
    if (k <= 1) return Rat(0);
    Rat d(Int(2 * edge_count_within(g, s)), Int(k) * Int(k - 1));
    d.canonicalize();
    return d;
}

inline bool is_regular(const Graph& g, int d) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != d) return false;
    return true;
}

} // namespace gcl
