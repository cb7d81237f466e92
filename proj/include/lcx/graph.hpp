#pragma once

#include <cassert>
#include <vector>

#include "lcx/vertex_set.hpp"

namespace lcx {

// Simple undirected graph on vertices 0..n-1, adjacency kept as one
// VertexSet per vertex.  No self-loops; adjacency stays symmetric.
struct Graph {
    int n = 0;
    std::vector<VertexSet> adj;

    Graph() = default;
    explicit Graph(int order) : n(order), adj(static_cast<std::size_t>(order)) {
        assert(order >= 0 && order <= VertexSet::kMaxVertices);
    }

    // Idempotent: adding an existing edge changes nothing.
    void add_edge(int u, int v) {
        assert(u != v);
        assert(u >= 0 && u < n && v >= 0 && v < n);
        adj[static_cast<std::size_t>(u)].add(v);
        adj[static_cast<std::size_t>(v)].add(u);
    }

    bool has_edge(int u, int v) const { return adj[static_cast<std::size_t>(u)].contains(v); }
    int degree(int v) const { return adj[static_cast<std::size_t>(v)].count(); }
    VertexSet neighbors(int v) const { return adj[static_cast<std::size_t>(v)]; }
    VertexSet vertices() const { return VertexSet::full(n); }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < n; ++v) twice += degree(v);
        return twice / 2;
    }
};

// True iff no three vertices are mutually adjacent.
bool is_triangle_free(const Graph& g);

}  // namespace lcx
