#include "lcx/graph.hpp"

namespace lcx {

bool is_triangle_free(const Graph& g) {
    for (int u = 0; u < g.n; ++u) {
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            // any common neighbor above v closes a triangle u-v-w
            const VertexSet common = g.neighbors(u) & g.neighbors(v);
            if ((common - VertexSet::full(v + 1)) != VertexSet()) return false;
        }
    }
    return true;
}

}  // namespace lcx
