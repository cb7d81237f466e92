#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lcx/graph.hpp"

namespace lcx {

// Streams the inclusion-maximal independent sets of induced subgraphs
// G[w].  Maximal independent sets of G[w] are exactly the maximal
// cliques of the complement of G restricted to w, so this runs
// pivoted Bron-Kerbosch over precomputed complement adjacency.
//
// Emission order is deterministic for a fixed graph: the pivot is the
// lowest-index vertex maximizing its candidate cover, and candidates
// are explored in ascending vertex index.
class MisEnumerator {
public:
    explicit MisEnumerator(const Graph& g) : comp_adj_(static_cast<std::size_t>(g.n)) {
        const VertexSet all = g.vertices();
        for (int v = 0; v < g.n; ++v)
            comp_adj_[static_cast<std::size_t>(v)] = (all - g.neighbors(v)).without(v);
    }

    // Calls emit(S) for every maximal independent set S of G[w]; for
    // w = {} that is the single set {}.  emit returns false to stop
    // early; for_each then returns false as well.
    template <typename F>
    bool for_each(VertexSet w, F&& emit) const {
        return expand(VertexSet(), w, VertexSet(), emit);
    }

private:
    template <typename F>
    bool expand(VertexSet grown, VertexSet cand_pool, VertexSet excluded, F& emit) const {
        if (cand_pool.empty() && excluded.empty()) return emit(grown);

        int pivot = -1;
        int best = -1;
        for (int u : cand_pool | excluded) {
            const int covered = (cand_pool & comp_adj_[static_cast<std::size_t>(u)]).count();
            if (covered > best) {
                best = covered;
                pivot = u;
            }
        }

        const VertexSet branch = cand_pool - comp_adj_[static_cast<std::size_t>(pivot)];
        for (int v : branch) {
            const VertexSet nv = comp_adj_[static_cast<std::size_t>(v)];
            if (!expand(grown.with(v), cand_pool & nv, excluded & nv, emit)) return false;
            cand_pool.remove(v);
            excluded.add(v);
        }
        return true;
    }

    std::vector<VertexSet> comp_adj_;
};

// One-shot convenience wrapper around MisEnumerator::for_each.
template <typename F>
bool enumerate_mis(const Graph& g, VertexSet w, F&& emit) {
    return MisEnumerator(g).for_each(w, std::forward<F>(emit));
}

// All maximal independent sets of G[w] in emission order.
std::vector<VertexSet> collect_mis(const Graph& g, VertexSet w);

// Number of maximal independent sets of G[w].
std::uint64_t count_mis(const Graph& g, VertexSet w);

}  // namespace lcx
