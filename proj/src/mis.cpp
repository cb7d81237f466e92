#include "lcx/mis.hpp"

namespace lcx {

std::vector<VertexSet> collect_mis(const Graph& g, VertexSet w) {
    std::vector<VertexSet> sets;
    enumerate_mis(g, w, [&](VertexSet s) {
        sets.push_back(s);
        return true;
    });
    return sets;
}

std::uint64_t count_mis(const Graph& g, VertexSet w) {
    std::uint64_t count = 0;
    enumerate_mis(g, w, [&](VertexSet) {
        ++count;
        return true;
    });
    return count;
}

}  // namespace lcx
