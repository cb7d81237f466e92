#include "lcx/oracle.hpp"

#include <string>

#include "lcx/errors.hpp"

namespace lcx {

namespace {

bool extend(const Instance& inst, const std::vector<ColorList>& lists,
            const std::vector<int>& order, std::size_t next, std::vector<int>& chosen) {
    if (next == order.size()) return true;
    const int v = order[next];
    for (int c : lists[static_cast<std::size_t>(v)].colors) {
        bool clashes = false;
        for (std::size_t i = 0; i < next; ++i) {
            if (chosen[i] == c && inst.graph.has_edge(order[i], v)) {
                clashes = true;
                break;
            }
        }
        if (clashes) continue;
        chosen[next] = c;
        if (extend(inst, lists, order, next + 1, chosen)) return true;
    }
    return false;
}

}  // namespace

bool brute_force_colorable(const Instance& inst, VertexSet w,
                           const std::vector<ColorList>& lists, const OracleBudget& budget) {
    if (w.count() > budget.max_colorable_n)
        throw BudgetError("brute_force_colorable: |w| = " + std::to_string(w.count()) +
                          " exceeds budget " + std::to_string(budget.max_colorable_n));
    std::vector<int> order;
    for (int v : w) order.push_back(v);
    std::vector<int> chosen(order.size(), 0);
    return extend(inst, lists, order, 0, chosen);
}

std::vector<VertexSet> brute_force_mis(const Graph& g, VertexSet w, const OracleBudget& budget) {
    if (w.count() > budget.max_mis_n)
        throw BudgetError("brute_force_mis: |w| = " + std::to_string(w.count()) +
                          " exceeds budget " + std::to_string(budget.max_mis_n));
    std::vector<VertexSet> result;
    for_each_submask(w, [&](VertexSet s) {
        for (int v : s)
            if (g.neighbors(v).intersects(s)) return;  // not independent
        for (int u : w - s)
            if (!g.neighbors(u).intersects(s)) return;  // u could still join
        result.push_back(s);
    });
    return result;
}

}  // namespace lcx
