#pragma once

#include <vector>

#include "lcx/instance.hpp"

namespace lcx {

// Caps on the exhaustive reference computations below.
struct OracleBudget {
    int max_colorable_n = 12;  // backtracking colorability check
    int max_mis_n = 16;        // subset-exhaustive MIS enumeration
};

// True iff G[w] admits a proper coloring with f(v) drawn from lists[v].
// Plain backtracking over the vertices of w in ascending index; shares
// no machinery with the solver.  Throws BudgetError when |w| exceeds
// the budget.
bool brute_force_colorable(const Instance& inst, VertexSet w,
                           const std::vector<ColorList>& lists,
                           const OracleBudget& budget = {});

// All inclusion-maximal independent sets of G[w], found by scanning
// every subset of w.  Throws BudgetError when |w| exceeds the budget.
std::vector<VertexSet> brute_force_mis(const Graph& g, VertexSet w,
                                       const OracleBudget& budget = {});

}  // namespace lcx
