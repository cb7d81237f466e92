#pragma once

#include <string>

#include "lcx/graph.hpp"

namespace lcx {

// Growth-rate constants for the number of maximal independent sets of
// induced subgraphs: an m-vertex induced subgraph of a general graph
// has at most 3^{m/3} of them, and 1.44225^3 > 3; for triangle-free
// graphs the count is at most 2^{m/2}, and 1.41422^2 > 2.  The printed
// decimals are used verbatim.
inline constexpr double kFitGeneral = 1.44225;
inline constexpr double kFitTriangleFree = 1.41422;

enum class FitRule { general, triangle_free, empirical };

std::string to_string(FitRule rule);

// A constant t > 1 "fits" a graph when every m-vertex induced subgraph
// has at most t^m maximal independent sets.
struct FitReport {
    double t = 0.0;
    FitRule rule = FitRule::general;
    int n = 0;
    double predicted_work = 0.0;  // (1+t)^n - 1
};

// Picks the fit constant by triangle-freeness.
FitReport fit_constant(const Graph& g);

// (1+t)^n - 1, the closed form of sum_{k=1..n} C(n,k) t^k.
double predicted_work(int n, double t);

// Exhaustively checks that every nonempty subset M of V spans at most
// t^|M| maximal independent sets.  The comparison is strict floating
// point with no slack toward acceptance.  Throws BudgetError for
// n > 12.
bool verify_fit_empirical(const Graph& g, double t);

}  // namespace lcx
