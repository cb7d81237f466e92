#include "lcx/bounds.hpp"

#include <cmath>

#include "lcx/errors.hpp"
#include "lcx/mis.hpp"

namespace lcx {

std::string to_string(FitRule rule) {
    switch (rule) {
        case FitRule::general: return "general";
        case FitRule::triangle_free: return "triangle-free";
        case FitRule::empirical: return "empirical";
    }
    return "general";
}

FitReport fit_constant(const Graph& g) {
    FitReport report;
    report.n = g.n;
    if (is_triangle_free(g)) {
        report.t = kFitTriangleFree;
        report.rule = FitRule::triangle_free;
    } else {
        report.t = kFitGeneral;
        report.rule = FitRule::general;
    }
    report.predicted_work = predicted_work(g.n, report.t);
    return report;
}

double predicted_work(int n, double t) { return std::pow(1.0 + t, n) - 1.0; }

bool verify_fit_empirical(const Graph& g, double t) {
    constexpr int kGuard = 12;
    if (g.n > kGuard)
        throw BudgetError("verify_fit_empirical: n = " + std::to_string(g.n) +
                          " exceeds the exhaustive-check guard " + std::to_string(kGuard));
    bool fits = true;
    for_each_submask(g.vertices(), [&](VertexSet m) {
        if (!fits || m.empty()) return;
        const double budget = std::pow(t, m.count());
        if (static_cast<double>(count_mis(g, m)) > budget) fits = false;
    });
    return fits;
}

}  // namespace lcx
