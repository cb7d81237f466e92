#include "lcx/dp.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>
#include <string>

#include "lcx/errors.hpp"
#include "lcx/mis.hpp"

namespace lcx {

RestrictedLists restrict_lists(const Instance& inst, int j) {
    if (j < 1 || j > inst.kappa)
        throw std::out_of_range("restrict_lists: level " + std::to_string(j) +
                                " outside [1," + std::to_string(inst.kappa) + "]");
    RestrictedLists out;
    out.level = j;
    out.lists.reserve(inst.lists.size());
    for (const ColorList& list : inst.lists) out.lists.push_back(list.restricted_to(j));
    return out;
}

PreprocessResult preprocess_long_lists(const Instance& inst, LongListRule rule) {
    const int n = inst.graph.n;
    std::vector<bool> removed(static_cast<std::size_t>(n), false);
    PreprocessResult out;

    if (rule == LongListRule::list_at_least_n) {
        for (int v = 0; v < n; ++v) {
            if (inst.lists[static_cast<std::size_t>(v)].size() >= n) {
                removed[static_cast<std::size_t>(v)] = true;
                out.set_aside.push_back(v);
            }
        }
    } else {
        std::vector<int> deg(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = inst.graph.degree(v);
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0; v < n; ++v) {
                if (removed[static_cast<std::size_t>(v)]) continue;
                if (inst.lists[static_cast<std::size_t>(v)].size() <= deg[static_cast<std::size_t>(v)])
                    continue;
                removed[static_cast<std::size_t>(v)] = true;
                out.set_aside.push_back(v);
                changed = true;
                for (int u : inst.graph.neighbors(v))
                    if (!removed[static_cast<std::size_t>(u)]) --deg[static_cast<std::size_t>(u)];
            }
        }
    }

    std::vector<int> new_index(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        if (removed[static_cast<std::size_t>(v)]) continue;
        new_index[static_cast<std::size_t>(v)] = static_cast<int>(out.kept.size());
        out.kept.push_back(v);
    }

    out.reduced.graph = Graph(static_cast<int>(out.kept.size()));
    out.reduced.kappa = inst.kappa;
    out.reduced.lists.reserve(out.kept.size());
    for (int v : out.kept) out.reduced.lists.push_back(inst.lists[static_cast<std::size_t>(v)]);
    for (int v : out.kept)
        for (int u : inst.graph.neighbors(v))
            if (u > v && !removed[static_cast<std::size_t>(u)])
                out.reduced.graph.add_edge(new_index[static_cast<std::size_t>(v)],
                                           new_index[static_cast<std::size_t>(u)]);
    return out;
}

VertexSet color_members(const Instance& inst, int j) {
    VertexSet s;
    for (int v = 0; v < inst.graph.n; ++v)
        if (inst.lists[static_cast<std::size_t>(v)].contains(j)) s.add(v);
    return s;
}

std::pair<Instance, std::vector<int>> compact_palette(const Instance& inst) {
    std::vector<int> used;
    for (const ColorList& list : inst.lists)
        used.insert(used.end(), list.colors.begin(), list.colors.end());
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());

    Instance compact;
    compact.graph = inst.graph;
    compact.kappa = static_cast<int>(used.size());
    compact.lists.reserve(inst.lists.size());
    for (const ColorList& list : inst.lists) {
        ColorList mapped;
        mapped.colors.reserve(list.colors.size());
        for (int c : list.colors) {
            const auto it = std::lower_bound(used.begin(), used.end(), c);
            mapped.colors.push_back(static_cast<int>(it - used.begin()) + 1);
        }
        compact.lists.push_back(std::move(mapped));
    }
    return {std::move(compact), std::move(used)};
}

ColorabilityTable round1_init(const Instance& inst, std::uint64_t* scans) {
    const int n = inst.graph.n;
    ColorabilityTable table(n, 1);

    const VertexSet permits_1 = color_members(inst, 1);
    MisEnumerator enumerator(inst.graph);
    enumerator.for_each(inst.graph.vertices(), [&](VertexSet mis) {
        if (scans) ++*scans;
        const VertexSet marked = mis & permits_1;
        if (!marked.empty()) table.set(marked);
        return true;
    });

    // downward closure: supersets are visited before their subsets
    for_each_subset_desc_cardinality(n, [&](VertexSet w) {
        if (!table.get(w)) return;
        for (int v : w) table.set(w.without(v));
    });
    return table;
}

ColorabilityTable round_update(const Instance& inst, int j, const ColorabilityTable& prev,
                               std::uint64_t* scans) {
    const int n = inst.graph.n;
    assert(j >= 2 && j <= inst.kappa);
    assert(prev.n() == n && prev.round() == j - 1);

    ColorabilityTable next(n, j);
    const VertexSet permits_j = color_members(inst, j);
    MisEnumerator enumerator(inst.graph);

    for_each_subset_desc_cardinality(n, [&](VertexSet w) {
        if (prev.get(w)) {  // colorability never drops when a color is added
            next.set(w);
            return;
        }
        bool colorable = false;
        enumerator.for_each(w, [&](VertexSet mis) {
            if (scans) ++*scans;
            const VertexSet with_j = mis & permits_j;
            // with_j == w is covered too: prev entry of the empty set is 1
            if (!with_j.empty() && prev.get(w - with_j)) {
                colorable = true;
                return false;
            }
            return true;
        });
        if (colorable) next.set(w);
    });
    return next;
}

Coloring reconstruct_coloring(const Instance& inst,
                              const std::vector<ColorabilityTable>& tables) {
    const int n = inst.graph.n;
    const int levels = static_cast<int>(tables.size());
    for (int j = 1; j <= levels; ++j)
        assert(tables[static_cast<std::size_t>(j - 1)].round() == j &&
               tables[static_cast<std::size_t>(j - 1)].n() == n);
    if (levels == 0 || !tables.back().get(inst.graph.vertices()))
        throw InternalError("reconstruct_coloring requires a satisfied final table");

    MisEnumerator enumerator(inst.graph);
    Coloring f(n);
    VertexSet uncolored = inst.graph.vertices();

    for (int j = levels; j >= 1; --j) {
        const ColorabilityTable& here = tables[static_cast<std::size_t>(j - 1)];
        if (!here.get(uncolored))
            throw InternalError("reconstruction descent lost colorability");
        // skip the level when one color fewer already suffices
        if (j > 1 && tables[static_cast<std::size_t>(j - 2)].get(uncolored)) continue;

        const VertexSet permits_j = color_members(inst, j);
        bool found = false;
        enumerator.for_each(uncolored, [&](VertexSet mis) {
            const VertexSet with_j = mis & permits_j;
            const bool witness =
                (j == 1) ? (with_j == uncolored)
                         : (!with_j.empty() &&
                            tables[static_cast<std::size_t>(j - 2)].get(uncolored - with_j));
            if (!witness) return true;
            for (int v : with_j) f.assign(v, j);
            uncolored = uncolored - with_j;
            found = true;
            return false;
        });
        if (!found)
            throw InternalError("no witness independent set despite a set table entry");
    }
    if (!uncolored.empty()) throw InternalError("reconstruction left vertices uncolored");
    return f;
}

namespace {

// Colors the set-aside vertices in reverse removal order; each sees
// fewer already-colored neighbors than it has permitted colors.
void greedy_finish(const Instance& inst, Coloring& f, const std::vector<int>& set_aside) {
    for (auto it = set_aside.rbegin(); it != set_aside.rend(); ++it) {
        const int v = *it;
        int picked = 0;
        for (int c : inst.lists[static_cast<std::size_t>(v)].colors) {
            bool used = false;
            for (int u : inst.graph.neighbors(v)) {
                if (f.at(u) == c) {
                    used = true;
                    break;
                }
            }
            if (!used) {
                picked = c;
                break;
            }
        }
        if (picked == 0) throw InternalError("greedy finish found no available color");
        f.assign(v, picked);
    }
}

}  // namespace

SolveResult solve(const Instance& inst, const SolveOptions& opts) {
    SolveResult result;
    SolveStats& st = result.stats;
    st.n = inst.graph.n;
    st.kappa = inst.kappa;

    PreprocessResult pre = preprocess_long_lists(inst, opts.long_list_rule);
    const Instance& reduced = pre.reduced;
    st.reduced_n = reduced.graph.n;

    const FitReport fit = fit_constant(reduced.graph);
    st.t = fit.t;
    st.rule = fit.rule;
    st.predicted_work = fit.predicted_work;

    auto [compact, palette] = compact_palette(reduced);
    st.kappa_reduced = compact.kappa;

    if (reduced.graph.n == 0) {  // everything was set aside (or n == 0)
        Coloring f(inst.graph.n);
        greedy_finish(inst, f, pre.set_aside);
        if (inst.graph.n > 0 && !validate_coloring(inst, f).ok)
            throw InternalError("greedy finish produced an invalid coloring");
        result.status = Status::sat;
        result.coloring = std::move(f);
        return result;
    }

    for (const ColorList& list : reduced.lists) {
        if (list.empty()) {  // no color can ever be assigned
            result.status = Status::unsat;
            return result;
        }
    }

    std::vector<ColorabilityTable> tables;
    tables.reserve(static_cast<std::size_t>(compact.kappa));
    for (int j = 1; j <= compact.kappa; ++j) {
        std::uint64_t scans = 0;
        tables.push_back(j == 1 ? round1_init(compact, &scans)
                                : round_update(compact, j, tables.back(), &scans));
        st.round_scans.push_back(scans);
    }
    st.total_scans = std::accumulate(st.round_scans.begin(), st.round_scans.end(),
                                     std::uint64_t{0});

    if (!tables.back().get(compact.graph.vertices())) {
        result.status = Status::unsat;
        return result;
    }

    const Coloring compact_coloring = reconstruct_coloring(compact, tables);
    Coloring f(inst.graph.n);
    for (int i = 0; i < reduced.graph.n; ++i)
        f.assign(pre.kept[static_cast<std::size_t>(i)],
                 palette[static_cast<std::size_t>(compact_coloring.at(i) - 1)]);
    greedy_finish(inst, f, pre.set_aside);

    if (!validate_coloring(inst, f).ok)
        throw InternalError("solve produced an invalid coloring");
    result.status = Status::sat;
    result.coloring = std::move(f);
    return result;
}

}  // namespace lcx
