#pragma once

#include <cstdint>
#include <vector>

#include "lcx/bounds.hpp"
#include "lcx/instance.hpp"

namespace lcx {

// One bit per subset W of the (reduced) vertex set, addressed directly
// by the subset's bit encoding.  After round j the contract is:
// entry(W) = 1 iff G[W] is list-colorable with the lists restricted to
// the colors 1..j.  The entry for the empty set is always 1.
//
// Colorability is hereditary, so a finished table is downward closed:
// entry(W) <= entry(W \ {w}) for every w in W.
class ColorabilityTable {
public:
    ColorabilityTable(int n, int round)
        : n_(n), round_(round),
          words_((std::size_t{1} << n) / 64 + 1, 0) {
        set(VertexSet());  // empty graph is always colorable
    }

    int n() const { return n_; }
    int round() const { return round_; }

    bool get(VertexSet w) const {
        return (words_[w.bits() >> 6] >> (w.bits() & 63u)) & 1u;
    }
    void set(VertexSet w) { words_[w.bits() >> 6] |= std::uint64_t{1} << (w.bits() & 63u); }

private:
    int n_;
    int round_;
    std::vector<std::uint64_t> words_;
};

// Per-vertex lists cut down to the colors 1..level.
struct RestrictedLists {
    int level = 0;
    std::vector<ColorList> lists;
};

// Throws std::out_of_range unless 1 <= j <= kappa.
RestrictedLists restrict_lists(const Instance& inst, int j);

enum class LongListRule {
    list_at_least_n,     // one pass: set aside v when |L(v)| >= n
    list_above_degree,   // iterate: set aside v when |L(v)| > deg(v) in the remaining graph
};

struct PreprocessResult {
    Instance reduced;
    std::vector<int> set_aside;  // original indices, in removal order
    std::vector<int> kept;       // reduced index -> original index, ascending
};

// Removes vertices whose lists are long enough that a color for them
// always remains after everything else is colored; they are colored
// greedily afterwards in reverse removal order.
PreprocessResult preprocess_long_lists(const Instance& inst,
                                       LongListRule rule = LongListRule::list_at_least_n);

// The vertices whose list contains color j.
VertexSet color_members(const Instance& inst, int j);

// Relabels the palette to the colors that actually occur in the lists,
// preserving their relative order; lists map to ranks 1..kappa'.
// Returns the compacted instance and the occurring colors in rank
// order (rank j corresponds to original color colors_used[j-1]).
std::pair<Instance, std::vector<int>> compact_palette(const Instance& inst);

// Builds the round-1 table: (1) all entries 0, (2) for every maximal
// independent set I of G, mark the members of I that permit color 1,
// (3) close downward.  Afterwards entry(W) = 1 iff W is independent
// and every member permits color 1.  Each maximal independent set
// examined in step 2 adds one to *scans (when given).
ColorabilityTable round1_init(const Instance& inst, std::uint64_t* scans = nullptr);

// Advances the table from round j-1 to round j: entry(W) becomes 1 iff
// it already was, or some maximal independent set I of G[W] whose
// color-j members Ij satisfy Ij = W or prev(W \ Ij) = 1.  Subsets are
// visited in descending cardinality; reads touch only prev.  Every
// (W, I) pair examined adds one to *scans (when given).
ColorabilityTable round_update(const Instance& inst, int j, const ColorabilityTable& prev,
                               std::uint64_t* scans = nullptr);

// Rebuilds a coloring from the retained tables by walking the levels
// kappa'..1, re-enumerating witnesses in deterministic order.
// Requires tables[j-1] to be the round-j table and the final entry for
// the full vertex set to be 1.  Throws InternalError when no witness
// exists despite a set entry (a solver bug).
Coloring reconstruct_coloring(const Instance& inst,
                              const std::vector<ColorabilityTable>& tables);

enum class Status { sat, unsat };

struct SolveStats {
    int n = 0;          // original order
    int reduced_n = 0;  // order after long-list preprocessing
    int kappa = 0;
    int kappa_reduced = 0;  // palette size after compaction = rounds run
    std::vector<std::uint64_t> round_scans;
    std::uint64_t total_scans = 0;
    double t = 0.0;  // fit constant of the reduced graph
    FitRule rule = FitRule::general;
    double predicted_work = 0.0;  // (1+t)^{reduced_n} - 1
};

struct SolveResult {
    Status status = Status::unsat;
    Coloring coloring;  // total when sat
    SolveStats stats;
};

struct SolveOptions {
    LongListRule long_list_rule = LongListRule::list_at_least_n;
};

// Full pipeline: preprocessing, palette compaction, one table per
// round, reconstruction, greedy finish for the set-aside vertices.
SolveResult solve(const Instance& inst, const SolveOptions& opts = {});

}  // namespace lcx
