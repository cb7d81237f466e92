#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "lcx/graph.hpp"

namespace lcx {

// Permitted colors of one vertex, a subset of the palette [1,kappa].
// Kept sorted ascending without duplicates.
struct ColorList {
    std::vector<int> colors;

    ColorList() = default;
    ColorList(std::initializer_list<int> cs) : colors(cs) { normalize(); }
    explicit ColorList(std::vector<int> cs) : colors(std::move(cs)) { normalize(); }

    bool contains(int c) const { return std::binary_search(colors.begin(), colors.end(), c); }
    int size() const { return static_cast<int>(colors.size()); }
    bool empty() const { return colors.empty(); }

    // L restricted to the colors 1..j.
    ColorList restricted_to(int j) const {
        ColorList r;
        auto it = std::upper_bound(colors.begin(), colors.end(), j);
        r.colors.assign(colors.begin(), it);
        return r;
    }

    bool operator==(const ColorList& o) const { return colors == o.colors; }

private:
    void normalize() {
        std::sort(colors.begin(), colors.end());
        colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
    }
};

// A list-coloring problem: graph, palette size, one color list per vertex.
struct Instance {
    Graph graph;
    int kappa = 0;
    std::vector<ColorList> lists;
};

// Vertex -> color assignment; 0 marks an unassigned vertex.
struct Coloring {
    std::vector<int> color;

    Coloring() = default;
    explicit Coloring(int n) : color(static_cast<std::size_t>(n), 0) {}

    int at(int v) const { return color[static_cast<std::size_t>(v)]; }
    void assign(int v, int c) { color[static_cast<std::size_t>(v)] = c; }
    bool total() const {
        return std::none_of(color.begin(), color.end(), [](int c) { return c == 0; });
    }
};

struct Violation {
    enum class Kind { monochromatic_edge, color_not_in_list };
    Kind kind;
    int u = -1;  // edge endpoint, unused for list violations
    int v = -1;
    int color = 0;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
};

struct ParseOptions {
    int max_n = 26;  // hard ceiling is VertexSet::kMaxVertices
};

// Parses the line-oriented instance format:
//   c <comment>
//   p lc <n> <m> <kappa>      header, first non-comment line, exactly once
//   e <u> <v>                 edge, 1-based, u != v; duplicates collapse
//   l <v> <c1> <c2> ...       explicit color list
//   f <v> <c>                 precoloring shorthand for "l <v> <c>"
// Vertices without an l/f line get the full list [1,kappa].
// Throws ParseError on malformed input.
Instance parse_instance(std::string_view text, const ParseOptions& opts = {});

// Inverse of parse_instance up to instance equivalence (same edges,
// same lists); every list is emitted explicitly.
std::string format_instance(const Instance& inst);

// Checks that every edge is bichromatic and every color is permitted.
// Throws std::invalid_argument if f is not total.
ValidationReport validate_coloring(const Instance& inst, const Coloring& f);

}  // namespace lcx
