#include "lcx/instance.hpp"

#include <charconv>
#include <sstream>

#include "lcx/errors.hpp"

namespace lcx {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

int parse_int(std::string_view tok, int line_no, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line_no, std::string("expected an integer for ") + what + ", got '" +
                                      std::string(tok) + "'");
    return value;
}

}  // namespace

Instance parse_instance(std::string_view text, const ParseOptions& opts) {
    Instance inst;
    bool header_seen = false;
    std::vector<bool> list_seen;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        auto tokens = split_tokens(line);
        if (tokens.empty()) continue;
        if (tokens[0] == "c") continue;

        if (tokens[0] == "p") {
            if (header_seen) throw ParseError(line_no, "duplicate header line");
            if (tokens.size() != 5 || tokens[1] != "lc")
                throw ParseError(line_no, "malformed header, expected 'p lc <n> <m> <kappa>'");
            const int n = parse_int(tokens[2], line_no, "n");
            const int m = parse_int(tokens[3], line_no, "m");
            const int kappa = parse_int(tokens[4], line_no, "kappa");
            if (n < 0) throw ParseError(line_no, "vertex count must be nonnegative");
            if (m < 0) throw ParseError(line_no, "edge count must be nonnegative");
            if (kappa < 0) throw ParseError(line_no, "palette size must be nonnegative");
            const int ceiling = std::min(opts.max_n, VertexSet::kMaxVertices);
            if (n > ceiling)
                throw ParseError(line_no, "vertex count " + std::to_string(n) +
                                              " exceeds the configured maximum " +
                                              std::to_string(ceiling));
            inst.graph = Graph(n);
            inst.kappa = kappa;
            list_seen.assign(static_cast<std::size_t>(n), false);
            header_seen = true;
            continue;
        }

        if (!header_seen) throw ParseError(line_no, "header line must precede all other lines");

        auto parse_vertex = [&](std::string_view tok) {
            const int v = parse_int(tok, line_no, "vertex");
            if (v < 1 || v > inst.graph.n)
                throw ParseError(line_no, "vertex " + std::to_string(v) + " out of range [1," +
                                              std::to_string(inst.graph.n) + "]");
            return v - 1;
        };
        auto parse_color = [&](std::string_view tok) {
            const int c = parse_int(tok, line_no, "color");
            if (c < 1 || c > inst.kappa)
                throw ParseError(line_no, "color " + std::to_string(c) + " out of range [1," +
                                              std::to_string(inst.kappa) + "]");
            return c;
        };

        if (tokens[0] == "e") {
            if (tokens.size() != 3) throw ParseError(line_no, "expected 'e <u> <v>'");
            const int u = parse_vertex(tokens[1]);
            const int v = parse_vertex(tokens[2]);
            if (u == v)
                throw ParseError(line_no, "self-loop at vertex " + std::to_string(u + 1));
            inst.graph.add_edge(u, v);
        } else if (tokens[0] == "l" || tokens[0] == "f") {
            if (tokens.size() < 2) throw ParseError(line_no, "expected a vertex after 'l'/'f'");
            if (tokens[0] == "f" && tokens.size() != 3)
                throw ParseError(line_no, "expected 'f <v> <c>'");
            const int v = parse_vertex(tokens[1]);
            if (list_seen[static_cast<std::size_t>(v)])
                throw ParseError(line_no,
                                 "second list for vertex " + std::to_string(v + 1));
            std::vector<int> colors;
            for (std::size_t i = 2; i < tokens.size(); ++i) colors.push_back(parse_color(tokens[i]));
            if (inst.lists.size() < static_cast<std::size_t>(inst.graph.n))
                inst.lists.resize(static_cast<std::size_t>(inst.graph.n));
            inst.lists[static_cast<std::size_t>(v)] = ColorList(std::move(colors));
            list_seen[static_cast<std::size_t>(v)] = true;
        } else {
            throw ParseError(line_no, "unknown line type '" + std::string(tokens[0]) + "'");
        }
    }

    if (!header_seen) throw ParseError(line_no, "missing header line");

    // default list: the full palette
    if (inst.lists.size() < static_cast<std::size_t>(inst.graph.n))
        inst.lists.resize(static_cast<std::size_t>(inst.graph.n));
    std::vector<int> full(static_cast<std::size_t>(inst.kappa));
    for (int c = 1; c <= inst.kappa; ++c) full[static_cast<std::size_t>(c - 1)] = c;
    for (int v = 0; v < inst.graph.n; ++v)
        if (!list_seen[static_cast<std::size_t>(v)])
            inst.lists[static_cast<std::size_t>(v)].colors = full;

    return inst;
}

std::string format_instance(const Instance& inst) {
    std::ostringstream out;
    out << "p lc " << inst.graph.n << ' ' << inst.graph.edge_count() << ' ' << inst.kappa << '\n';
    for (int u = 0; u < inst.graph.n; ++u)
        for (int v : inst.graph.neighbors(u))
            if (u < v) out << "e " << (u + 1) << ' ' << (v + 1) << '\n';
    for (int v = 0; v < inst.graph.n; ++v) {
        out << "l " << (v + 1);
        for (int c : inst.lists[static_cast<std::size_t>(v)].colors) out << ' ' << c;
        out << '\n';
    }
    return out.str();
}

ValidationReport validate_coloring(const Instance& inst, const Coloring& f) {
    if (static_cast<int>(f.color.size()) != inst.graph.n || !f.total())
        throw std::invalid_argument("coloring is not total on the instance's vertices");

    ValidationReport report;
    for (int v = 0; v < inst.graph.n; ++v) {
        if (!inst.lists[static_cast<std::size_t>(v)].contains(f.at(v))) {
            report.violations.push_back(
                {Violation::Kind::color_not_in_list, -1, v, f.at(v)});
        }
        for (int u : inst.graph.neighbors(v)) {
            if (u > v && f.at(u) == f.at(v))
                report.violations.push_back(
                    {Violation::Kind::monochromatic_edge, v, u, f.at(v)});
        }
    }
    report.ok = report.violations.empty();
    return report;
}

}  // namespace lcx
