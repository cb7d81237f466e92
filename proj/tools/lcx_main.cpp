#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lcx/bounds.hpp"
#include "lcx/dp.hpp"
#include "lcx/errors.hpp"
#include "lcx/instance.hpp"
#include "lcx/mis.hpp"
#include "lcx/oracle.hpp"

namespace {

constexpr int kExitSat = 0;
constexpr int kExitUnsat = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string format_double(const char* fmt, double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, x);
    return buf;
}

void print_stats(std::ostream& out, const lcx::SolveStats& st) {
    out << "n " << st.n << '\n'
        << "reduced_n " << st.reduced_n << '\n'
        << "kappa " << st.kappa << '\n'
        << "kappa_reduced " << st.kappa_reduced << '\n'
        << "rule " << lcx::to_string(st.rule) << '\n'
        << "t " << format_double("%.5f", st.t) << '\n'
        << "predicted_work " << format_double("%.10g", st.predicted_work) << '\n';
    for (std::size_t j = 0; j < st.round_scans.size(); ++j)
        out << "round_scans " << (j + 1) << ' ' << st.round_scans[j] << '\n';
    out << "total_scans " << st.total_scans << '\n';
}

int run_solve(const lcx::Instance& inst, bool stats, bool check_oracle,
              lcx::LongListRule rule) {
    lcx::SolveOptions opts;
    opts.long_list_rule = rule;
    const lcx::SolveResult result = lcx::solve(inst, opts);

    if (check_oracle) {
        const lcx::OracleBudget budget;
        if (inst.graph.n <= budget.max_colorable_n) {
            const bool expected =
                lcx::brute_force_colorable(inst, inst.graph.vertices(), inst.lists, budget);
            if (expected != (result.status == lcx::Status::sat)) {
                std::cerr << "error: decision disagrees with the brute-force check\n";
                return kExitInternal;
            }
        } else {
            std::cerr << "note: oracle check skipped, n = " << inst.graph.n
                      << " exceeds the budget " << budget.max_colorable_n << '\n';
        }
    }
    if (stats) print_stats(std::cerr, result.stats);

    if (result.status == lcx::Status::sat) {
        std::cout << "s SAT\n";
        for (int v = 0; v < inst.graph.n; ++v)
            std::cout << "v " << (v + 1) << ' ' << result.coloring.at(v) << '\n';
        return kExitSat;
    }
    std::cout << "s UNSAT\n";
    return kExitUnsat;
}

int run_bounds(const lcx::Instance& inst) {
    const lcx::FitReport report = lcx::fit_constant(inst.graph);
    std::cout << "n " << report.n << '\n'
              << "rule " << lcx::to_string(report.rule) << '\n'
              << "t " << format_double("%.5f", report.t) << '\n'
              << "predicted_work " << format_double("%.10g", report.predicted_work) << '\n';
    return 0;
}

int run_mis_count(const lcx::Instance& inst) {
    std::cout << lcx::count_mis(inst.graph, inst.graph.vertices()) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact list-coloring and precoloring-extension solver"};
    app.require_subcommand(1);

    std::string solve_path;
    bool stats = false;
    bool check_oracle = false;
    std::string rule_name = "paper";
    int max_n = 26;
    auto* solve_cmd =
        app.add_subcommand("solve", "decide list-colorability, print a coloring when one exists");
    solve_cmd->add_option("file", solve_path, "instance file")->required();
    solve_cmd->add_flag("--stats", stats, "per-round work counters on the diagnostic stream");
    solve_cmd->add_flag("--check-oracle", check_oracle,
                        "cross-check the decision against brute force (small n only)");
    solve_cmd
        ->add_option("--long-list-rule", rule_name,
                     "which vertices are set aside before the table rounds")
        ->check(CLI::IsMember({"paper", "degree"}));
    solve_cmd->add_option("--max-n", max_n, "largest accepted vertex count");

    std::string bounds_path;
    auto* bounds_cmd =
        app.add_subcommand("bounds", "report the fit constant and the predicted work bound");
    bounds_cmd->add_option("file", bounds_path, "instance file")->required();

    std::string mis_path;
    auto* mis_cmd =
        app.add_subcommand("mis-count", "count the maximal independent sets of the graph");
    mis_cmd->add_option("file", mis_path, "instance file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    const std::string& path =
        solve_cmd->parsed() ? solve_path : (bounds_cmd->parsed() ? bounds_path : mis_path);
    try {
        lcx::ParseOptions popts;
        popts.max_n = max_n;
        const lcx::Instance inst = lcx::parse_instance(read_file(path), popts);
        if (solve_cmd->parsed()) {
            const auto rule = rule_name == "degree" ? lcx::LongListRule::list_above_degree
                                                    : lcx::LongListRule::list_at_least_n;
            return run_solve(inst, stats, check_oracle, rule);
        }
        if (bounds_cmd->parsed()) return run_bounds(inst);
        return run_mis_count(inst);
    } catch (const lcx::ParseError& e) {
        std::cerr << "error: " << path << ": " << e.what() << '\n';
        return kExitUsage;
    } catch (const lcx::InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
