#include <CLI11.hpp>

#include "rcx_cli/commands.hpp"

using namespace rcx::cli;

int main(int argc, char** argv) {
    CLI::App app{"rcx: exact Ramsey arrowing, critical numbers and coloring certificates"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--threads", g.threads, "search worker threads")->check(CLI::Range(1, 256));
    app.add_option("--timeout", g.timeout_seconds, "seconds per arrowing call (0 = none)");
    app.add_flag("--deterministic", g.deterministic,
                 "sequential lexicographic search with canonical witnesses");
    app.add_flag("--porcelain", g.porcelain, "key: value output only (already the default form)");
    app.add_flag("--no-hints", g.no_hints, "disable one-sided detector hints");
    app.add_flag("--no-orbit-symmetry", g.no_orbit_symmetry, "disable root orbit splitting");
    app.add_flag("--no-color-swap", g.no_color_swap, "disable the first-edge color fix");
    app.add_flag("--no-deferred-checks", g.no_deferred_checks,
                 "run full path/cycle detectors at every node");
    app.add_option("--edge-cap", g.edge_cap, "largest host edge count accepted")
        ->check(CLI::Range(1, 2016));

    int exit_code = kExitOk;

    auto* arrows_cmd = app.add_subcommand("arrows", "decide host -> (red, blue)");
    std::string host, red, blue, witness_path;
    arrows_cmd->add_option("--host", host, "host graph spec, e.g. K5-M2")->required();
    arrows_cmd->add_option("--red", red, "red pattern, e.g. M2")->required();
    arrows_cmd->add_option("--blue", blue, "blue pattern")->required();
    arrows_cmd->add_option("--witness", witness_path, "write the free coloring here on not-arrows");
    arrows_cmd->callback([&] { exit_code = cmd_arrows(g, host, red, blue, witness_path); });

    auto* ramsey_cmd = app.add_subcommand("ramsey", "least r with K_r -> (red, blue)");
    int max_r = 0;
    bool fast = false;
    std::string ramsey_emit;
    ramsey_cmd->add_option("--red", red)->required();
    ramsey_cmd->add_option("--blue", blue)->required();
    ramsey_cmd->add_option("--max-r", max_r, "scan limit (default: from the edge cap)");
    ramsey_cmd->add_flag("--fast", fast, "use a known closed form when one exists");
    ramsey_cmd->add_option("--emit-certs", ramsey_emit, "write bracketing certificates here");
    ramsey_cmd->callback([&] { exit_code = cmd_ramsey(g, red, blue, max_r, fast, ramsey_emit); });

    auto* critical_cmd = app.add_subcommand("critical", "largest deletable class member");
    std::string cls, emit_dir;
    critical_cmd->add_option("--class", cls, "star|matching|path|complete")->required();
    critical_cmd->add_option("--red", red)->required();
    critical_cmd->add_option("--blue", blue)->required();
    critical_cmd->add_option("--emit-certs", emit_dir, "write bracketing certificates here");
    critical_cmd->callback([&] { exit_code = cmd_critical(g, cls, red, blue, emit_dir); });

    auto* star_cmd = app.add_subcommand("star-critical", "least pendant degree that arrows");
    star_cmd->add_option("--red", red)->required();
    star_cmd->add_option("--blue", blue)->required();
    star_cmd->add_option("--emit-certs", emit_dir, "write bracketing certificates here");
    star_cmd->callback([&] { exit_code = cmd_star_critical(g, red, blue, emit_dir); });

    auto* params_cmd = app.add_subcommand("params", "chromatic and degree parameters");
    std::string graph;
    params_cmd->add_option("--graph", graph, "graph spec, e.g. C4 patterns or K5-M2")->required();
    params_cmd->callback([&] { exit_code = cmd_params(g, graph); });

    auto* construct_cmd = app.add_subcommand("construct", "build an extremal coloring");
    std::string family, out_path;
    int m = 0, n = 0;
    construct_cmd->add_option("--family", family,
                              "star-even|star-even-ext|star-odd|matching-join")->required();
    construct_cmd->add_option("--m", m)->required();
    construct_cmd->add_option("--n", n)->required();
    construct_cmd->add_option("--out", out_path, "certificate output path");
    construct_cmd->callback([&] { exit_code = cmd_construct(g, family, m, n, out_path); });

    auto* check_cmd = app.add_subcommand("check-cert", "re-prove a certificate from scratch");
    std::string cert_path;
    check_cmd->add_option("path", cert_path, "certificate file")->required();
    check_cmd->callback([&] { exit_code = cmd_check_cert(g, cert_path); });

    auto* verify_cmd = app.add_subcommand("verify-paper", "run the reproduction table");
    std::string tier = "fast";
    verify_cmd->add_option("--tier", tier, "fast|full");
    verify_cmd->callback([&] { exit_code = cmd_verify_paper(g, tier); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    return exit_code;
}
