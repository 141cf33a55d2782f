#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
    using namespace hamc::cli;

    CLI::App app{"Hamiltonian completion numbers, constructions, and exact "
                 "search for caterpillar graphs"};
    app.require_subcommand(1);

    std::string spec_path, graph_path, plan_path, out_path;

    auto* compute = app.add_subcommand(
        "compute", "Evaluate the closed-form lambda for a caterpillar spec");
    compute->add_option("--spec", spec_path, "caterpillar spec JSON file")->required();

    auto* construct = app.add_subcommand(
        "construct", "Build an augmenting edge set with a witness cycle");
    construct->add_option("--spec", spec_path, "caterpillar spec JSON file")->required();
    construct->add_option("--out", out_path, "plan JSON output file (default: stdout)");

    auto* verify = app.add_subcommand(
        "verify", "Check a plan against a graph: disjoint edges, valid witness");
    verify->add_option("--graph", graph_path, "edge-list graph file")->required();
    verify->add_option("--plan", plan_path, "plan JSON file")->required();

    OracleCmdOptions oracle_opts;
    std::string oracle_target = "cycle";
    auto* oracle = app.add_subcommand(
        "oracle", "Exact minimum augmentation by exhaustive search");
    auto* oracle_spec = oracle->add_option("--spec", oracle_opts.spec_path,
                                           "caterpillar spec JSON file");
    auto* oracle_graph = oracle->add_option("--graph", oracle_opts.graph_path,
                                            "edge-list graph file");
    oracle_spec->excludes(oracle_graph);
    oracle->add_option("--budget", oracle_opts.budget, "maximum edges to try")
        ->default_val(8);
    oracle->add_option("--threads", oracle_opts.threads, "search worker threads")
        ->default_val(1);
    oracle->add_option("--target", oracle_target, "cycle or path")
        ->default_val("cycle")
        ->check(CLI::IsMember({"cycle", "path"}));

    SweepOptions sweep;
    bool no_oracle = false;
    auto* compare = app.add_subcommand(
        "compare", "Sweep a family: formula vs oracle vs construction CSV");
    compare->add_option("--family", sweep.family, "family to sweep")
        ->required()
        ->check(CLI::IsMember({"regular1", "regular2", "regularK", "atleast3",
                               "zero2", "deserted", "random"}));
    compare->add_option("--n-min", sweep.n_min)->default_val(2);
    compare->add_option("--n-max", sweep.n_max)->default_val(5);
    compare->add_option("--k", sweep.k, "leaves per spine vertex (regularK)")
        ->default_val(3);
    compare->add_option("--count", sweep.count, "rows for generated families")
        ->default_val(10);
    compare->add_option("--seed", sweep.seed)->default_val(1);
    compare->add_option("--l-min", sweep.l_min)->default_val(0);
    compare->add_option("--l-max", sweep.l_max)->default_val(4);
    compare->add_option("--budget", sweep.budget)->default_val(8);
    compare->add_option("--threads", sweep.threads)->default_val(1);
    compare->add_flag("--no-oracle", no_oracle, "skip the oracle column");
    compare->add_option("--out", out_path, "CSV output file (default: stdout)");

    GenCmdOptions gen_opts;
    auto* gen = app.add_subcommand("gen", "Generate a pseudo-random caterpillar spec");
    gen->add_option("--seed", gen_opts.seed)->default_val(1);
    gen->add_option("--n-min", gen_opts.ranges.n_min)->default_val(1);
    gen->add_option("--n-max", gen_opts.ranges.n_max)->default_val(8);
    gen->add_option("--l-min", gen_opts.ranges.l_min)->default_val(0);
    gen->add_option("--l-max", gen_opts.ranges.l_max)->default_val(4);
    gen->add_option("--constraint", gen_opts.constraint, "class constraint or 'any'")
        ->default_val("any")
        ->check(CLI::IsMember({"any", "regular1", "regular2", "regularK",
                               "atleast3", "zero2", "deserted"}));
    gen->add_option("--out", gen_opts.out_path, "spec JSON output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    if (compute->parsed()) return cmd_compute(spec_path, std::cout, std::cerr);
    if (construct->parsed())
        return cmd_construct(spec_path, out_path, std::cout, std::cerr);
    if (verify->parsed())
        return cmd_verify(graph_path, plan_path, std::cout, std::cerr);
    if (oracle->parsed()) {
        oracle_opts.path_target = oracle_target == "path";
        return cmd_oracle(oracle_opts, std::cout, std::cerr);
    }
    if (compare->parsed()) {
        sweep.with_oracle = !no_oracle;
        return cmd_compare(sweep, out_path, std::cout, std::cerr);
    }
    if (gen->parsed()) return cmd_gen(gen_opts, std::cout, std::cerr);
    return kExitOk;
}
