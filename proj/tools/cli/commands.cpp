#include "commands.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "hamc/augment.hpp"
#include "hamc/closed_form.hpp"
#include "hamc/ham_check.hpp"
#include "hamc/oracle.hpp"

namespace hamc::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + path);
    out << content;
}

std::string edges_to_json(const std::vector<Edge>& edges) {
    std::ostringstream out;
    out << '[';
    for (size_t i = 0; i < edges.size(); ++i) {
        if (i > 0) out << ',';
        out << '[' << edges[i].u << ',' << edges[i].v << ']';
    }
    out << ']';
    return out.str();
}

std::string vertices_to_json(const std::vector<VertexId>& order) {
    std::ostringstream out;
    out << '[';
    for (size_t i = 0; i < order.size(); ++i) {
        if (i > 0) out << ',';
        out << order[i];
    }
    out << ']';
    return out.str();
}

}  // namespace

int cmd_compute(const std::string& spec_path, std::ostream& out, std::ostream& err) {
    CaterpillarSpec spec({0});
    try {
        spec = spec_from_json(read_file(spec_path));
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    }
    const auto [g, labeling] = build_graph(spec);
    (void)labeling;
    out << "class: " << to_string(classify(spec)) << "\n";
    out << "lower_bound_leaves: "
        << lambda_lower_bound(static_cast<int>(g.leaves().size())) << "\n";
    out << "lower_bound_leaf_total: " << lemma_lower_bound_01(spec) << "\n";
    try {
        const LambdaResult lr = lambda_closed_form(spec);
        if (lr.value) {
            out << "lambda: " << *lr.value << "\n";
            out << "formula: " << lr.formula_name << "\n";
            out << "delta: " << delta_from_lambda(*lr.value, false) << "\n";
        } else {
            out << "lambda: Unsupported\n";
            out << "delta: Unsupported\n";
        }
    } catch (const TooSmallForCycle&) {
        out << "lambda: TooSmallForCycle\n";
        out << "delta: TooSmallForCycle\n";
    }
    return kExitOk;
}

int cmd_construct(const std::string& spec_path, const std::string& out_path,
                  std::ostream& out, std::ostream& err) {
    CaterpillarSpec spec({0});
    try {
        spec = spec_from_json(read_file(spec_path));
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    }
    try {
        auto plan = construct(spec);
        if (!plan) {
            err << "error: spec " << spec_to_json(spec)
                << " matches no supported class\n";
            return kExitUnsupported;
        }
        const std::string json = plan_to_json(*plan) + "\n";
        if (out_path.empty()) {
            out << json;
        } else {
            write_file(out_path, json);
            out << "plan: " << plan->added_edges.size() << " added edges, witness length "
                << plan->witness_cycle.size() << ", written to " << out_path << "\n";
        }
        return kExitOk;
    } catch (const TooSmallForCycle& e) {
        err << "error: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

int cmd_verify(const std::string& graph_path, const std::string& plan_path,
               std::ostream& out, std::ostream& err) {
    Graph g(0);
    AugmentationPlan plan;
    try {
        g = parse_edge_list(read_file(graph_path));
        plan = plan_from_json(read_file(plan_path));
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    }
    for (const Edge& e : plan.added_edges) {
        if (e.v >= g.vertex_count()) {
            out << "INVALID: added edge (" << e.u << "," << e.v
                << ") is out of range\n";
            return kExitInvalidPlan;
        }
        if (!g.add_edge(e.u, e.v)) {
            out << "INVALID: added edge (" << e.u << "," << e.v
                << ") duplicates an existing edge\n";
            return kExitInvalidPlan;
        }
    }
    if (!verify_cycle(g, plan.witness_cycle)) {
        out << "INVALID: witness is not a spanning cycle of the augmented graph\n";
        return kExitInvalidPlan;
    }
    out << "VALID, " << plan.added_edges.size() << " edges added\n";
    return kExitOk;
}

int cmd_oracle(const OracleCmdOptions& options, std::ostream& out, std::ostream& err) {
    Graph g(0);
    try {
        if (!options.spec_path.empty()) {
            auto spec = spec_from_json(read_file(options.spec_path));
            g = build_graph(spec).first;
        } else if (!options.graph_path.empty()) {
            g = parse_edge_list(read_file(options.graph_path));
        } else {
            err << "error: oracle needs --spec or --graph\n";
            return kExitParse;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    }
    try {
        OracleOptions oracle_opts;
        oracle_opts.budget = options.budget;
        oracle_opts.threads = options.threads;
        auto result = options.path_target ? min_path_augmentation(g, oracle_opts)
                                          : min_cycle_augmentation(g, oracle_opts);
        if (!result) {
            err << "error: minimum exceeds budget " << options.budget << "\n";
            return kExitBudget;
        }
        out << "minimum: " << result->minimum << "\n";
        out << "added_edges: " << edges_to_json(result->optimal_edges) << "\n";
        out << "witness: " << vertices_to_json(result->witness) << "\n";
        return kExitOk;
    } catch (const TooSmallForCycle& e) {
        err << "error: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    }
}

int cmd_compare(const SweepOptions& options, const std::string& out_path,
                std::ostream& out, std::ostream& err) {
    try {
        const std::string csv = sweep_to_csv(run_family_sweep(options));
        if (out_path.empty()) {
            out << csv;
        } else {
            write_file(out_path, csv);
            out << "wrote " << out_path << "\n";
        }
        return kExitOk;
    } catch (const UnsatisfiableRanges& e) {
        err << "error: " << e.what() << "\n";
        return kExitUnsatisfiable;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    }
}

int cmd_gen(const GenCmdOptions& options, std::ostream& out, std::ostream& err) {
    const auto constraint = parse_constraint(options.constraint);
    if (!constraint) {
        err << "error: unknown constraint '" << options.constraint << "'\n";
        return kExitParse;
    }
    Lcg rng(options.seed);
    auto spec = generate_spec(rng, *constraint, options.ranges);
    if (!spec) {
        err << "error: constraint '" << options.constraint
            << "' is unsatisfiable in the given ranges\n";
        return kExitUnsatisfiable;
    }
    const std::string json = spec_to_json(*spec) + "\n";
    if (options.out_path.empty()) {
        out << json;
    } else {
        try {
            write_file(options.out_path, json);
        } catch (const ParseError& e) {
            err << "error: " << e.what() << "\n";
            return kExitParse;
        }
        out << "wrote " << options.out_path << "\n";
    }
    return kExitOk;
}

}  // namespace hamc::cli
