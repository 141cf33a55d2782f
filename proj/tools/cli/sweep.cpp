#include "sweep.hpp"

#include <sstream>

#include "hamc/augment.hpp"
#include "hamc/closed_form.hpp"
#include "hamc/oracle.hpp"
#include "spec_gen.hpp"

namespace hamc::cli {

namespace {

SweepRow make_row(const CaterpillarSpec& spec, const SweepOptions& options) {
    SweepRow row{spec, classify(spec), std::nullopt, false, std::nullopt, "", std::nullopt, true};
    try {
        const LambdaResult lr = lambda_closed_form(spec);
        row.formula = lr.value;
        if (row.formula) {
            auto plan = construct(spec);
            if (plan) row.construction = static_cast<int>(plan->added_edges.size());
        }
    } catch (const TooSmallForCycle&) {
        row.too_small = true;
    }

    const int total = spec.total_vertices();
    if (!options.with_oracle || total < 3 || total > options.oracle_vertex_cap) {
        row.oracle_marker = "SKIPPED";
    } else {
        auto [g, labeling] = build_graph(spec);
        (void)labeling;
        OracleOptions oracle_opts;
        oracle_opts.budget = options.budget;
        oracle_opts.threads = options.threads;
        auto result = min_cycle_augmentation(g, oracle_opts);
        if (result)
            row.oracle = result->minimum;
        else
            row.oracle_marker = "BUDGET";
    }

    std::vector<int> populated;
    if (row.formula) populated.push_back(*row.formula);
    if (row.oracle) populated.push_back(*row.oracle);
    if (row.construction) populated.push_back(*row.construction);
    for (int v : populated)
        if (v != populated.front()) row.agree = false;
    return row;
}

}  // namespace

std::vector<SweepRow> run_family_sweep(const SweepOptions& options) {
    std::vector<SweepRow> rows;
    const auto& fam = options.family;
    if (fam == "regular1" || fam == "regular2" || fam == "regularK") {
        if (options.n_min < 1 || options.n_min > options.n_max)
            throw UnsatisfiableRanges("empty spine range");
        if (fam == "regularK" && options.k < 3)
            throw UnsatisfiableRanges("regularK needs k >= 3");
        const int l = fam == "regular1" ? 1 : fam == "regular2" ? 2 : options.k;
        for (int n = options.n_min; n <= options.n_max; ++n)
            rows.push_back(make_row(
                CaterpillarSpec(std::vector<int>(static_cast<size_t>(n), l)), options));
        return rows;
    }
    SpecConstraint constraint;
    if (fam == "atleast3")
        constraint = SpecConstraint::AtLeast3;
    else if (fam == "zero2")
        constraint = SpecConstraint::Zero2;
    else if (fam == "deserted")
        constraint = SpecConstraint::Deserted;
    else if (fam == "random")
        constraint = SpecConstraint::Any;
    else
        throw std::invalid_argument("unknown family: " + fam);

    GenRanges ranges{options.n_min, options.n_max, options.l_min, options.l_max};
    Lcg rng(options.seed);
    for (int i = 0; i < options.count; ++i) {
        auto spec = generate_spec(rng, constraint, ranges);
        if (!spec)
            throw UnsatisfiableRanges("family '" + fam +
                                      "' cannot be generated in the given ranges");
        rows.push_back(make_row(*spec, options));
    }
    return rows;
}

std::string spec_to_compact(const CaterpillarSpec& spec) {
    std::ostringstream out;
    out << '[';
    const auto& ls = spec.leaf_counts();
    for (size_t i = 0; i < ls.size(); ++i) {
        if (i > 0) out << ',';
        out << ls[i];
    }
    out << ']';
    return out.str();
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << "spec;class;formula;oracle;construction;agree\n";
    for (const SweepRow& row : rows) {
        out << spec_to_compact(row.spec) << ';' << to_string(row.cls) << ';';
        if (row.formula)
            out << *row.formula;
        else
            out << (row.too_small ? "TooSmallForCycle" : "Unsupported");
        out << ';';
        if (row.oracle)
            out << *row.oracle;
        else
            out << row.oracle_marker;
        out << ';';
        if (row.construction)
            out << *row.construction;
        else
            out << (row.too_small ? "TooSmallForCycle" : "Unsupported");
        out << ';' << (row.agree ? "true" : "false") << '\n';
    }
    return out.str();
}

}  // namespace hamc::cli
