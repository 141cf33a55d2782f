#include "hamc/augment.hpp"

#include <algorithm>

#include "hamc/closed_form.hpp"
#include "hamc/ham_check.hpp"
#include "json.hpp"

namespace hamc {

namespace {

// Each construct_* guards its own theorem hypothesis, which can be wider
// than the classify label (all-equal specs land in the regular labels).
void require(bool hypothesis_holds, const CaterpillarSpec& spec, const char* name) {
    if (!hypothesis_holds)
        throw std::invalid_argument(std::string(name) +
                                    ": spec does not meet the hypothesis");
    if (spec.total_vertices() < 3)
        throw TooSmallForCycle("caterpillar on " +
                               std::to_string(spec.total_vertices()) +
                               " vertices has no spanning cycle");
}

/// Checks every plan invariant and freezes the result. A failure here is
/// a construction bug, not bad input.
AugmentationPlan validate_plan(const CaterpillarSpec& spec,
                               std::vector<Edge> added,
                               std::vector<VertexId> cycle) {
    std::sort(added.begin(), added.end());
    auto [g, labeling] = build_graph(spec);
    (void)labeling;
    for (const Edge& e : added) {
        if (!g.add_edge(e.u, e.v))
            throw std::logic_error("construction reused an existing edge");
    }
    if (!verify_cycle(g, cycle))
        throw std::logic_error("construction produced an invalid witness cycle");
    const LambdaResult lr = lambda_closed_form(spec);
    if (!lr.value || static_cast<int>(added.size()) != *lr.value)
        throw std::logic_error("construction size disagrees with the closed form");
    return AugmentationPlan{std::move(added), std::move(cycle)};
}

/// Shared builder for every class whose spine carries claws: per heavy
/// vertex the spanning path first-leaf -> spine -> remaining leaves, claws
/// linked last-leaf to first-leaf, and runs of sparse spine vertices
/// threaded with one entry and one exit edge (deserted pendants detour
/// through their leaf and rejoin the spine one step further).
AugmentationPlan build_claw_chain(const CaterpillarSpec& spec) {
    const auto& ls = spec.leaf_counts();
    const int n = spec.spine_length();
    const auto [g, labeling] = build_graph(spec);
    (void)g;
    const SegmentDecomposition decomp = decompose_segments(spec);
    const auto& heavy = decomp.heavy_vertices;

    std::vector<Edge> added;
    std::vector<VertexId> cycle;
    auto add = [&added](VertexId a, VertexId b) { added.emplace_back(a, b); };
    auto leaf = [&labeling](int i, int j) {
        return labeling.leaf_groups[static_cast<size_t>(i)][static_cast<size_t>(j)];
    };

    // Appends spine positions a..b (all with at most one leaf). The walk
    // enters at v_a and always exits at v_b; the caller wires both ends.
    auto walk_run = [&](int a, int b) {
        cycle.push_back(a);
        for (int s = a; s < b; ++s) {
            if (ls[static_cast<size_t>(s)] == 1) {
                const VertexId u = leaf(s, 0);
                cycle.push_back(u);
                add(u, s + 1);  // rejoin the spine past the deserted pendant
            }
            cycle.push_back(s + 1);
        }
    };

    const int m = static_cast<int>(heavy.size());
    for (int t = 0; t < m; ++t) {
        const int h = heavy[static_cast<size_t>(t)];
        const int l = ls[static_cast<size_t>(h)];
        cycle.push_back(leaf(h, 0));
        cycle.push_back(h);
        for (int j = 1; j < l; ++j) {
            cycle.push_back(leaf(h, j));
            if (j >= 2) add(leaf(h, j - 1), leaf(h, j));
        }
        const VertexId exit = leaf(h, l - 1);
        if (t + 1 < m) {
            const int nh = heavy[static_cast<size_t>(t + 1)];
            if (nh == h + 1) {
                add(exit, leaf(nh, 0));
            } else {
                add(exit, h + 1);
                walk_run(h + 1, nh - 1);
                add(nh - 1, leaf(nh, 0));
            }
        } else {
            // Close the cycle, threading the spine runs past the last and
            // before the first claw.
            VertexId cur = exit;
            if (h < n - 1) {
                add(cur, h + 1);
                walk_run(h + 1, n - 1);
                cur = n - 1;
            }
            const int first = heavy.front();
            if (first > 0) {
                add(cur, 0);
                walk_run(0, first - 1);
                cur = first - 1;
            }
            add(cur, leaf(first, 0));
        }
    }
    return validate_plan(spec, std::move(added), std::move(cycle));
}

}  // namespace

AugmentationPlan construct_regular1(const CaterpillarSpec& spec) {
    const auto& ls = spec.leaf_counts();
    require(std::all_of(ls.begin(), ls.end(), [](int l) { return l == 1; }), spec,
            "construct_regular1");
    const int n = spec.spine_length();
    const auto [g, labeling] = build_graph(spec);
    (void)g;
    auto leaf = [&labeling](int i) {
        return labeling.leaf_groups[static_cast<size_t>(i)][0];
    };

    std::vector<Edge> added;
    std::vector<VertexId> cycle;
    if (n % 2 == 0) {
        for (int b = 1; b + 1 <= n - 2; b += 2) added.emplace_back(leaf(b), leaf(b + 1));
        added.emplace_back(leaf(n - 1), leaf(0));
        for (int b = 0; b < n; b += 2) {
            cycle.push_back(leaf(b));
            cycle.push_back(b);
            cycle.push_back(b + 1);
            cycle.push_back(leaf(b + 1));
        }
    } else {
        for (int b = 0; b + 1 <= n - 2; b += 2) added.emplace_back(leaf(b), leaf(b + 1));
        added.emplace_back(leaf(n - 1), 0);
        cycle.push_back(0);
        for (int b = 0; b + 2 <= n - 1; b += 2) {
            cycle.push_back(leaf(b));
            cycle.push_back(leaf(b + 1));
            cycle.push_back(b + 1);
            cycle.push_back(b + 2);
        }
        cycle.push_back(leaf(n - 1));
    }
    return validate_plan(spec, std::move(added), std::move(cycle));
}

AugmentationPlan construct_regular2(const CaterpillarSpec& spec) {
    const auto& ls = spec.leaf_counts();
    require(std::all_of(ls.begin(), ls.end(), [](int l) { return l == 2; }), spec,
            "construct_regular2");
    return build_claw_chain(spec);
}

AugmentationPlan construct_regular_k(const CaterpillarSpec& spec) {
    const auto& ls = spec.leaf_counts();
    require(ls[0] >= 3 && std::all_of(ls.begin(), ls.end(),
                                      [&](int l) { return l == ls[0]; }),
            spec, "construct_regular_k");
    return build_claw_chain(spec);
}

AugmentationPlan construct_all_atleast3(const CaterpillarSpec& spec) {
    const auto& ls = spec.leaf_counts();
    require(std::all_of(ls.begin(), ls.end(), [](int l) { return l >= 3; }), spec,
            "construct_all_atleast3");
    return build_claw_chain(spec);
}

AugmentationPlan construct_zero_or_atleast2(const CaterpillarSpec& spec) {
    const auto& ls = spec.leaf_counts();
    require(std::none_of(ls.begin(), ls.end(), [](int l) { return l == 1; }) &&
                std::any_of(ls.begin(), ls.end(), [](int l) { return l >= 2; }),
            spec, "construct_zero_or_atleast2");
    return build_claw_chain(spec);
}

AugmentationPlan construct_deserted(const CaterpillarSpec& spec) {
    require(classify(spec).kind == CaterpillarClass::DesertedSegments, spec,
            "construct_deserted");
    return build_claw_chain(spec);
}

std::optional<AugmentationPlan> construct(const CaterpillarSpec& spec) {
    if (spec.total_vertices() < 3)
        throw TooSmallForCycle("caterpillar on " +
                               std::to_string(spec.total_vertices()) +
                               " vertices has no spanning cycle");
    switch (classify(spec).kind) {
        case CaterpillarClass::Regular1: return construct_regular1(spec);
        case CaterpillarClass::Regular2: return construct_regular2(spec);
        case CaterpillarClass::RegularK: return construct_regular_k(spec);
        case CaterpillarClass::AllAtLeastThree: return construct_all_atleast3(spec);
        case CaterpillarClass::ZeroOrAtLeastTwo: return construct_zero_or_atleast2(spec);
        case CaterpillarClass::DesertedSegments: return construct_deserted(spec);
        case CaterpillarClass::Unsupported: return std::nullopt;
    }
    return std::nullopt;
}

std::string plan_to_json(const AugmentationPlan& plan) {
    nlohmann::json j;
    auto edges = nlohmann::json::array();
    for (const Edge& e : plan.added_edges)
        edges.push_back(nlohmann::json::array({e.u, e.v}));
    j["added_edges"] = std::move(edges);
    j["witness_cycle"] = plan.witness_cycle;
    return j.dump();
}

AugmentationPlan plan_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("plan JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("added_edges") || !j.contains("witness_cycle"))
        throw ParseError("plan JSON: expected keys 'added_edges' and 'witness_cycle'");
    AugmentationPlan plan;
    const auto& edges = j["added_edges"];
    if (!edges.is_array()) throw ParseError("plan JSON: 'added_edges' must be an array");
    for (const auto& item : edges) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
            !item[1].is_number_integer())
            throw ParseError("plan JSON: each added edge must be a pair of integers");
        const long long a = item[0].get<long long>();
        const long long b = item[1].get<long long>();
        if (a < 0 || b < 0 || a == b)
            throw ParseError("plan JSON: invalid edge endpoints");
        plan.added_edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
    }
    std::sort(plan.added_edges.begin(), plan.added_edges.end());
    if (std::adjacent_find(plan.added_edges.begin(), plan.added_edges.end()) !=
        plan.added_edges.end())
        throw ParseError("plan JSON: duplicate added edge");
    const auto& cyc = j["witness_cycle"];
    if (!cyc.is_array()) throw ParseError("plan JSON: 'witness_cycle' must be an array");
    for (const auto& item : cyc) {
        if (!item.is_number_integer() || item.get<long long>() < 0)
            throw ParseError("plan JSON: witness entries must be non-negative integers");
        plan.witness_cycle.push_back(item.get<VertexId>());
    }
    return plan;
}

}  // namespace hamc
