#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hamc/caterpillar.hpp"
#include "hamc/graph.hpp"

namespace hamc {

/// Explicit edge set completing the caterpillar to a Hamiltonian graph,
/// plus the spanning cycle that certifies it. added_edges is disjoint
/// from the caterpillar's own edges and sorted; the witness visits every
/// vertex exactly once over original and added edges combined.
struct AugmentationPlan {
    std::vector<Edge> added_edges;
    std::vector<VertexId> witness_cycle;
};

/// Dispatches on classify(spec); nullopt for Unsupported classes.
/// Every plan is validated against the closed-form size and the witness
/// checker before it is returned. Throws TooSmallForCycle below three
/// vertices.
std::optional<AugmentationPlan> construct(const CaterpillarSpec& spec);

/// Per-class constructions. Each throws std::invalid_argument when the
/// spec is not in its class.
AugmentationPlan construct_regular1(const CaterpillarSpec& spec);
AugmentationPlan construct_regular2(const CaterpillarSpec& spec);
AugmentationPlan construct_regular_k(const CaterpillarSpec& spec);
AugmentationPlan construct_all_atleast3(const CaterpillarSpec& spec);
AugmentationPlan construct_zero_or_atleast2(const CaterpillarSpec& spec);
AugmentationPlan construct_deserted(const CaterpillarSpec& spec);

/// JSON format: {"added_edges": [[u,v], ...], "witness_cycle": [v0, ...]},
/// edges normalized and sorted.
std::string plan_to_json(const AugmentationPlan& plan);
AugmentationPlan plan_from_json(const std::string& text);

}  // namespace hamc
