#pragma once

#include <optional>
#include <string_view>

#include "hamc/caterpillar.hpp"

namespace hamc {

/// Closed-form lambda value together with the class and formula that
/// produced it. An Unsupported class yields no value, never a guess.
struct LambdaResult {
    ClassLabel class_used;
    std::optional<int> value;
    std::string_view formula_name;  // empty for Unsupported
};

/// A graph with c leaves needs at least ceil(c/2) added edges.
int lambda_lower_bound(int leaf_count);

/// Star with num_leaves leaves: num_leaves - 1. Throws TooSmallForCycle
/// for fewer than two leaves (no spanning cycle on < 3 vertices).
int lambda_star(int num_leaves);

/// ceil(leaf_total / 2), the segment-path lower bound.
int lemma_lower_bound_01(const CaterpillarSpec& spec);

/// Dispatches on classify(spec). Throws TooSmallForCycle when the
/// caterpillar has fewer than three vertices.
LambdaResult lambda_closed_form(const CaterpillarSpec& spec,
                                const SegmentDecomposition& decomp);

/// Convenience overload computing the decomposition itself.
LambdaResult lambda_closed_form(const CaterpillarSpec& spec);

/// Spanning-path count from the cycle count: 0 for Hamiltonian graphs,
/// lambda - 1 otherwise. lambda = 0 with already_hamiltonian = false is
/// inconsistent and throws.
int delta_from_lambda(int lambda, bool already_hamiltonian);

}  // namespace hamc
