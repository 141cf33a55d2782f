#include "hamc/closed_form.hpp"

namespace hamc {

namespace {

int ceil_half(int x) { return (x + 1) / 2; }

int sum_heavy_minus_one(const CaterpillarSpec& spec) {
    int total = 0;
    for (int l : spec.leaf_counts())
        if (l >= 2) total += l - 1;
    return total;
}

}  // namespace

int lambda_lower_bound(int leaf_count) {
    if (leaf_count < 0) throw std::invalid_argument("negative leaf count");
    return ceil_half(leaf_count);
}

int lambda_star(int num_leaves) {
    if (num_leaves <= 1)
        throw TooSmallForCycle("star with " + std::to_string(num_leaves) +
                               " leaves has no spanning cycle");
    return num_leaves - 1;
}

int lemma_lower_bound_01(const CaterpillarSpec& spec) {
    return ceil_half(spec.leaf_total());
}

LambdaResult lambda_closed_form(const CaterpillarSpec& spec,
                                const SegmentDecomposition& decomp) {
    if (spec.total_vertices() < 3)
        throw TooSmallForCycle("caterpillar on " +
                               std::to_string(spec.total_vertices()) +
                               " vertices has no spanning cycle");
    const ClassLabel label = classify(spec);
    const int n = spec.spine_length();
    switch (label.kind) {
        case CaterpillarClass::Regular1:
            return {label, ceil_half(n), "ceil(n/2)"};
        case CaterpillarClass::Regular2:
            return {label, n, "n"};
        case CaterpillarClass::RegularK:
            return {label, n * (label.k - 1), "n(k-1)"};
        case CaterpillarClass::AllAtLeastThree:
            return {label, spec.leaf_total() - n, "sum(l)-n"};
        case CaterpillarClass::ZeroOrAtLeastTwo:
            return {label,
                    decomp.zero_leaf_segment_count + sum_heavy_minus_one(spec),
                    "P(0)+sum(l-1)"};
        case CaterpillarClass::DesertedSegments:
            // Zero-leaf segments still cost one linking edge each, so the
            // P(0) term carries over alongside gamma and tau.
            return {label,
                    sum_heavy_minus_one(spec) + decomp.zero_leaf_segment_count +
                        decomp.deserted_segment_count + decomp.deserted_pendant_count,
                    "sum(l-1)+P(0)+gamma+tau"};
        case CaterpillarClass::Unsupported:
            break;
    }
    return {label, std::nullopt, ""};
}

LambdaResult lambda_closed_form(const CaterpillarSpec& spec) {
    return lambda_closed_form(spec, decompose_segments(spec));
}

int delta_from_lambda(int lambda, bool already_hamiltonian) {
    if (lambda < 0) throw std::invalid_argument("negative lambda");
    if (already_hamiltonian) return 0;
    if (lambda == 0)
        throw InconsistentValue("lambda = 0 requires a Hamiltonian graph");
    return lambda - 1;
}

}  // namespace hamc
