#pragma once

#include <optional>
#include <string>

#include "hamc/caterpillar.hpp"
#include "hamc/prng.hpp"

namespace hamc::cli {

enum class SpecConstraint {
    Any,
    Regular1,
    Regular2,
    RegularK,
    AtLeast3,
    Zero2,
    Deserted,
};

/// Accepts: any, regular1, regular2, regularK, atleast3, zero2, deserted.
std::optional<SpecConstraint> parse_constraint(const std::string& name);

struct GenRanges {
    int n_min = 1;
    int n_max = 8;
    int l_min = 0;
    int l_max = 4;
};

/// Draws a spec matching the constraint, deterministically from the
/// generator state. nullopt when the constraint cannot be met inside the
/// ranges (e.g. regularK with l_max < 3).
std::optional<CaterpillarSpec> generate_spec(Lcg& rng, SpecConstraint constraint,
                                             const GenRanges& ranges);

}  // namespace hamc::cli
