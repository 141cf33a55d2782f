#include "spec_gen.hpp"

#include <algorithm>

namespace hamc::cli {

std::optional<SpecConstraint> parse_constraint(const std::string& name) {
    if (name == "any") return SpecConstraint::Any;
    if (name == "regular1") return SpecConstraint::Regular1;
    if (name == "regular2") return SpecConstraint::Regular2;
    if (name == "regularK") return SpecConstraint::RegularK;
    if (name == "atleast3") return SpecConstraint::AtLeast3;
    if (name == "zero2") return SpecConstraint::Zero2;
    if (name == "deserted") return SpecConstraint::Deserted;
    return std::nullopt;
}

namespace {

bool ranges_admit(SpecConstraint c, const GenRanges& r) {
    if (r.n_min < 1 || r.n_min > r.n_max || r.l_min < 0 || r.l_min > r.l_max)
        return false;
    switch (c) {
        case SpecConstraint::Any: return true;
        case SpecConstraint::Regular1: return r.l_min <= 1 && 1 <= r.l_max;
        case SpecConstraint::Regular2: return r.l_min <= 2 && 2 <= r.l_max;
        case SpecConstraint::RegularK: return r.l_max >= 3;
        case SpecConstraint::AtLeast3: return r.l_max >= 3;
        case SpecConstraint::Zero2:
            return r.l_min == 0 && r.l_max >= 2 && r.n_max >= 2;
        case SpecConstraint::Deserted:
            return r.l_min == 0 && r.l_max >= 2 && r.n_max >= 4;
    }
    return false;
}

bool matches(SpecConstraint c, const ClassLabel& label) {
    switch (c) {
        case SpecConstraint::Any: return true;
        case SpecConstraint::Regular1: return label.kind == CaterpillarClass::Regular1;
        case SpecConstraint::Regular2: return label.kind == CaterpillarClass::Regular2;
        case SpecConstraint::RegularK: return label.kind == CaterpillarClass::RegularK;
        case SpecConstraint::AtLeast3:
            return label.kind == CaterpillarClass::AllAtLeastThree ||
                   (label.kind == CaterpillarClass::RegularK && label.k >= 3);
        case SpecConstraint::Zero2:
            return label.kind == CaterpillarClass::ZeroOrAtLeastTwo;
        case SpecConstraint::Deserted:
            return label.kind == CaterpillarClass::DesertedSegments;
    }
    return false;
}

std::vector<int> draw_counts(Lcg& rng, SpecConstraint c, const GenRanges& r, int n) {
    std::vector<int> ls(static_cast<size_t>(n), 0);
    const int heavy_lo = std::max(2, r.l_min);
    const int ge3_lo = std::max(3, r.l_min);
    switch (c) {
        case SpecConstraint::Any:
            for (int& l : ls) l = rng.next_in_range(r.l_min, r.l_max);
            break;
        case SpecConstraint::Regular1:
            std::fill(ls.begin(), ls.end(), 1);
            break;
        case SpecConstraint::Regular2:
            std::fill(ls.begin(), ls.end(), 2);
            break;
        case SpecConstraint::RegularK:
            std::fill(ls.begin(), ls.end(), rng.next_in_range(ge3_lo, r.l_max));
            break;
        case SpecConstraint::AtLeast3:
            for (int& l : ls) l = rng.next_in_range(ge3_lo, r.l_max);
            break;
        case SpecConstraint::Zero2:
            for (int& l : ls)
                l = rng.next_in_range(0, 1) == 0 ? 0
                                                 : rng.next_in_range(heavy_lo, r.l_max);
            break;
        case SpecConstraint::Deserted: {
            // Assemble from blocks: claws, bare spine vertices, and
            // zero-flanked pendants, starting from a claw.
            ls.clear();
            ls.push_back(rng.next_in_range(heavy_lo, r.l_max));
            while (static_cast<int>(ls.size()) < n) {
                const int room = n - static_cast<int>(ls.size());
                const int block = rng.next_in_range(0, 2);
                if (block == 1 && room >= 3) {
                    ls.push_back(0);
                    ls.push_back(1);
                    ls.push_back(0);
                } else if (block == 2) {
                    ls.push_back(rng.next_in_range(heavy_lo, r.l_max));
                } else {
                    ls.push_back(0);
                }
            }
            break;
        }
    }
    return ls;
}

}  // namespace

std::optional<CaterpillarSpec> generate_spec(Lcg& rng, SpecConstraint constraint,
                                             const GenRanges& ranges) {
    if (!ranges_admit(constraint, ranges)) return std::nullopt;
    for (int attempt = 0; attempt < 2000; ++attempt) {
        const int n = rng.next_in_range(ranges.n_min, ranges.n_max);
        CaterpillarSpec spec(draw_counts(rng, constraint, ranges, n));
        if (matches(constraint, classify(spec))) return spec;
    }
    return std::nullopt;
}

}  // namespace hamc::cli
