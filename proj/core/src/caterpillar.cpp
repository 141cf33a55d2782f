#include "hamc/caterpillar.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"

namespace hamc {

CaterpillarSpec::CaterpillarSpec(std::vector<int> leaf_counts)
    : leaf_counts_(std::move(leaf_counts)) {
    if (leaf_counts_.empty())
        throw std::invalid_argument("caterpillar spec needs at least one spine vertex");
    for (int l : leaf_counts_)
        if (l < 0) throw std::invalid_argument("negative leaf count");
}

int CaterpillarSpec::leaf_total() const {
    return std::accumulate(leaf_counts_.begin(), leaf_counts_.end(), 0);
}

std::pair<Graph, VertexLabeling> build_graph(const CaterpillarSpec& spec) {
    const auto& ls = spec.leaf_counts();
    const int n = spec.spine_length();
    Graph g(spec.total_vertices());
    VertexLabeling labeling;
    labeling.spine.resize(static_cast<size_t>(n));
    labeling.leaf_groups.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) labeling.spine[static_cast<size_t>(i)] = i;
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    VertexId next = n;
    for (int i = 0; i < n; ++i) {
        auto& group = labeling.leaf_groups[static_cast<size_t>(i)];
        group.reserve(static_cast<size_t>(ls[static_cast<size_t>(i)]));
        for (int j = 0; j < ls[static_cast<size_t>(i)]; ++j) {
            g.add_edge(i, next);
            group.push_back(next);
            ++next;
        }
    }
    return {std::move(g), std::move(labeling)};
}

bool is_deserted_pendant(const CaterpillarSpec& spec, int index) {
    const auto& ls = spec.leaf_counts();
    const int n = spec.spine_length();
    if (index <= 0 || index >= n - 1) return false;
    return ls[static_cast<size_t>(index)] == 1 &&
           ls[static_cast<size_t>(index - 1)] == 0 &&
           ls[static_cast<size_t>(index + 1)] == 0;
}

ClassLabel classify(const CaterpillarSpec& spec) {
    const auto& ls = spec.leaf_counts();
    const bool all_same = std::all_of(ls.begin(), ls.end(),
                                      [&](int l) { return l == ls[0]; });
    if (all_same && ls[0] == 1) return {CaterpillarClass::Regular1, 0};
    if (all_same && ls[0] == 2) return {CaterpillarClass::Regular2, 0};
    if (all_same && ls[0] >= 3) return {CaterpillarClass::RegularK, ls[0]};
    const bool all_ge3 = std::all_of(ls.begin(), ls.end(),
                                     [](int l) { return l >= 3; });
    if (all_ge3) return {CaterpillarClass::AllAtLeastThree, 0};

    const bool has_zero = std::any_of(ls.begin(), ls.end(), [](int l) { return l == 0; });
    const bool has_one = std::any_of(ls.begin(), ls.end(), [](int l) { return l == 1; });
    const bool has_heavy = std::any_of(ls.begin(), ls.end(), [](int l) { return l >= 2; });
    // Both irregular branches need a heavy vertex to bound their segments;
    // without one the segment formulas undercount (e.g. a bare path).
    if (!has_one && has_zero && has_heavy)
        return {CaterpillarClass::ZeroOrAtLeastTwo, 0};
    if (has_one && has_heavy) {
        bool all_deserted = true;
        for (int i = 0; i < spec.spine_length(); ++i)
            if (ls[static_cast<size_t>(i)] == 1 && !is_deserted_pendant(spec, i))
                all_deserted = false;
        if (all_deserted) return {CaterpillarClass::DesertedSegments, 0};
    }
    return {CaterpillarClass::Unsupported, 0};
}

SegmentDecomposition decompose_segments(const CaterpillarSpec& spec) {
    const auto& ls = spec.leaf_counts();
    const int n = spec.spine_length();
    SegmentDecomposition d;
    for (int i = 0; i < n; ++i)
        if (ls[static_cast<size_t>(i)] >= 2) d.heavy_vertices.push_back(i);
    for (int i = 0; i < n; ++i)
        if (is_deserted_pendant(spec, i)) ++d.deserted_pendant_count;
    if (d.heavy_vertices.empty()) return d;

    int i = 0;
    while (i < n) {
        if (ls[static_cast<size_t>(i)] >= 2) {
            ++i;
            continue;
        }
        int j = i;
        while (j + 1 < n && ls[static_cast<size_t>(j + 1)] <= 1) ++j;
        Segment seg;
        seg.start = i;
        seg.end = j;
        bool all_zero = true;
        bool all_ones_deserted = true;
        for (int t = i; t <= j; ++t) {
            if (ls[static_cast<size_t>(t)] == 1) {
                all_zero = false;
                if (!is_deserted_pendant(spec, t)) all_ones_deserted = false;
            }
        }
        seg.kind = all_zero ? SegmentKind::ZeroLeaf : SegmentKind::ZeroOne;
        if (all_zero)
            ++d.zero_leaf_segment_count;
        else if (all_ones_deserted)
            ++d.deserted_segment_count;
        d.segments.push_back(seg);
        i = j + 1;
    }
    return d;
}

std::string to_string(const ClassLabel& label) {
    switch (label.kind) {
        case CaterpillarClass::Regular1: return "Regular1";
        case CaterpillarClass::Regular2: return "Regular2";
        case CaterpillarClass::RegularK: return "RegularK(" + std::to_string(label.k) + ")";
        case CaterpillarClass::AllAtLeastThree: return "AllAtLeastThree";
        case CaterpillarClass::ZeroOrAtLeastTwo: return "ZeroOrAtLeastTwo";
        case CaterpillarClass::DesertedSegments: return "DesertedSegments";
        case CaterpillarClass::Unsupported: return "Unsupported";
    }
    return "Unsupported";
}

CaterpillarSpec spec_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("spec JSON: ") + e.what());
    }
    if (!j.is_object() || j.size() != 1 || !j.contains("leaves"))
        throw ParseError("spec JSON: expected exactly one key 'leaves'");
    const auto& arr = j["leaves"];
    if (!arr.is_array() || arr.empty())
        throw ParseError("spec JSON: 'leaves' must be a non-empty array");
    std::vector<int> ls;
    ls.reserve(arr.size());
    for (const auto& item : arr) {
        if (!item.is_number_integer() || item.get<long long>() < 0)
            throw ParseError("spec JSON: leaf counts must be non-negative integers");
        ls.push_back(item.get<int>());
    }
    return CaterpillarSpec(std::move(ls));
}

std::string spec_to_json(const CaterpillarSpec& spec) {
    nlohmann::json j;
    j["leaves"] = spec.leaf_counts();
    return j.dump();
}

}  // namespace hamc
