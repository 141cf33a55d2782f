#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hamc/graph.hpp"

namespace hamc {

/// Canonical caterpillar description: one leaf count per spine vertex.
class CaterpillarSpec {
public:
    explicit CaterpillarSpec(std::vector<int> leaf_counts);

    const std::vector<int>& leaf_counts() const { return leaf_counts_; }
    int spine_length() const { return static_cast<int>(leaf_counts_.size()); }
    int leaf_total() const;
    int total_vertices() const { return spine_length() + leaf_total(); }

    bool operator==(const CaterpillarSpec&) const = default;

private:
    std::vector<int> leaf_counts_;
};

/// Deterministic labeling: spine vertices are 0..n-1 in order, leaves are
/// numbered n, n+1, ... grouped by spine vertex.
struct VertexLabeling {
    std::vector<VertexId> spine;
    std::vector<std::vector<VertexId>> leaf_groups;
};

enum class CaterpillarClass {
    Regular1,
    Regular2,
    RegularK,
    AllAtLeastThree,
    ZeroOrAtLeastTwo,
    DesertedSegments,
    Unsupported,
};

struct ClassLabel {
    CaterpillarClass kind = CaterpillarClass::Unsupported;
    int k = 0;  // set for RegularK only

    bool operator==(const ClassLabel&) const = default;
};

std::string to_string(const ClassLabel& label);

enum class SegmentKind { ZeroLeaf, ZeroOne };

/// Maximal run of spine vertices with at most one leaf each, inclusive
/// endpoints. Runs exist only when the spine has at least one vertex
/// with two or more leaves to bound them.
struct Segment {
    int start = 0;
    int end = 0;
    SegmentKind kind = SegmentKind::ZeroLeaf;
};

struct SegmentDecomposition {
    int zero_leaf_segment_count = 0;  // P(0)
    int deserted_pendant_count = 0;   // tau
    int deserted_segment_count = 0;   // gamma
    std::vector<int> heavy_vertices;  // spine indices with >= 2 leaves
    std::vector<Segment> segments;
};

/// Builds the caterpillar: spine path edges plus one pendant edge per leaf.
std::pair<Graph, VertexLabeling> build_graph(const CaterpillarSpec& spec);

/// Total and deterministic; first matching label wins (most specific first).
ClassLabel classify(const CaterpillarSpec& spec);

SegmentDecomposition decompose_segments(const CaterpillarSpec& spec);

/// True for spine index i when l(v_i) = 1 and both spine neighbors exist
/// with no leaves.
bool is_deserted_pendant(const CaterpillarSpec& spec, int index);

/// JSON format: {"leaves": [l1, l2, ..., ln]}. Canonical output, strict input.
CaterpillarSpec spec_from_json(const std::string& text);
std::string spec_to_json(const CaterpillarSpec& spec);

}  // namespace hamc
