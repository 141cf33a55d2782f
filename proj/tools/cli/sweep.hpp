#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hamc/caterpillar.hpp"

namespace hamc::cli {

/// Raised when a generated family cannot be realized inside its ranges.
struct UnsatisfiableRanges : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SweepOptions {
    std::string family;  // regular1|regular2|regularK|atleast3|zero2|deserted|random
    int n_min = 2;
    int n_max = 5;
    int k = 3;        // regularK
    int count = 10;   // generated families (atleast3/zero2/deserted/random)
    std::uint64_t seed = 1;
    int l_min = 0;
    int l_max = 4;
    bool with_oracle = true;
    int oracle_vertex_cap = 12;
    int budget = 8;
    int threads = 1;
};

struct SweepRow {
    CaterpillarSpec spec;
    ClassLabel cls;
    std::optional<int> formula;       // empty: Unsupported or too small
    bool too_small = false;
    std::optional<int> oracle;        // empty: see oracle_marker
    std::string oracle_marker;        // "SKIPPED" or "BUDGET"
    std::optional<int> construction;  // empty mirrors formula
    bool agree = true;                // populated values pairwise equal
};

std::vector<SweepRow> run_family_sweep(const SweepOptions& options);

/// Header "spec;class;formula;oracle;construction;agree", one row per
/// spec, LF line endings, byte-stable across runs and thread counts.
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

/// Compact spec rendering for CSV cells: "[2,0,2]".
std::string spec_to_compact(const CaterpillarSpec& spec);

}  // namespace hamc::cli
