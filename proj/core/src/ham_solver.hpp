#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace hamc::detail {

inline std::uint32_t full_mask(int n) {
    return n >= 32 ? ~0u : ((1u << n) - 1u);
}

/// Single-component check over adjacency bitmasks, n <= 32.
bool masks_connected(int n, const std::uint32_t* adj);

/// No articulation vertex. Assumes a connected graph on n >= 3 vertices.
bool masks_biconnected(int n, const std::uint32_t* adj);

/// Exact spanning cycle/path decisions by dynamic programming over vertex
/// subsets with memoized reachable-endpoint sets. Dense tables, so n is
/// capped at 20; the buffer is reused across calls.
class SmallHamSolver {
public:
    static constexpr int kMaxVertices = 20;

    bool has_cycle(int n, const std::uint32_t* adj);
    bool has_path(int n, const std::uint32_t* adj);

    /// Empty when no spanning cycle/path exists. Deterministic: the
    /// lexicographically first backtrack at every step.
    std::vector<int> find_cycle(int n, const std::uint32_t* adj);
    std::vector<int> find_path(int n, const std::uint32_t* adj);

private:
    void run_cycle_dp(int n, const std::uint32_t* adj);
    void run_path_dp(int n, const std::uint32_t* adj);
    std::vector<std::uint32_t> dp_;
};

}  // namespace hamc::detail
