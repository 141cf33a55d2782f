#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hamc/graph.hpp"

namespace hamc {

/// Exact minimum augmentation: the true count, the lexicographically
/// least optimal edge set, and a witness over the augmented graph.
struct OracleResult {
    int minimum = 0;
    std::vector<Edge> optimal_edges;
    std::vector<VertexId> witness;
    std::uint64_t nodes_explored = 0;
};

struct OracleOptions {
    int budget = 8;
    int threads = 1;  // > 1 partitions the search by first candidate
};

/// Iterative deepening over added-edge counts; each level enumerates
/// candidate subsets of the non-edges in lexicographic order, so the
/// reported optimum is canonical. Returns nullopt when the minimum
/// exceeds the budget. Throws TooSmallForCycle below three vertices;
/// graphs beyond 32 vertices are out of the oracle's reach.
std::optional<OracleResult> min_cycle_augmentation(const Graph& g,
                                                   const OracleOptions& opts = {});

/// Spanning-path variant; a single vertex needs nothing.
std::optional<OracleResult> min_path_augmentation(const Graph& g,
                                                  const OracleOptions& opts = {});

/// True iff min_cycle_augmentation would report zero.
bool already_hamiltonian(const Graph& g);

}  // namespace hamc
