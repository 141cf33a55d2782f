#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hamc/graph.hpp"

namespace hamc {

struct CycleWitness {
    std::vector<VertexId> order;
};

struct PathWitness {
    std::vector<VertexId> order;
};

/// Exact decision: a witness iff a spanning cycle exists, nothing
/// otherwise. Graphs on fewer than three vertices never qualify.
/// Deterministic: the same graph always yields the same witness.
std::optional<CycleWitness> hamiltonian_cycle(const Graph& g);

/// Exact spanning-path decision; a single vertex is a trivial path.
std::optional<PathWitness> hamiltonian_path(const Graph& g);

/// True iff order is a permutation of all vertices and each cyclically
/// consecutive pair is an edge. Malformed input returns false.
bool verify_cycle(const Graph& g, std::span<const VertexId> order);

/// Path variant: no closing edge required.
bool verify_path(const Graph& g, std::span<const VertexId> order);

}  // namespace hamc
