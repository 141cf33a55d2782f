#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

#include "hamc/errors.hpp"

namespace hamc {

using VertexId = int;

/// Undirected edge, stored with the smaller endpoint first so that
/// equality and lexicographic comparison are well defined.
struct Edge {
    VertexId u;
    VertexId v;

    Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b) throw InvalidEdge("loop edge " + std::to_string(a));
        if (a < 0 || b < 0) throw InvalidEdge("negative vertex index");
    }

    auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph: vertex count plus a sorted edge set.
/// Queries are const and the value is safe to share across threads once
/// construction is finished.
class Graph {
public:
    explicit Graph(int vertex_count);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// Inserts the edge; returns false (and leaves the graph unchanged)
    /// when the edge is already present. Loops and out-of-range
    /// endpoints throw InvalidEdge.
    bool add_edge(VertexId u, VertexId v);

    /// Never throws: loops and out-of-range queries are simply absent.
    bool has_edge(VertexId u, VertexId v) const;

    int degree(VertexId v) const;

    /// Degree-1 vertices, ascending.
    std::vector<VertexId> leaves() const;

    /// All vertex pairs not in the edge set, lexicographically sorted.
    std::vector<Edge> non_edges() const;

    /// One component; graphs on at most one vertex count as connected.
    bool is_connected() const;

    /// Sorted, deterministic iteration order.
    const std::set<Edge>& edges() const { return edges_; }

    /// Sorted neighbor lists, built on demand.
    std::vector<std::vector<VertexId>> adjacency() const;

private:
    int vertex_count_;
    std::set<Edge> edges_;
    std::vector<int> degree_;
};

/// Edge-list text format: first line "n m", then m lines "u v" with
/// 0-based indices. Duplicate or loop lines are a parse error.
Graph parse_edge_list(const std::string& text);
std::string format_edge_list(const Graph& g);

}  // namespace hamc
