#include "hamc/graph.hpp"

#include <sstream>

namespace hamc {

Graph::Graph(int vertex_count) : vertex_count_(vertex_count) {
    if (vertex_count < 0) throw InvalidVertex("negative vertex count");
    degree_.assign(static_cast<size_t>(vertex_count), 0);
}

bool Graph::add_edge(VertexId u, VertexId v) {
    if (u == v) throw InvalidEdge("loop edge " + std::to_string(u));
    if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_)
        throw InvalidEdge("edge endpoint out of range: " + std::to_string(u) +
                          " " + std::to_string(v));
    auto [it, inserted] = edges_.insert(Edge(u, v));
    if (inserted) {
        ++degree_[static_cast<size_t>(u)];
        ++degree_[static_cast<size_t>(v)];
    }
    return inserted;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    if (u == v) return false;
    if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_) return false;
    return edges_.contains(Edge(u, v));
}

int Graph::degree(VertexId v) const {
    if (v < 0 || v >= vertex_count_)
        throw InvalidVertex("vertex out of range: " + std::to_string(v));
    return degree_[static_cast<size_t>(v)];
}

std::vector<VertexId> Graph::leaves() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < vertex_count_; ++v)
        if (degree_[static_cast<size_t>(v)] == 1) out.push_back(v);
    return out;
}

std::vector<Edge> Graph::non_edges() const {
    std::vector<Edge> out;
    for (VertexId u = 0; u < vertex_count_; ++u)
        for (VertexId v = u + 1; v < vertex_count_; ++v)
            if (!edges_.contains(Edge(u, v))) out.emplace_back(u, v);
    return out;
}

bool Graph::is_connected() const {
    if (vertex_count_ <= 1) return true;
    auto adj = adjacency();
    std::vector<char> seen(static_cast<size_t>(vertex_count_), 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w : adj[static_cast<size_t>(v)]) {
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == vertex_count_;
}

std::vector<std::vector<VertexId>> Graph::adjacency() const {
    std::vector<std::vector<VertexId>> adj(static_cast<size_t>(vertex_count_));
    for (const Edge& e : edges_) {
        adj[static_cast<size_t>(e.u)].push_back(e.v);
        adj[static_cast<size_t>(e.v)].push_back(e.u);
    }
    return adj;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    long long n = -1, m = -1;
    if (!(in >> n >> m)) throw ParseError("edge list: missing header 'n m'");
    if (n < 0 || m < 0) throw ParseError("edge list: negative header values");
    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!(in >> u >> v))
            throw ParseError("edge list: expected " + std::to_string(m) +
                             " edges, got " + std::to_string(i));
        if (u == v) throw ParseError("edge list: loop edge " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("edge list: endpoint out of range on edge " +
                             std::to_string(i));
        if (!g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v)))
            throw ParseError("edge list: duplicate edge " + std::to_string(u) +
                             " " + std::to_string(v));
    }
    std::string trailing;
    if (in >> trailing) throw ParseError("edge list: trailing content '" + trailing + "'");
    return g;
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

}  // namespace hamc
