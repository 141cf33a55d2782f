#include "hamc/ham_check.hpp"

#include <algorithm>
#include <map>

#include "ham_solver.hpp"

namespace hamc {

namespace {

constexpr int kDpLimit = 24;  // subset DP below, backtracking above

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint32_t> adj(static_cast<size_t>(g.vertex_count()), 0u);
    for (const Edge& e : g.edges()) {
        adj[static_cast<size_t>(e.u)] |= 1u << e.v;
        adj[static_cast<size_t>(e.v)] |= 1u << e.u;
    }
    return adj;
}

// Articulation scan over adjacency lists, any vertex count.
struct ListArtDfs {
    const std::vector<std::vector<VertexId>>& adj;
    std::vector<int> disc, low;
    int timer = 0;
    bool has_articulation = false;

    explicit ListArtDfs(const std::vector<std::vector<VertexId>>& a)
        : adj(a), disc(a.size(), -1), low(a.size(), -1) {}

    void run(int u, int parent) {
        disc[static_cast<size_t>(u)] = low[static_cast<size_t>(u)] = timer++;
        int children = 0;
        for (VertexId v : adj[static_cast<size_t>(u)]) {
            if (disc[static_cast<size_t>(v)] < 0) {
                ++children;
                run(v, u);
                low[static_cast<size_t>(u)] =
                    std::min(low[static_cast<size_t>(u)], low[static_cast<size_t>(v)]);
                if (parent >= 0 &&
                    low[static_cast<size_t>(v)] >= disc[static_cast<size_t>(u)])
                    has_articulation = true;
            } else if (v != parent) {
                low[static_cast<size_t>(u)] =
                    std::min(low[static_cast<size_t>(u)], disc[static_cast<size_t>(v)]);
            }
        }
        if (parent < 0 && children > 1) has_articulation = true;
    }
};

bool has_articulation(const Graph& g) {
    if (g.vertex_count() < 3) return false;
    auto adj = g.adjacency();
    ListArtDfs dfs(adj);
    dfs.run(0, -1);
    return dfs.has_articulation;
}

// Subset DP over a sparse mask table; covers 21..24 vertices where the
// dense table would be oversized.
std::vector<int> map_dp_cycle(int n, const std::vector<std::uint32_t>& adj) {
    const std::uint32_t full = detail::full_mask(n);
    std::map<std::uint32_t, std::uint32_t> dp;
    dp[1] = 1u;
    for (auto it = dp.begin(); it != dp.end(); ++it) {
        std::uint32_t eps = it->second;
        const std::uint32_t mask = it->first;
        while (eps != 0) {
            const int e = std::countr_zero(eps);
            eps &= eps - 1;
            std::uint32_t ext = adj[static_cast<size_t>(e)] & ~mask;
            while (ext != 0) {
                const int w = std::countr_zero(ext);
                ext &= ext - 1;
                dp[mask | (1u << w)] |= 1u << w;
            }
        }
    }
    auto fit = dp.find(full);
    if (fit == dp.end() || (fit->second & adj[0]) == 0) return {};
    std::vector<int> order;
    int cur = std::countr_zero(fit->second & adj[0]);
    std::uint32_t mask = full;
    while (cur != 0) {
        order.push_back(cur);
        const std::uint32_t prev_mask = mask ^ (1u << cur);
        const std::uint32_t preds = dp[prev_mask] & adj[static_cast<size_t>(cur)];
        cur = std::countr_zero(preds);
        mask = prev_mask;
    }
    order.push_back(0);
    std::reverse(order.begin(), order.end());
    return order;
}

std::vector<int> map_dp_path(int n, const std::vector<std::uint32_t>& adj) {
    const std::uint32_t full = detail::full_mask(n);
    std::map<std::uint32_t, std::uint32_t> dp;
    for (int v = 0; v < n; ++v) dp[1u << v] = 1u << v;
    for (auto it = dp.begin(); it != dp.end(); ++it) {
        std::uint32_t eps = it->second;
        const std::uint32_t mask = it->first;
        while (eps != 0) {
            const int e = std::countr_zero(eps);
            eps &= eps - 1;
            std::uint32_t ext = adj[static_cast<size_t>(e)] & ~mask;
            while (ext != 0) {
                const int w = std::countr_zero(ext);
                ext &= ext - 1;
                dp[mask | (1u << w)] |= 1u << w;
            }
        }
    }
    auto fit = dp.find(full);
    if (fit == dp.end() || fit->second == 0) return {};
    std::vector<int> order;
    int cur = std::countr_zero(fit->second);
    std::uint32_t mask = full;
    while (std::popcount(mask) > 1) {
        order.push_back(cur);
        const std::uint32_t prev_mask = mask ^ (1u << cur);
        const std::uint32_t preds = dp[prev_mask] & adj[static_cast<size_t>(cur)];
        cur = std::countr_zero(preds);
        mask = prev_mask;
    }
    order.push_back(cur);
    std::reverse(order.begin(), order.end());
    return order;
}

// Depth-first backtracking for graphs past the DP size. A vertex whose
// unused neighbors are exhausted can only be entered directly from the
// current endpoint, so it forces the next move; two such vertices (or
// one out of reach) kill the branch.
struct Backtracker {
    const std::vector<std::vector<VertexId>>& adj;  // sorted neighbor lists
    int n;
    std::vector<char> used;
    std::vector<int> avail;  // unused-neighbor counts
    std::vector<int> order;

    Backtracker(const std::vector<std::vector<VertexId>>& a, int vertex_count)
        : adj(a), n(vertex_count), used(a.size(), 0), avail(a.size(), 0) {
        for (int v = 0; v < n; ++v)
            avail[static_cast<size_t>(v)] = static_cast<int>(adj[static_cast<size_t>(v)].size());
    }

    void take(int v) {
        used[static_cast<size_t>(v)] = 1;
        order.push_back(v);
        for (VertexId w : adj[static_cast<size_t>(v)]) --avail[static_cast<size_t>(w)];
    }

    void untake(int v) {
        for (VertexId w : adj[static_cast<size_t>(v)]) ++avail[static_cast<size_t>(w)];
        order.pop_back();
        used[static_cast<size_t>(v)] = 0;
    }

    bool adjacent(int u, int v) const {
        const auto& nb = adj[static_cast<size_t>(u)];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    // -1: no constraint, -2: dead branch, otherwise the forced next vertex
    int forced_move(int endpoint) const {
        int forced = -1;
        for (int x = 0; x < n; ++x) {
            if (used[static_cast<size_t>(x)] || avail[static_cast<size_t>(x)] > 0)
                continue;
            if (!adjacent(endpoint, x)) return -2;
            if (forced >= 0) return -2;
            forced = x;
        }
        return forced;
    }

    bool cycle_dfs(int v) {
        if (static_cast<int>(order.size()) == n) return adjacent(v, order.front());
        const int forced = forced_move(v);
        if (forced == -2) return false;
        if (forced >= 0) {
            take(forced);
            if (cycle_dfs(forced)) return true;
            untake(forced);
            return false;
        }
        for (VertexId w : adj[static_cast<size_t>(v)]) {
            if (used[static_cast<size_t>(w)]) continue;
            take(w);
            if (cycle_dfs(w)) return true;
            untake(w);
        }
        return false;
    }

    bool path_dfs(int v) {
        if (static_cast<int>(order.size()) == n) return true;
        const int forced = forced_move(v);
        if (forced == -2) return false;
        if (forced >= 0) {
            take(forced);
            if (path_dfs(forced)) return true;
            untake(forced);
            return false;
        }
        for (VertexId w : adj[static_cast<size_t>(v)]) {
            if (used[static_cast<size_t>(w)]) continue;
            take(w);
            if (path_dfs(w)) return true;
            untake(w);
        }
        return false;
    }
};

std::vector<int> backtrack_cycle(const Graph& g) {
    auto adj = g.adjacency();
    Backtracker bt(adj, g.vertex_count());
    bt.take(0);
    if (bt.cycle_dfs(0)) return bt.order;
    return {};
}

std::vector<int> backtrack_path(const Graph& g) {
    auto adj = g.adjacency();
    for (int s = 0; s < g.vertex_count(); ++s) {
        Backtracker bt(adj, g.vertex_count());
        bt.take(s);
        if (bt.path_dfs(s)) return bt.order;
    }
    return {};
}

}  // namespace

std::optional<CycleWitness> hamiltonian_cycle(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 3) return std::nullopt;
    for (VertexId v = 0; v < n; ++v)
        if (g.degree(v) <= 1) return std::nullopt;
    if (!g.is_connected()) return std::nullopt;
    if (has_articulation(g)) return std::nullopt;

    std::vector<int> order;
    if (n <= detail::SmallHamSolver::kMaxVertices) {
        auto adj = adjacency_masks(g);
        detail::SmallHamSolver solver;
        order = solver.find_cycle(n, adj.data());
    } else if (n <= kDpLimit) {
        order = map_dp_cycle(n, adjacency_masks(g));
    } else {
        order = backtrack_cycle(g);
    }
    if (order.empty()) return std::nullopt;
    return CycleWitness{std::move(order)};
}

std::optional<PathWitness> hamiltonian_path(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return std::nullopt;
    if (n == 1) return PathWitness{{0}};
    if (!g.is_connected()) return std::nullopt;
    int leaf_like = 0;
    for (VertexId v = 0; v < n; ++v)
        if (g.degree(v) <= 1) ++leaf_like;
    if (leaf_like > 2) return std::nullopt;

    std::vector<int> order;
    if (n <= detail::SmallHamSolver::kMaxVertices) {
        auto adj = adjacency_masks(g);
        detail::SmallHamSolver solver;
        order = solver.find_path(n, adj.data());
    } else if (n <= kDpLimit) {
        order = map_dp_path(n, adjacency_masks(g));
    } else {
        order = backtrack_path(g);
    }
    if (order.empty()) return std::nullopt;
    return PathWitness{std::move(order)};
}

namespace {

bool is_permutation_of_all(const Graph& g, std::span<const VertexId> order) {
    if (static_cast<int>(order.size()) != g.vertex_count()) return false;
    std::vector<char> seen(order.size(), 0);
    for (VertexId v : order) {
        if (v < 0 || v >= g.vertex_count()) return false;
        if (seen[static_cast<size_t>(v)]) return false;
        seen[static_cast<size_t>(v)] = 1;
    }
    return true;
}

}  // namespace

bool verify_cycle(const Graph& g, std::span<const VertexId> order) {
    if (g.vertex_count() < 3) return false;
    if (!is_permutation_of_all(g, order)) return false;
    for (size_t i = 0; i < order.size(); ++i) {
        const VertexId a = order[i];
        const VertexId b = order[(i + 1) % order.size()];
        if (!g.has_edge(a, b)) return false;
    }
    return true;
}

bool verify_path(const Graph& g, std::span<const VertexId> order) {
    if (g.vertex_count() == 0) return false;
    if (!is_permutation_of_all(g, order)) return false;
    for (size_t i = 0; i + 1 < order.size(); ++i)
        if (!g.has_edge(order[i], order[i + 1])) return false;
    return true;
}

}  // namespace hamc
