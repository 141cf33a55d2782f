#include "ham_solver.hpp"

#include <algorithm>
#include <cstring>

namespace hamc::detail {

bool masks_connected(int n, const std::uint32_t* adj) {
    if (n <= 1) return true;
    std::uint32_t seen = 1u, frontier = 1u;
    while (frontier != 0) {
        std::uint32_t next = 0;
        std::uint32_t f = frontier;
        while (f != 0) {
            const int v = std::countr_zero(f);
            f &= f - 1;
            next |= adj[v];
        }
        frontier = next & ~seen;
        seen |= frontier;
    }
    return seen == full_mask(n);
}

namespace {

struct ArtDfs {
    const std::uint32_t* adj;
    int timer = 0;
    int disc[32];
    int low[32];
    bool has_articulation = false;

    void run(int u, int parent) {
        disc[u] = low[u] = timer++;
        int children = 0;
        std::uint32_t nb = adj[u];
        while (nb != 0) {
            const int v = std::countr_zero(nb);
            nb &= nb - 1;
            if (disc[v] < 0) {
                ++children;
                run(v, u);
                low[u] = std::min(low[u], low[v]);
                if (parent >= 0 && low[v] >= disc[u]) has_articulation = true;
            } else if (v != parent) {
                low[u] = std::min(low[u], disc[v]);
            }
        }
        if (parent < 0 && children > 1) has_articulation = true;
    }
};

}  // namespace

bool masks_biconnected(int n, const std::uint32_t* adj) {
    ArtDfs dfs;
    dfs.adj = adj;
    std::fill(dfs.disc, dfs.disc + n, -1);
    dfs.run(0, -1);
    return !dfs.has_articulation;
}

void SmallHamSolver::run_cycle_dp(int n, const std::uint32_t* adj) {
    const std::uint32_t full = full_mask(n);
    dp_.assign(static_cast<size_t>(full) + 1, 0u);
    dp_[1] = 1u;  // path of just vertex 0, endpoint 0
    for (std::uint32_t mask = 1; mask <= full; mask += 2) {
        std::uint32_t eps = dp_[mask];
        while (eps != 0) {
            const int e = std::countr_zero(eps);
            eps &= eps - 1;
            std::uint32_t ext = adj[e] & ~mask;
            while (ext != 0) {
                const int w = std::countr_zero(ext);
                ext &= ext - 1;
                dp_[mask | (1u << w)] |= (1u << w);
            }
        }
    }
}

void SmallHamSolver::run_path_dp(int n, const std::uint32_t* adj) {
    const std::uint32_t full = full_mask(n);
    dp_.assign(static_cast<size_t>(full) + 1, 0u);
    for (int v = 0; v < n; ++v) dp_[1u << v] = 1u << v;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::uint32_t eps = dp_[mask];
        while (eps != 0) {
            const int e = std::countr_zero(eps);
            eps &= eps - 1;
            std::uint32_t ext = adj[e] & ~mask;
            while (ext != 0) {
                const int w = std::countr_zero(ext);
                ext &= ext - 1;
                dp_[mask | (1u << w)] |= (1u << w);
            }
        }
    }
}

bool SmallHamSolver::has_cycle(int n, const std::uint32_t* adj) {
    run_cycle_dp(n, adj);
    return (dp_[full_mask(n)] & adj[0]) != 0;
}

bool SmallHamSolver::has_path(int n, const std::uint32_t* adj) {
    run_path_dp(n, adj);
    return dp_[full_mask(n)] != 0;
}

std::vector<int> SmallHamSolver::find_cycle(int n, const std::uint32_t* adj) {
    run_cycle_dp(n, adj);
    const std::uint32_t full = full_mask(n);
    const std::uint32_t closers = dp_[full] & adj[0];
    if (closers == 0) return {};
    std::vector<int> order;
    order.reserve(static_cast<size_t>(n));
    int cur = std::countr_zero(closers);
    std::uint32_t mask = full;
    while (cur != 0) {
        order.push_back(cur);
        const std::uint32_t prev_mask = mask ^ (1u << cur);
        const std::uint32_t preds = dp_[prev_mask] & adj[cur];
        cur = std::countr_zero(preds);
        mask = prev_mask;
    }
    order.push_back(0);
    std::reverse(order.begin(), order.end());
    return order;
}

std::vector<int> SmallHamSolver::find_path(int n, const std::uint32_t* adj) {
    run_path_dp(n, adj);
    const std::uint32_t full = full_mask(n);
    if (dp_[full] == 0) return {};
    std::vector<int> order;
    order.reserve(static_cast<size_t>(n));
    int cur = std::countr_zero(dp_[full]);
    std::uint32_t mask = full;
    while (std::popcount(mask) > 1) {
        order.push_back(cur);
        const std::uint32_t prev_mask = mask ^ (1u << cur);
        const std::uint32_t preds = dp_[prev_mask] & adj[cur];
        cur = std::countr_zero(preds);
        mask = prev_mask;
    }
    order.push_back(cur);
    std::reverse(order.begin(), order.end());
    return order;
}

}  // namespace hamc::detail
