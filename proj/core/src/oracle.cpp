#include "hamc/oracle.hpp"

#include <atomic>
#include <bit>
#include <limits>
#include <thread>

#include "hamc/ham_check.hpp"
#include "ham_solver.hpp"

namespace hamc {

namespace {

constexpr int kMaxOracleVertices = 32;

int ceil_half(int x) { return x > 0 ? (x + 1) / 2 : 0; }

int component_count(int n, const std::vector<std::uint32_t>& adj) {
    std::uint32_t remaining = detail::full_mask(n);
    int comps = 0;
    while (remaining != 0) {
        ++comps;
        std::uint32_t seen = 1u << std::countr_zero(remaining);
        std::uint32_t frontier = seen;
        while (frontier != 0) {
            std::uint32_t next = 0;
            std::uint32_t f = frontier;
            while (f != 0) {
                const int v = std::countr_zero(f);
                f &= f - 1;
                next |= adj[static_cast<size_t>(v)];
            }
            frontier = next & ~seen;
            seen |= frontier;
        }
        remaining &= ~seen;
    }
    return comps;
}

/// Search state for one enumeration run. Tracks degrees plus a
/// forced-incidence deficiency: every degree-1 vertex needs two cycle
/// edges but its host can route at most two pendants, so
///   deficiency = 2*(leaves + 2*isolated)/... = 2*L1 + 2*L0 - sum_w min(2, pendants(w))
/// added incidences below that bound can never finish a spanning cycle.
struct SubsetSearch {
    int n = 0;
    bool path_target = false;
    const std::vector<Edge>* cands = nullptr;
    const std::vector<int>* last_inc = nullptr;
    int total = 0;  // number of candidates

    std::vector<std::uint32_t> adj;
    std::vector<int> deg;
    std::vector<int> pend;
    int lone = 0;
    int leafcnt = 0;
    int summin = 0;

    std::uint64_t nodes = 0;
    std::vector<int> chosen;
    detail::SmallHamSolver solver;

    const std::atomic<int>* best_first = nullptr;  // parallel abort channel
    int my_first = std::numeric_limits<int>::max();
    bool aborted = false;

    void init_from(const Graph& g) {
        n = g.vertex_count();
        adj.assign(static_cast<size_t>(n), 0u);
        for (const Edge& e : g.edges()) {
            adj[static_cast<size_t>(e.u)] |= 1u << e.v;
            adj[static_cast<size_t>(e.v)] |= 1u << e.u;
        }
        deg.assign(static_cast<size_t>(n), 0);
        for (int v = 0; v < n; ++v)
            deg[static_cast<size_t>(v)] = std::popcount(adj[static_cast<size_t>(v)]);
        pend.assign(static_cast<size_t>(n), 0);
        lone = leafcnt = summin = 0;
        for (int v = 0; v < n; ++v) {
            if (deg[static_cast<size_t>(v)] == 0) ++lone;
            if (deg[static_cast<size_t>(v)] == 1) {
                ++leafcnt;
                ++pend[static_cast<size_t>(std::countr_zero(adj[static_cast<size_t>(v)]))];
            }
        }
        for (int v = 0; v < n; ++v)
            summin += std::min(2, pend[static_cast<size_t>(v)]);
    }

    int deficiency() const { return 2 * leafcnt + 2 * lone - summin; }

    void inc_pend(int w) {
        if (pend[static_cast<size_t>(w)] < 2) ++summin;
        ++pend[static_cast<size_t>(w)];
    }
    void dec_pend(int w) {
        --pend[static_cast<size_t>(w)];
        if (pend[static_cast<size_t>(w)] < 2) --summin;
    }

    void apply(int u, int v) {
        for (int x : {u, v}) {
            const int d = deg[static_cast<size_t>(x)];
            if (d == 0) {
                --lone;
            } else if (d == 1) {
                dec_pend(std::countr_zero(adj[static_cast<size_t>(x)]));
                --leafcnt;
            }
        }
        adj[static_cast<size_t>(u)] |= 1u << v;
        adj[static_cast<size_t>(v)] |= 1u << u;
        ++deg[static_cast<size_t>(u)];
        ++deg[static_cast<size_t>(v)];
        if (deg[static_cast<size_t>(u)] == 1) {
            ++leafcnt;
            inc_pend(v);
        }
        if (deg[static_cast<size_t>(v)] == 1) {
            ++leafcnt;
            inc_pend(u);
        }
    }

    void undo(int u, int v) {
        for (int x : {u, v}) {
            const int other = x == u ? v : u;
            if (deg[static_cast<size_t>(x)] == 1) {
                --leafcnt;
                dec_pend(other);
            }
        }
        adj[static_cast<size_t>(u)] &= ~(1u << v);
        adj[static_cast<size_t>(v)] &= ~(1u << u);
        --deg[static_cast<size_t>(u)];
        --deg[static_cast<size_t>(v)];
        for (int x : {u, v}) {
            const int d = deg[static_cast<size_t>(x)];
            if (d == 0) {
                ++lone;
            } else if (d == 1) {
                ++leafcnt;
                inc_pend(std::countr_zero(adj[static_cast<size_t>(x)]));
            }
        }
    }

    bool deficiency_ok(int picks_left) const {
        const int allowance = path_target ? 2 : 0;
        return deficiency() <= 2 * picks_left + allowance;
    }

    bool full_test() {
        if (!detail::masks_connected(n, adj.data())) return false;
        if (!path_target && !detail::masks_biconnected(n, adj.data())) return false;
        if (n <= detail::SmallHamSolver::kMaxVertices)
            return path_target ? solver.has_path(n, adj.data())
                               : solver.has_cycle(n, adj.data());
        Graph g(n);
        for (int v = 0; v < n; ++v) {
            std::uint32_t nb = adj[static_cast<size_t>(v)] & ~((2u << v) - 1u);
            while (nb != 0) {
                g.add_edge(v, std::countr_zero(nb));
                nb &= nb - 1;
            }
        }
        return path_target ? hamiltonian_path(g).has_value()
                           : hamiltonian_cycle(g).has_value();
    }

    /// Lexicographic depth-first enumeration: at each candidate position,
    /// include before exclude. Excluding the last candidate that could
    /// still lift a deficient vertex kills the branch.
    bool dfs(int p, int picks_left) {
        for (;;) {
            ++nodes;
            if (best_first != nullptr && (nodes & 8191u) == 0 &&
                best_first->load(std::memory_order_relaxed) < my_first) {
                aborted = true;
                return false;
            }
            if (picks_left == 0) return full_test();
            if (!deficiency_ok(picks_left)) return false;
            if (total - p < picks_left) return false;
            const Edge& c = (*cands)[static_cast<size_t>(p)];
            apply(c.u, c.v);
            chosen.push_back(p);
            if (dfs(p + 1, picks_left - 1)) return true;
            chosen.pop_back();
            if (aborted) return false;
            undo(c.u, c.v);
            if (deg[static_cast<size_t>(c.u)] <= 1 &&
                (*last_inc)[static_cast<size_t>(c.u)] == p)
                return false;
            if (deg[static_cast<size_t>(c.v)] <= 1 &&
                (*last_inc)[static_cast<size_t>(c.v)] == p)
                return false;
            ++p;
        }
    }
};

OracleResult finish_result(const Graph& g, const std::vector<Edge>& cands,
                           const std::vector<int>& chosen, bool path_target,
                           std::uint64_t nodes) {
    OracleResult result;
    result.minimum = static_cast<int>(chosen.size());
    Graph augmented = g;
    for (int pos : chosen) {
        const Edge& e = cands[static_cast<size_t>(pos)];
        result.optimal_edges.push_back(e);
        augmented.add_edge(e.u, e.v);
    }
    if (path_target) {
        auto w = hamiltonian_path(augmented);
        result.witness = w ? w->order : std::vector<VertexId>{};
    } else {
        auto w = hamiltonian_cycle(augmented);
        result.witness = w ? w->order : std::vector<VertexId>{};
    }
    result.nodes_explored = nodes;
    return result;
}

std::optional<std::vector<int>> run_level_serial(const SubsetSearch& base, int k,
                                                 std::uint64_t& nodes) {
    SubsetSearch state = base;
    if (state.dfs(0, k)) {
        nodes += state.nodes;
        return state.chosen;
    }
    nodes += state.nodes;
    return std::nullopt;
}

std::optional<std::vector<int>> run_level_parallel(const SubsetSearch& base, int k,
                                                   int threads,
                                                   std::uint64_t& nodes) {
    // Partition by the first included candidate; every job enumerates its
    // own block in lexicographic order, so the smallest successful first
    // position carries the canonical subset.
    int max_first = base.total - k;
    for (int v = 0; v < base.n; ++v) {
        if (base.deg[static_cast<size_t>(v)] <= 1)
            max_first = std::min(max_first, (*base.last_inc)[static_cast<size_t>(v)]);
    }
    if (max_first < 0) return std::nullopt;

    std::vector<std::optional<std::vector<int>>> results(
        static_cast<size_t>(max_first) + 1);
    std::atomic<int> next{0};
    std::atomic<int> best{std::numeric_limits<int>::max()};
    std::atomic<std::uint64_t> node_sum{0};
    const int workers = std::max(1, std::min(threads, max_first + 1));

    auto worker = [&]() {
        for (;;) {
            const int first = next.fetch_add(1, std::memory_order_relaxed);
            if (first > max_first) return;
            if (first > best.load(std::memory_order_relaxed)) continue;
            SubsetSearch state = base;
            state.best_first = &best;
            state.my_first = first;
            const Edge& c = (*state.cands)[static_cast<size_t>(first)];
            state.apply(c.u, c.v);
            state.chosen.push_back(first);
            if (state.dfs(first + 1, k - 1)) {
                results[static_cast<size_t>(first)] = state.chosen;
                int cur = best.load(std::memory_order_relaxed);
                while (first < cur &&
                       !best.compare_exchange_weak(cur, first,
                                                   std::memory_order_relaxed)) {
                }
            }
            node_sum.fetch_add(state.nodes, std::memory_order_relaxed);
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    nodes += node_sum.load();

    for (const auto& r : results)
        if (r) return r;
    return std::nullopt;
}

std::optional<OracleResult> run_oracle(const Graph& g, bool path_target,
                                       const OracleOptions& opts) {
    SubsetSearch base;
    base.path_target = path_target;
    base.init_from(g);
    const std::vector<Edge> cands = g.non_edges();
    std::vector<int> last_inc(static_cast<size_t>(g.vertex_count()), -1);
    for (int p = 0; p < static_cast<int>(cands.size()); ++p) {
        last_inc[static_cast<size_t>(cands[static_cast<size_t>(p)].u)] = p;
        last_inc[static_cast<size_t>(cands[static_cast<size_t>(p)].v)] = p;
    }
    base.cands = &cands;
    base.last_inc = &last_inc;
    base.total = static_cast<int>(cands.size());

    const int comps = component_count(base.n, base.adj);
    int level = ceil_half(base.deficiency() - (path_target ? 2 : 0));
    if (path_target) {
        level = std::max(level, comps - 1);
    } else {
        level = std::max(level, ceil_half(static_cast<int>(g.leaves().size())));
        if (comps >= 2) level = std::max(level, comps);
    }
    level = std::max(level, 0);

    std::uint64_t nodes = 0;
    const int max_level = std::min(opts.budget, base.total);
    for (int k = level; k <= max_level; ++k) {
        std::optional<std::vector<int>> chosen;
        if (k == 0) {
            SubsetSearch state = base;
            ++state.nodes;
            if (state.full_test()) chosen = std::vector<int>{};
            nodes += state.nodes;
        } else if (opts.threads > 1) {
            chosen = run_level_parallel(base, k, opts.threads, nodes);
        } else {
            chosen = run_level_serial(base, k, nodes);
        }
        if (chosen) return finish_result(g, cands, *chosen, path_target, nodes);
    }
    return std::nullopt;
}

}  // namespace

std::optional<OracleResult> min_cycle_augmentation(const Graph& g,
                                                   const OracleOptions& opts) {
    if (g.vertex_count() < 3)
        throw TooSmallForCycle("spanning cycle needs at least 3 vertices");
    if (g.vertex_count() > kMaxOracleVertices)
        throw std::invalid_argument("oracle supports at most 32 vertices");
    if (opts.budget < 0) throw std::invalid_argument("negative budget");
    return run_oracle(g, /*path_target=*/false, opts);
}

std::optional<OracleResult> min_path_augmentation(const Graph& g,
                                                  const OracleOptions& opts) {
    if (g.vertex_count() < 1)
        throw std::invalid_argument("spanning path needs at least 1 vertex");
    if (g.vertex_count() > kMaxOracleVertices)
        throw std::invalid_argument("oracle supports at most 32 vertices");
    if (opts.budget < 0) throw std::invalid_argument("negative budget");
    if (g.vertex_count() == 1) return OracleResult{0, {}, {0}, 0};
    return run_oracle(g, /*path_target=*/true, opts);
}

bool already_hamiltonian(const Graph& g) {
    if (g.vertex_count() < 3) return false;
    return hamiltonian_cycle(g).has_value();
}

}  // namespace hamc
