#pragma once

#include <array>
#include <optional>
#include <vector>

#include "oddgirth/graph.hpp"

namespace oddgirth {

// Sentinel for "no walk of this parity exists". Kept negative so that any
// accidental arithmetic on it fails loudly in tests instead of silently
// comparing like a huge distance.
constexpr int kNoWalk = -1;

inline bool walk_exists(int d) { return d != kNoWalk; }

// Shortest even- and odd-length walk distances from one source.
struct ParityDistances {
    int source = 0;
    std::vector<int> even;
    std::vector<int> odd;
};

namespace detail {

// BFS over (vertex, parity) states. Neighbours are scanned in ascending
// order, so parent chains are deterministic. parents[v][p] is the
// predecessor vertex of state (v, p) or -1.
struct ParityBfs {
    std::array<std::vector<int>, 2> dist;
    std::array<std::vector<int>, 2> parent;

    ParityBfs(const Graph& g, int source) {
        const int n = g.vertex_count();
        dist[0].assign(static_cast<std::size_t>(n), kNoWalk);
        dist[1].assign(static_cast<std::size_t>(n), kNoWalk);
        parent[0].assign(static_cast<std::size_t>(n), -1);
        parent[1].assign(static_cast<std::size_t>(n), -1);

        std::vector<std::pair<int, int>> queue;
        queue.reserve(static_cast<std::size_t>(2 * n));
        dist[0][static_cast<std::size_t>(source)] = 0;
        queue.emplace_back(source, 0);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            auto [v, p] = queue[head];
            const int d = dist[static_cast<std::size_t>(p)][static_cast<std::size_t>(v)];
            const int q = 1 - p;
            g.for_each_neighbour(v, [&](int w) {
                auto& dw = dist[static_cast<std::size_t>(q)][static_cast<std::size_t>(w)];
                if (dw == kNoWalk) {
                    dw = d + 1;
                    parent[static_cast<std::size_t>(q)][static_cast<std::size_t>(w)] = v;
                    queue.emplace_back(w, q);
                }
            });
        }
    }
};

} // namespace detail

inline ParityDistances parity_bfs(const Graph& g, int source) {
    if (source < 0 || source >= g.vertex_count())
        throw IndexOutOfRange("parity_bfs source out of range");
    detail::ParityBfs bfs(g, source);
    return {source, std::move(bfs.dist[0]), std::move(bfs.dist[1])};
}

// Length of a shortest odd cycle; empty iff the graph is bipartite.
// A shortest odd closed walk is an odd cycle, so the minimum over all
// sources of the odd walk distance back to the source is exact.
inline std::optional<int> odd_girth(const Graph& g) {
    int best = kNoWalk;
    for (int s = 0; s < g.vertex_count(); ++s) {
        int d = parity_bfs(g, s).odd[static_cast<std::size_t>(s)];
        if (walk_exists(d) && (best == kNoWalk || d < best)) best = d;
    }
    if (best == kNoWalk) return std::nullopt;
    return best;
}

inline bool is_bipartite(const Graph& g) { return !odd_girth(g).has_value(); }

struct OddCycleWitness {
    std::vector<int> vertices; // cyclic order; length() consecutive edges
    int length() const { return static_cast<int>(vertices.size()); }
};

inline bool validate(const Graph& g, const OddCycleWitness& w) {
    const int len = w.length();
    if (len < 3 || len % 2 == 0) return false;
    std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
    for (int i = 0; i < len; ++i) {
        int v = w.vertices[static_cast<std::size_t>(i)];
        if (v < 0 || v >= g.vertex_count() || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = true;
        if (!g.has_edge(v, w.vertices[static_cast<std::size_t>((i + 1) % len)])) return false;
    }
    return true;
}

// Extracts a shortest odd cycle by following parity-BFS parents from the
// best source. Minimality guarantees the reconstructed closed walk is
// vertex-simple.
inline std::optional<OddCycleWitness> shortest_odd_cycle(const Graph& g) {
    int best = kNoWalk;
    int best_source = -1;
    for (int s = 0; s < g.vertex_count(); ++s) {
        int d = parity_bfs(g, s).odd[static_cast<std::size_t>(s)];
        if (walk_exists(d) && (best == kNoWalk || d < best)) {
            best = d;
            best_source = s;
        }
    }
    if (best_source < 0) return std::nullopt;

    detail::ParityBfs bfs(g, best_source);
    OddCycleWitness w;
    int v = best_source;
    int p = 1;
    while (!(v == best_source && p == 0)) {
        w.vertices.push_back(v);
        int u = bfs.parent[static_cast<std::size_t>(p)][static_cast<std::size_t>(v)];
        v = u;
        p = 1 - p;
    }
    return w;
}

namespace detail {

// Core predicate without precondition checks: adding {u, v} closes an odd
// cycle of length <= 2k-1 iff some even u-v walk has length <= 2k-2. Under
// odd girth >= 2k+1 such a walk shortens to an even path of the same
// parity, so walk distances decide the question exactly.
inline bool creates_short_odd_cycle_unchecked(const Graph& g, int u, int v, int k) {
    int d = parity_bfs(g, u).even[static_cast<std::size_t>(v)];
    return walk_exists(d) && d <= 2 * k - 2;
}

} // namespace detail

inline bool creates_short_odd_cycle(const Graph& g, int u, int v, int k) {
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
        throw IndexOutOfRange("creates_short_odd_cycle endpoint out of range");
    if (u == v) throw PreconditionViolated("creates_short_odd_cycle needs two distinct vertices");
    if (g.has_edge(u, v)) throw PreconditionViolated("edge already present");
    if (k < 2) throw PreconditionViolated("parameter k must be at least 2");
    auto og = odd_girth(g);
    if (og && *og < 2 * k + 1)
        throw PreconditionViolated("graph has odd girth " + std::to_string(*og) +
                                   " < " + std::to_string(2 * k + 1));
    return detail::creates_short_odd_cycle_unchecked(g, u, v, k);
}

} // namespace oddgirth
