#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "oddgirth/graph.hpp"

namespace oddgirth {

namespace detail {

// Backtracking search for an edge-preserving bijection g -> h that extends
// the partial assignments in `image`. Vertices of g are mapped in order of
// `order`; candidates must match degrees and be consistent with every
// already-mapped vertex (edge iff edge).
inline bool extend_isomorphism(const Graph& g, const Graph& h, const std::vector<int>& order,
                               std::size_t pos, std::vector<int>& image, std::vector<bool>& used) {
    if (pos == order.size()) return true;
    const int u = order[pos];
    for (int c = 0; c < h.vertex_count(); ++c) {
        if (used[static_cast<std::size_t>(c)]) continue;
        if (g.degree(u) != h.degree(c)) continue;
        bool ok = true;
        for (std::size_t i = 0; i < pos && ok; ++i) {
            const int w = order[i];
            if (g.has_edge(u, w) != h.has_edge(c, image[static_cast<std::size_t>(w)])) ok = false;
        }
        if (!ok) continue;
        image[static_cast<std::size_t>(u)] = c;
        used[static_cast<std::size_t>(c)] = true;
        if (extend_isomorphism(g, h, order, pos + 1, image, used)) return true;
        used[static_cast<std::size_t>(c)] = false;
    }
    image[static_cast<std::size_t>(u)] = -1;
    return false;
}

// Vertex order for the bijection search: rarest degree first, then by
// index. Puts the most constrained vertices early.
inline std::vector<int> isomorphism_order(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> degree_count(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) ++degree_count[static_cast<std::size_t>(g.degree(v))];
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return degree_count[static_cast<std::size_t>(g.degree(a))] <
               degree_count[static_cast<std::size_t>(g.degree(b))];
    });
    return order;
}

} // namespace detail

// Exhaustive permutation search with degree pruning; factorial worst case,
// so gated by max_n. The default admits every pair the acceptance fixtures
// compare (up to the 12-vertex Moebius ladder).
inline bool is_isomorphic(const Graph& g, const Graph& h, int max_n = 12) {
    if (g.vertex_count() != h.vertex_count()) return false;
    if (g.edge_count() != h.edge_count()) return false;
    const int n = g.vertex_count();
    if (n > max_n)
        throw TooLarge("isomorphism test limited to " + std::to_string(max_n) + " vertices");

    std::vector<int> dg(static_cast<std::size_t>(n)), dh(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        dg[static_cast<std::size_t>(v)] = g.degree(v);
        dh[static_cast<std::size_t>(v)] = h.degree(v);
    }
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return false;

    std::vector<int> image(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    return detail::extend_isomorphism(g, h, detail::isomorphism_order(g), 0, image, used);
}

// True iff some automorphism of g maps a to b.
inline bool exists_automorphism_mapping(const Graph& g, int a, int b) {
    if (g.degree(a) != g.degree(b)) return false;
    const int n = g.vertex_count();
    std::vector<int> order = detail::isomorphism_order(g);
    order.erase(std::find(order.begin(), order.end(), a));
    order.insert(order.begin(), a);
    std::vector<int> image(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    image[static_cast<std::size_t>(a)] = b;
    used[static_cast<std::size_t>(b)] = true;
    return detail::extend_isomorphism(g, g, order, 1, image, used);
}

// One representative per vertex orbit of the automorphism group, each the
// smallest index in its orbit. Used for symmetry breaking in target-side
// searches.
inline std::vector<int> orbit_representatives(const Graph& g) {
    std::vector<int> reps;
    for (int v = 0; v < g.vertex_count(); ++v) {
        bool fresh = true;
        for (int r : reps)
            if (exists_automorphism_mapping(g, r, v)) {
                fresh = false;
                break;
            }
        if (fresh) reps.push_back(v);
    }
    return reps;
}

// Canonical key: the lexicographically smallest upper-triangle adjacency
// bitstring over all degree-ascending relabelings. The candidate set of
// relabelings is an isomorphism invariant, so equal keys mean isomorphic
// graphs. Exponential in degree-class sizes; used only for small-n
// enumeration dedupe.
inline std::vector<std::uint64_t> canonical_key(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> sorted(static_cast<std::size_t>(n));
    std::iota(sorted.begin(), sorted.end(), 0);
    std::sort(sorted.begin(), sorted.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) < g.degree(b);
        return a < b;
    });

    // Split into runs of equal degree; within-class order varies freely.
    std::vector<std::vector<int>> classes;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && g.degree(sorted[j]) == g.degree(sorted[i])) ++j;
        classes.emplace_back(sorted.begin() + static_cast<std::ptrdiff_t>(i),
                             sorted.begin() + static_cast<std::ptrdiff_t>(j));
        i = j;
    }

    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::vector<std::uint64_t> best(bits / 64 + 1, ~std::uint64_t{0});
    std::vector<std::uint64_t> cur(best.size());
    std::vector<int> perm(static_cast<std::size_t>(n));

    auto evaluate = [&]() {
        std::fill(cur.begin(), cur.end(), 0);
        std::size_t bit = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++bit)
                if (g.has_edge(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]))
                    cur[bit / 64] |= std::uint64_t{1} << (bit % 64);
        if (cur < best) best = cur;
    };

    auto rec = [&](auto&& self, std::size_t ci, std::size_t offset) -> void {
        if (ci == classes.size()) {
            evaluate();
            return;
        }
        std::vector<int> cls = classes[ci];
        do {
            std::copy(cls.begin(), cls.end(), perm.begin() + static_cast<std::ptrdiff_t>(offset));
            self(self, ci + 1, offset + cls.size());
        } while (std::next_permutation(cls.begin(), cls.end()));
    };
    rec(rec, 0, 0);
    return best;
}

} // namespace oddgirth
