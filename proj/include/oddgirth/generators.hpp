#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "oddgirth/graph.hpp"

namespace oddgirth {

// Vertex labelings of all generators are fixed so serialized fixtures are
// stable: cycles run 0..r-1 in order, blow-up classes occupy contiguous
// index ranges in class order.

inline Graph gen_cycle(int r) {
    if (r < 3) throw ParamTooSmall("cycle length must be at least 3, got " + std::to_string(r));
    Graph g(r);
    for (int i = 0; i < r; ++i) g.add_edge(i, (i + 1) % r);
    return g;
}

inline Graph gen_complete(int r) {
    if (r < 1) throw ParamTooSmall("complete graph needs at least 1 vertex");
    Graph g(r);
    for (int u = 0; u < r; ++u)
        for (int v = u + 1; v < r; ++v) g.add_edge(u, v);
    return g;
}

// Cycle of length r plus all main diagonals {i, i + r/2}. 3-regular.
inline Graph gen_mobius_ladder(int r) {
    if (r % 2 != 0) throw OddParam("Moebius ladder length must be even, got " + std::to_string(r));
    if (r < 6) throw ParamTooSmall("Moebius ladder length must be at least 6, got " + std::to_string(r));
    Graph g = gen_cycle(r);
    for (int i = 0; i < r / 2; ++i) g.add_edge(i, i + r / 2);
    return g;
}

// F(l, k): cycle of length (2k-1)(l-1)+2 with chords joining vertices at
// cycle distance j(2k-1)+1 for j = 1..floor((l-1)/2). l-regular, odd girth
// 2k+1. F(2,k) is the (2k+1)-cycle and F(3,k) the Moebius ladder on 4k
// vertices. k = 2 is accepted as well; the defining arithmetic is
// consistent there (F(2,2) = C5, F(3,2) = M8).
inline Graph gen_f_family(int ell, int k) {
    if (ell < 2) throw ParamTooSmall("F family needs degree parameter >= 2, got " + std::to_string(ell));
    if (k < 2) throw ParamTooSmall("F family needs girth parameter >= 2, got " + std::to_string(k));
    const int n = (2 * k - 1) * (ell - 1) + 2;
    Graph g = gen_cycle(n);
    for (int j = 1; j <= (ell - 1) / 2; ++j) {
        const int d = j * (2 * k - 1) + 1;
        for (int i = 0; i < n; ++i) g.add_edge(i, (i + d) % n);
    }
    return g;
}

struct BlowupResult {
    Graph graph;
    // vertex_class[x] is the base vertex whose class contains x; this map
    // is a surjective homomorphism onto the base graph.
    std::vector<int> vertex_class;
};

// Replaces vertex u of the base by an independent class of sizes[u]
// vertices and each base edge by a complete bipartite join. Class u
// occupies the contiguous index range starting at sum(sizes[0..u-1]).
inline BlowupResult gen_blowup(const Graph& base, const std::vector<int>& sizes) {
    if (static_cast<int>(sizes.size()) != base.vertex_count())
        throw SizeMismatch("need one class size per base vertex: " + std::to_string(sizes.size()) +
                           " sizes for " + std::to_string(base.vertex_count()) + " vertices");
    for (int s : sizes)
        if (s < 1) throw ZeroClass("class sizes must be positive");

    std::vector<int> offset(sizes.size() + 1, 0);
    std::partial_sum(sizes.begin(), sizes.end(), offset.begin() + 1);
    const int n = offset.back();

    Graph g(n);
    std::vector<int> cls(static_cast<std::size_t>(n));
    for (int u = 0; u < base.vertex_count(); ++u)
        for (int i = 0; i < sizes[static_cast<std::size_t>(u)]; ++i)
            cls[static_cast<std::size_t>(offset[static_cast<std::size_t>(u)] + i)] = u;

    for (auto [u, v] : base.edge_list())
        for (int x = offset[static_cast<std::size_t>(u)]; x < offset[static_cast<std::size_t>(u) + 1]; ++x)
            for (int y = offset[static_cast<std::size_t>(v)]; y < offset[static_cast<std::size_t>(v) + 1]; ++y)
                g.add_edge(x, y);

    return {std::move(g), std::move(cls)};
}

// Mycielskian of C5: vertices 0..4 the cycle, 5..9 the shadow of 0..4,
// 10 the apex. 11 vertices, 20 edges, odd girth 5, chromatic number 4.
inline Graph gen_grotzsch() {
    Graph g(11);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, (i + 1) % 5);
        g.add_edge(5 + i, (i + 4) % 5);
        g.add_edge(10, 5 + i);
    }
    return g;
}

} // namespace oddgirth
