#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "oddgirth/errors.hpp"

namespace oddgirth {

// Everything here is desk-scale; the vertex bound keeps neighbourhood
// sets word-packed and all searches honest. ODDGIRTH_MAX_N overrides it.
inline int vertex_limit() {
    if (const char* env = std::getenv("ODDGIRTH_MAX_N")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 64;
}

// Set of vertex indices backed by packed 64-bit words.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    int universe() const { return universe_; }

    bool test(int v) const {
        return (words_[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1u;
    }
    void set(int v) { words_[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64); }
    void reset(int v) { words_[static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t{1} << (v % 64)); }

    int count() const {
        int c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }
    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    bool intersects(const VertexSet& other) const {
        std::size_t m = std::min(words_.size(), other.words_.size());
        for (std::size_t i = 0; i < m; ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    // Visits members in ascending order.
    template <class F>
    void for_each(F f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                int b = __builtin_ctzll(w);
                f(static_cast<int>(i * 64 + b));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

// Simple undirected graph on vertices 0..n-1; adjacency is kept symmetric
// and loop-free by construction. Treat values as immutable once built and
// they are safe to share across threads.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) {
        if (n < 0) throw IndexOutOfRange("vertex count must be non-negative");
        if (n > vertex_limit())
            throw TooLarge("vertex count " + std::to_string(n) + " exceeds limit " +
                           std::to_string(vertex_limit()));
        n_ = n;
        adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw LoopEdge("loop at vertex " + std::to_string(u));
        if (adj_[static_cast<std::size_t>(u)].test(v)) return;
        adj_[static_cast<std::size_t>(u)].set(v);
        adj_[static_cast<std::size_t>(v)].set(u);
        ++m_;
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return false;
        return adj_[static_cast<std::size_t>(u)].test(v);
    }

    int degree(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)].count();
    }

    // Minimum degree; 0 for the empty graph.
    int min_degree() const {
        int d = n_ == 0 ? 0 : degree(0);
        for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
        return d;
    }

    const VertexSet& neighbours(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    template <class F>
    void for_each_neighbour(int v, F f) const {
        neighbours(v).for_each(f);
    }

    // Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edge_list() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (int u = 0; u < n_; ++u)
            adj_[static_cast<std::size_t>(u)].for_each([&](int v) {
                if (u < v) out.emplace_back(u, v);
            });
        return out;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw IndexOutOfRange("vertex " + std::to_string(v) + " out of range [0, " +
                                  std::to_string(n_) + ")");
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
};

inline Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

} // namespace oddgirth
