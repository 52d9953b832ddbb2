#pragma once

// Shared helpers for the test suites: small graph builders and brute-force
// oracles kept independent of the library code paths they check.

#include <bit>
#include <random>
#include <vector>

#include "core/graph.hpp"

namespace testutil {

inline betti::Graph path(int k) {
    betti::Graph g(k);
    for (int v = 1; v < k; ++v) g.add_edge(v, v + 1);
    return g;
}

inline betti::Graph cycle(int k) {
    betti::Graph g = path(k);
    g.add_edge(k, 1);
    return g;
}

inline betti::Graph complete(int k) {
    betti::Graph g(k);
    for (int u = 1; u <= k; ++u)
        for (int v = u + 1; v <= k; ++v) g.add_edge(u, v);
    return g;
}

/// Star plus a path: triangulation of a polygon with all chords from vertex 1.
inline betti::Graph fan(int k) {
    betti::Graph g(k);
    for (int v = 2; v <= k; ++v) g.add_edge(1, v);
    for (int v = 2; v < k; ++v) g.add_edge(v, v + 1);
    return g;
}

/// Zigzag triangulation of a polygon: triangle strip 1, 2, k, 3, k-1, ...
inline betti::Graph snake(int k) {
    std::vector<int> strip;
    int lo = 1, hi = k;
    bool take_low = true;
    while (lo <= hi) {
        strip.push_back(take_low ? lo++ : hi--);
        take_low = !take_low;
    }
    betti::Graph g(k);
    for (std::size_t i = 0; i + 1 < strip.size(); ++i) g.add_edge(strip[i], strip[i + 1]);
    for (std::size_t i = 0; i + 2 < strip.size(); ++i) g.add_edge(strip[i], strip[i + 2]);
    return g;
}

/// Uniform random tree: vertex v attaches to a uniformly random earlier vertex.
inline betti::Graph random_tree(int k, std::mt19937& rng) {
    betti::Graph g(k);
    for (int v = 2; v <= k; ++v)
        g.add_edge(v, 1 + static_cast<int>(rng() % static_cast<unsigned>(v - 1)));
    return g;
}

inline betti::Graph random_graph(int k, double p, std::mt19937& rng) {
    betti::Graph g(k);
    std::bernoulli_distribution coin(p);
    for (int u = 1; u <= k; ++u)
        for (int v = u + 1; v <= k; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

inline betti::Graph relabel(const betti::Graph& g, const std::vector<int>& perm) {
    betti::Graph out(g.vertex_count());
    for (auto [u, v] : g.edges()) out.add_edge(perm[u - 1], perm[v - 1]);
    return out;
}

/// Chordality oracle: an induced cycle of length >= 4 is a vertex subset of
/// size >= 4 whose induced subgraph is connected and 2-regular.
inline bool oracle_chordal(const betti::Graph& g) {
    int k = g.vertex_count();
    for (std::uint32_t w = 0; w < (1u << k); ++w) {
        if (std::popcount(w) < 4) continue;
        bool two_regular = true;
        for (int v = 1; v <= k && two_regular; ++v)
            if ((w >> (v - 1)) & 1u)
                if (std::popcount(g.neighbors(v) & w) != 2) two_regular = false;
        if (two_regular && betti::component_count(g, w) == 1) return false;
    }
    return true;
}

} // namespace testutil
