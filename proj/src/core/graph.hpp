#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "core/errors.hpp"

namespace betti {

/// Subset of vertices as a bitmask: bit v-1 set <=> vertex v in the set.
using VertexSet = std::uint32_t;

inline constexpr int kMaxVertices = 25;
inline constexpr int kMaxFrobergVertices = 22;

/// Simple undirected graph on vertices labeled 1..k, adjacency bitmasks.
/// Immutable in spirit: operations return new graphs.
class Graph {
public:
    explicit Graph(int k);

    static Graph from_edges(int k, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return k_; }
    int edge_count() const;

    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    bool has_edge(int u, int v) const;
    VertexSet neighbors(int v) const;
    int degree(int v) const;
    std::vector<std::pair<int, int>> edges() const;

    VertexSet full_set() const { return (k_ == 32) ? ~0u : ((1u << k_) - 1); }

    /// Component of v inside `within` (v must be in `within`).
    VertexSet component_of(int v, VertexSet within) const;
    bool is_connected() const;

    /// Induced subgraph; kept vertices are relabeled 1..|w| preserving order.
    Graph induced(VertexSet w) const;
    Graph without_vertex(int v) const;

    bool operator==(const Graph& o) const = default;

private:
    void check_vertex(int v) const;

    int k_;
    std::vector<std::uint32_t> adj_;
};

/// Number of connected components of g[w]; 0 for the empty set.
int component_count(const Graph& g, VertexSet w);

/// Maximum cardinality search followed by perfect-elimination-order
/// verification.
bool is_chordal(const Graph& g);

/// Entry i (1-based, length k-1) is the sum over all (i+1)-subsets W of
/// (components of g[W]) - 1. Computed for any graph; equals the graded Betti
/// numbers beta_{i,i+1} of the associated quotient ring exactly when g is
/// chordal. Guarded at k <= 22 (iterates all 2^k subsets).
std::vector<std::int64_t> froberg_vector(const Graph& g);

/// The rewrite G_{v->w}: every neighbor u of v with u != w and u not adjacent
/// to w loses the edge uv and gains the edge uw. Edge count is preserved.
Graph move_vertex(const Graph& g, int v, int w);

// --- text formats -----------------------------------------------------------

/// "n <k>" on the first line, then one "u v" edge per line (1-based).
Graph parse_graph_text(const std::string& text);
std::string format_graph_text(const Graph& g);

/// Standard graph6 one-liner (optionally prefixed ">>graph6<<").
Graph parse_graph6(const std::string& text);
std::string format_graph6(const Graph& g);

} // namespace betti
