#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/graph.hpp"

namespace betti {

inline constexpr int kMaxCanonicalVertices = 11; // C(11,2) = 55 key bits
inline constexpr int kMaxEnumerationVertices = 8;
inline constexpr int kDefaultCensusMax = 7;

/// Canonical representative of an isomorphism class: the labeled graph whose
/// edge bitstring (graph6 bit order) is minimal over all relabelings.
struct CanonicalGraph {
    Graph graph;
    std::uint64_t key;
};

/// Minimal edge bitstring over all vertex orderings, as an integer. Two
/// graphs on the same vertex count share a key iff they are isomorphic.
std::uint64_t canonical_key(const Graph& g);

/// True iff the graph's own labeling already attains the minimal bitstring.
bool is_canonical(const Graph& g);

/// Exactly one representative per isomorphism class on k vertices, in
/// increasing key order. Scans all 2^C(k,2) labeled graphs, partitioned
/// across worker threads; the result is deterministic.
std::vector<CanonicalGraph> enumerate_graphs(int k);

enum class GraphClass {
    Chordal,
    FalseChordal, // not chordal, yet the certificate is admissible
    NotChordal,
};

GraphClass classify(const Graph& g);
std::string graph_class_name(GraphClass c);

struct CensusRow {
    int k = 0;
    std::int64_t chordal = 0;
    std::int64_t false_chordal = 0;
    std::int64_t not_chordal = 0; // includes the false chordal graphs
};

/// Classification counts for k = 1..kmax. kmax <= 8; 8 takes considerably
/// longer than the default 7.
std::vector<CensusRow> census_table(int kmax);

} // namespace betti
