#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "core/graph.hpp"

namespace betti {

inline constexpr int kMaxSequenceLength = 24;

/// Word over {I, D}, applied left to right to a single starting vertex:
/// I adds an isolated vertex, D adds a dominating vertex. The empty word is
/// the one-vertex graph. Distinct words build pairwise non-isomorphic graphs.
class ThresholdSequence {
public:
    ThresholdSequence() = default;
    explicit ThresholdSequence(std::string_view ops);

    const std::string& ops() const { return ops_; }
    int length() const { return static_cast<int>(ops_.size()); }

    void append(char op);

    bool operator==(const ThresholdSequence& o) const = default;
    auto operator<=>(const ThresholdSequence& o) const = default;

private:
    std::string ops_;
};

/// Threshold graph on length+1 vertices; each step labels the new vertex with
/// the next integer.
Graph build_graph(const ThresholdSequence& s);

/// Reduced Betti vector by the affine recursion: D appends a zero, I maps
/// omega to omega*Lambda + eta. Agrees with froberg_vector(build_graph(s)).
std::vector<std::int64_t> threshold_omega(const ThresholdSequence& s);

struct OmegaInversion {
    ThresholdSequence sequence;
    /// Intermediate vectors, starting with the input and ending with the
    /// empty vector (the single starting vertex).
    std::vector<std::vector<std::int64_t>> chain;
};

/// Inverts the recursion: a trailing zero strips as a D step, otherwise the
/// I step is undone via (omega - eta) * Lambda^{-1} and re-checked forward.
/// Throws NotRealizableError when any step produces a negative entry or the
/// forward re-check fails.
OmegaInversion omega_to_threshold(const std::vector<std::int64_t>& omega);

/// One application of move_vertex during threshold_representative; both
/// graphs live on the same vertex set.
struct RewritePair {
    Graph before;
    Graph after;
    int from;
    int to;
};
using RewriteTrace = std::vector<RewritePair>;

/// The unique threshold graph (as a sequence) with the same reduced Betti
/// vector and vertex count as the chordal input. Throws NotChordalError on
/// non-chordal input. When trace is given, every intermediate rewrite is
/// recorded for invariant checking.
ThresholdSequence threshold_representative(const Graph& g, RewriteTrace* trace = nullptr);

} // namespace betti
