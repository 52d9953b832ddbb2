#include "core/census.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <thread>

#include "core/diagram.hpp"

namespace betti {

namespace {

constexpr int kMaxRaw = kMaxCanonicalVertices;

/// Adjacency rows without the Graph wrapper; the enumeration scan touches
/// millions of candidates and must not allocate per graph.
struct RawGraph {
    int k = 0;
    std::array<std::uint32_t, kMaxRaw> adj{};
};

RawGraph to_raw(const Graph& g) {
    if (g.vertex_count() > kMaxRaw)
        throw std::out_of_range("canonical labeling guarded at " + std::to_string(kMaxRaw) +
                                " vertices");
    RawGraph r;
    r.k = g.vertex_count();
    for (int v = 1; v <= r.k; ++v) r.adj[v - 1] = g.neighbors(v);
    return r;
}

/// Edge bits in graph6 order, (1,2), (1,3), (2,3), (1,4), ... as an integer,
/// most significant bit first.
std::uint64_t identity_key(const RawGraph& g) {
    std::uint64_t key = 0;
    for (int j = 1; j < g.k; ++j)
        for (int i = 0; i < j; ++i) key = (key << 1) | ((g.adj[j] >> i) & 1u);
    return key;
}

/// Branch-and-bound over placement orders. Placing the vertex at position d
/// appends d bits (adjacency to the earlier positions), so prefixes are
/// comparable depth by depth: a strictly smaller prefix wins regardless of
/// the remaining bits.
struct CanonicalSearch {
    const RawGraph& g;
    bool stop_on_smaller;
    std::uint64_t best;
    int total_bits;
    std::array<std::uint64_t, kMaxRaw + 1> best_prefix{};
    std::array<int, kMaxRaw> placed{};
    std::array<int, kMaxRaw> candidates{};
    bool found_smaller = false;

    CanonicalSearch(const RawGraph& graph, bool stop) : g(graph), stop_on_smaller(stop) {
        best = identity_key(g);
        total_bits = g.k * (g.k - 1) / 2;
        refresh_prefixes();
        for (int v = 0; v < g.k; ++v) candidates[v] = v;
        std::stable_sort(candidates.begin(), candidates.begin() + g.k, [&](int a, int b) {
            return std::popcount(g.adj[a]) < std::popcount(g.adj[b]);
        });
    }

    void refresh_prefixes() {
        for (int d = 0; d <= g.k; ++d)
            best_prefix[d] = best >> (total_bits - d * (d - 1) / 2);
    }

    void run() { dfs(0, 0u, 0); }

    void dfs(int depth, std::uint32_t used, std::uint64_t prefix) {
        if (depth == g.k) {
            if (prefix < best) {
                best = prefix;
                refresh_prefixes();
                found_smaller = true;
            }
            return;
        }
        for (int idx = 0; idx < g.k; ++idx) {
            int v = candidates[idx];
            if ((used >> v) & 1u) continue;
            std::uint64_t bits = 0;
            for (int t = 0; t < depth; ++t)
                bits = (bits << 1) | ((g.adj[v] >> placed[t]) & 1u);
            std::uint64_t next = (prefix << depth) | bits;
            if (next > best_prefix[depth + 1]) continue;
            if (next < best_prefix[depth + 1] && stop_on_smaller) {
                found_smaller = true;
                return;
            }
            placed[depth] = v;
            dfs(depth + 1, used | (1u << v), next);
            if (found_smaller && stop_on_smaller) return;
        }
    }
};

bool raw_is_canonical(const RawGraph& g) {
    CanonicalSearch search(g, /*stop_on_smaller=*/true);
    search.run();
    return !search.found_smaller;
}

std::uint64_t raw_canonical_key(const RawGraph& g) {
    CanonicalSearch search(g, /*stop_on_smaller=*/false);
    search.run();
    return search.best;
}

RawGraph decode_key(int k, std::uint64_t code) {
    RawGraph g;
    g.k = k;
    int shift = k * (k - 1) / 2;
    for (int j = 1; j < k; ++j)
        for (int i = 0; i < j; ++i) {
            --shift;
            if ((code >> shift) & 1u) {
                g.adj[i] |= 1u << j;
                g.adj[j] |= 1u << i;
            }
        }
    return g;
}

Graph raw_to_graph(const RawGraph& r) {
    Graph g(r.k);
    for (int v = 0; v < r.k; ++v) {
        std::uint32_t nb = r.adj[v] & ~((1u << (v + 1)) - 1);
        while (nb != 0) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            g.add_edge(v + 1, u + 1);
        }
    }
    return g;
}

} // namespace

std::uint64_t canonical_key(const Graph& g) { return raw_canonical_key(to_raw(g)); }

bool is_canonical(const Graph& g) { return raw_is_canonical(to_raw(g)); }

std::vector<CanonicalGraph> enumerate_graphs(int k) {
    if (k < 1 || k > kMaxEnumerationVertices)
        throw std::out_of_range("enumeration guarded at " +
                                std::to_string(kMaxEnumerationVertices) + " vertices");
    std::uint64_t total = 1ull << (k * (k - 1) / 2);
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    if (total < 4096) workers = 1;
    std::vector<std::vector<std::uint64_t>> hits(workers);
    std::uint64_t chunk = total / workers + 1;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&, t]() {
            std::uint64_t lo = t * chunk;
            std::uint64_t hi = std::min(total, lo + chunk);
            for (std::uint64_t code = lo; code < hi; ++code) {
                RawGraph g = decode_key(k, code);
                if (raw_is_canonical(g)) hits[t].push_back(code);
            }
        });
    }
    for (auto& th : pool) th.join();
    std::vector<CanonicalGraph> out;
    for (const auto& chunk_hits : hits)
        for (std::uint64_t code : chunk_hits)
            out.push_back({raw_to_graph(decode_key(k, code)), code});
    return out;
}

GraphClass classify(const Graph& g) {
    if (is_chordal(g)) return GraphClass::Chordal;
    std::vector<std::int64_t> omega = froberg_vector(g);
    return chordality_certificate(omega).admissible() ? GraphClass::FalseChordal
                                                      : GraphClass::NotChordal;
}

std::string graph_class_name(GraphClass c) {
    switch (c) {
    case GraphClass::Chordal: return "chordal";
    case GraphClass::FalseChordal: return "false-chordal";
    case GraphClass::NotChordal: return "not-chordal";
    }
    return "?";
}

std::vector<CensusRow> census_table(int kmax) {
    if (kmax < 1 || kmax > kMaxEnumerationVertices)
        throw std::out_of_range("census guarded at " + std::to_string(kMaxEnumerationVertices) +
                                " vertices");
    std::vector<CensusRow> rows;
    for (int k = 1; k <= kmax; ++k) {
        CensusRow row;
        row.k = k;
        for (const CanonicalGraph& cg : enumerate_graphs(k)) {
            switch (classify(cg.graph)) {
            case GraphClass::Chordal: ++row.chordal; break;
            case GraphClass::FalseChordal:
                ++row.false_chordal;
                ++row.not_chordal;
                break;
            case GraphClass::NotChordal: ++row.not_chordal; break;
            }
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace betti
