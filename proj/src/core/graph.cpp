#include "core/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "core/intops.hpp"

namespace betti {

Graph::Graph(int k) : k_(k), adj_(static_cast<std::size_t>(k > 0 ? k : 0), 0u) {
    if (k < 1 || k > kMaxVertices)
        throw std::out_of_range("vertex count " + std::to_string(k) + " outside [1, " +
                                std::to_string(kMaxVertices) + "]");
}

Graph Graph::from_edges(int k, const std::vector<std::pair<int, int>>& edges) {
    Graph g(k);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 1 || v > k_)
        throw std::out_of_range("vertex " + std::to_string(v) + " outside 1.." + std::to_string(k_));
}

int Graph::edge_count() const {
    int total = 0;
    for (std::uint32_t mask : adj_) total += std::popcount(mask);
    return total / 2;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adj_[u - 1] |= 1u << (v - 1);
    adj_[v - 1] |= 1u << (u - 1);
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u - 1] &= ~(1u << (v - 1));
    adj_[v - 1] &= ~(1u << (u - 1));
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u - 1] >> (v - 1)) & 1u;
}

VertexSet Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v - 1];
}

int Graph::degree(int v) const { return std::popcount(neighbors(v)); }

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 1; u <= k_; ++u)
        for (int v = u + 1; v <= k_; ++v)
            if ((adj_[u - 1] >> (v - 1)) & 1u) out.emplace_back(u, v);
    return out;
}

VertexSet Graph::component_of(int v, VertexSet within) const {
    check_vertex(v);
    VertexSet comp = (1u << (v - 1)) & within;
    VertexSet frontier = comp;
    while (frontier != 0) {
        VertexSet grow = 0;
        VertexSet f = frontier;
        while (f != 0) {
            int u = std::countr_zero(f);
            f &= f - 1;
            grow |= adj_[u];
        }
        frontier = grow & within & ~comp;
        comp |= frontier;
    }
    return comp;
}

bool Graph::is_connected() const { return component_of(1, full_set()) == full_set(); }

Graph Graph::induced(VertexSet w) const {
    w &= full_set();
    int kept = std::popcount(w);
    if (kept == 0) throw std::invalid_argument("induced subgraph on empty vertex set");
    Graph g(kept);
    // order-preserving relabeling: old bit positions -> 0..kept-1
    std::vector<int> new_index(static_cast<std::size_t>(k_), -1);
    int next = 0;
    for (int v = 0; v < k_; ++v)
        if ((w >> v) & 1u) new_index[v] = next++;
    for (int v = 0; v < k_; ++v) {
        if (!((w >> v) & 1u)) continue;
        VertexSet nb = adj_[v] & w;
        while (nb != 0) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            if (u > v) g.add_edge(new_index[v] + 1, new_index[u] + 1);
        }
    }
    return g;
}

Graph Graph::without_vertex(int v) const {
    check_vertex(v);
    if (k_ == 1) throw std::invalid_argument("cannot remove the only vertex");
    return induced(full_set() & ~(1u << (v - 1)));
}

int component_count(const Graph& g, VertexSet w) {
    w &= g.full_set();
    int count = 0;
    VertexSet rem = w;
    while (rem != 0) {
        int v = std::countr_zero(rem);
        VertexSet comp = g.component_of(v + 1, w);
        rem &= ~comp;
        ++count;
    }
    return count;
}

bool is_chordal(const Graph& g) {
    int k = g.vertex_count();
    // maximum cardinality search; first-selected vertex is eliminated last
    std::vector<int> weight(static_cast<std::size_t>(k), 0);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(k));
    VertexSet unnumbered = g.full_set();
    for (int step = 0; step < k; ++step) {
        int best = -1, best_weight = -1;
        VertexSet rem = unnumbered;
        while (rem != 0) {
            int v = std::countr_zero(rem);
            rem &= rem - 1;
            if (weight[v] > best_weight) {
                best_weight = weight[v];
                best = v;
            }
        }
        unnumbered &= ~(1u << best);
        order.push_back(best);
        VertexSet nb = g.neighbors(best + 1) & unnumbered;
        while (nb != 0) {
            int v = std::countr_zero(nb);
            nb &= nb - 1;
            ++weight[v];
        }
    }
    // elimination order is the reverse of the selection order; verify that
    // every vertex's later neighbors minus its parent are adjacent to the
    // parent (zero fill-in test)
    std::vector<int> position(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) position[order[i]] = i; // larger = eliminated earlier
    for (int v = 0; v < k; ++v) {
        VertexSet later = 0;
        VertexSet nb = g.neighbors(v + 1);
        VertexSet scan = nb;
        int parent = -1, parent_pos = -1;
        while (scan != 0) {
            int u = std::countr_zero(scan);
            scan &= scan - 1;
            if (position[u] < position[v]) {
                later |= 1u << u;
                if (position[u] > parent_pos) {
                    parent_pos = position[u];
                    parent = u;
                }
            }
        }
        if (parent < 0) continue;
        VertexSet rest = later & ~(1u << parent);
        if ((rest & ~g.neighbors(parent + 1)) != 0) return false;
    }
    return true;
}

namespace {

void froberg_accumulate(const Graph& g, std::uint32_t lo, std::uint32_t hi,
                        std::vector<std::int64_t>& acc) {
    for (std::uint32_t w = lo; w < hi; ++w) {
        int size = std::popcount(w);
        if (size < 2) continue;
        int kappa = component_count(g, w);
        if (kappa > 1) acc[static_cast<std::size_t>(size) - 2] += kappa - 1;
    }
}

} // namespace

std::vector<std::int64_t> froberg_vector(const Graph& g) {
    int k = g.vertex_count();
    if (k > kMaxFrobergVertices)
        throw std::out_of_range("subset enumeration guarded at " +
                                std::to_string(kMaxFrobergVertices) + " vertices, got " +
                                std::to_string(k));
    std::vector<std::int64_t> beta(static_cast<std::size_t>(k > 0 ? k - 1 : 0), 0);
    if (k < 2) return beta;
    std::uint32_t total = 1u << k;
    unsigned workers = std::thread::hardware_concurrency();
    if (k >= 18 && workers > 1) {
        // deterministic: per-chunk partial sums added in chunk order
        std::vector<std::vector<std::int64_t>> partial(workers, beta);
        std::vector<std::thread> pool;
        std::uint32_t chunk = total / workers + 1;
        for (unsigned t = 0; t < workers; ++t) {
            std::uint32_t lo = t * chunk;
            std::uint32_t hi = std::min<std::uint64_t>(total, static_cast<std::uint64_t>(lo) + chunk);
            pool.emplace_back(froberg_accumulate, std::cref(g), lo, hi, std::ref(partial[t]));
        }
        for (auto& th : pool) th.join();
        for (const auto& p : partial)
            for (std::size_t i = 0; i < beta.size(); ++i) beta[i] = checked_add(beta[i], p[i]);
    } else {
        froberg_accumulate(g, 0, total, beta);
    }
    return beta;
}

Graph move_vertex(const Graph& g, int v, int w) {
    if (v == w) throw std::invalid_argument("move_vertex requires distinct vertices");
    VertexSet moved = g.neighbors(v) & ~(1u << (w - 1)) & ~g.neighbors(w);
    Graph out = g;
    VertexSet scan = moved;
    while (scan != 0) {
        int u = std::countr_zero(scan) + 1;
        scan &= scan - 1;
        out.remove_edge(u, v);
        out.add_edge(u, w);
    }
    return out;
}

Graph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    std::string tag;
    int k = 0;
    if (!(in >> tag) || tag != "n" || !(in >> k))
        throw ParseError("graph text must start with \"n <vertex count>\"");
    if (k < 1 || k > kMaxVertices)
        throw ParseError("vertex count " + std::to_string(k) + " outside [1, " +
                         std::to_string(kMaxVertices) + "]");
    Graph g(k);
    int u = 0, v = 0;
    while (in >> u) {
        if (!(in >> v)) throw ParseError("dangling vertex in edge list");
        if (u < 1 || u > k || v < 1 || v > k)
            throw ParseError("edge endpoint outside 1.." + std::to_string(k));
        if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u));
        g.add_edge(u, v);
    }
    if (!in.eof()) throw ParseError("unexpected token in edge list");
    return g;
}

std::string format_graph_text(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.vertex_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_graph6(const std::string& text) {
    std::string s = text;
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) s = s.substr(header.size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    if (s.empty()) throw ParseError("empty graph6 string");
    int k = s[0] - 63;
    if (s[0] == 126) throw ParseError("graph6 long-form sizes not supported");
    if (k < 1 || k > kMaxVertices)
        throw ParseError("graph6 vertex count " + std::to_string(k) + " outside [1, " +
                         std::to_string(kMaxVertices) + "]");
    int bits = k * (k - 1) / 2;
    int groups = (bits + 5) / 6;
    if (static_cast<int>(s.size()) != 1 + groups)
        throw ParseError("graph6 string has wrong length for " + std::to_string(k) + " vertices");
    Graph g(k);
    int bit = 0;
    for (int a = 1; a <= groups; ++a) {
        int value = s[a] - 63;
        if (value < 0 || value > 63) throw ParseError("invalid graph6 character");
        for (int p = 5; p >= 0 && bit < bits; --p, ++bit) {
            if (!((value >> p) & 1)) continue;
            // bit order: (1,2), (1,3), (2,3), (1,4), ... column by column
            int b = bit, j = 2;
            while (b >= j - 1) {
                b -= j - 1;
                ++j;
            }
            g.add_edge(b + 1, j);
        }
    }
    return g;
}

std::string format_graph6(const Graph& g) {
    int k = g.vertex_count();
    std::string s(1, static_cast<char>(63 + k));
    int bits = k * (k - 1) / 2;
    int groups = (bits + 5) / 6;
    std::vector<int> bit_values;
    bit_values.reserve(static_cast<std::size_t>(bits));
    for (int j = 2; j <= k; ++j)
        for (int i = 1; i < j; ++i) bit_values.push_back(g.has_edge(i, j) ? 1 : 0);
    for (int a = 0; a < groups; ++a) {
        int value = 0;
        for (int p = 0; p < 6; ++p) {
            int idx = a * 6 + p;
            value = (value << 1) | (idx < bits ? bit_values[static_cast<std::size_t>(idx)] : 0);
        }
        s += static_cast<char>(63 + value);
    }
    return s;
}

} // namespace betti
