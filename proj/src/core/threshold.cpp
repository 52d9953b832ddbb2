#include "core/threshold.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <sstream>
#include <stdexcept>

#include "core/intops.hpp"

namespace betti {

namespace {

std::string vec_to_string(const std::vector<std::int64_t>& v) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ',';
        out << v[i];
    }
    out << ']';
    return out.str();
}

void check_length(int len) {
    if (len > kMaxSequenceLength)
        throw std::out_of_range("threshold sequence length " + std::to_string(len) +
                                " exceeds guard " + std::to_string(kMaxSequenceLength));
}

/// omega * Lambda + eta_n for omega of length n-1.
std::vector<std::int64_t> isolated_step(const std::vector<std::int64_t>& omega) {
    int n = static_cast<int>(omega.size()) + 1;
    std::vector<std::int64_t> next(static_cast<std::size_t>(n), 0);
    for (int j = 1; j <= n; ++j) {
        std::int64_t v = 0;
        if (j - 2 >= 0) v = checked_add(v, omega[j - 2]);
        if (j - 1 < n - 1) v = checked_add(v, omega[j - 1]);
        next[j - 1] = checked_add(v, binomial(n, j));
    }
    return next;
}

} // namespace

ThresholdSequence::ThresholdSequence(std::string_view ops) : ops_(ops) {
    check_length(length());
    for (char c : ops_)
        if (c != 'I' && c != 'D')
            throw std::invalid_argument(std::string("threshold sequence may only contain 'I' and 'D', got '") +
                                        c + "'");
}

void ThresholdSequence::append(char op) {
    if (op != 'I' && op != 'D') throw std::invalid_argument("threshold op must be 'I' or 'D'");
    check_length(length() + 1);
    ops_ += op;
}

Graph build_graph(const ThresholdSequence& s) {
    int k = s.length() + 1;
    Graph g(k);
    int built = 1;
    for (char op : s.ops()) {
        ++built;
        if (op == 'D')
            for (int u = 1; u < built; ++u) g.add_edge(u, built);
    }
    return g;
}

std::vector<std::int64_t> threshold_omega(const ThresholdSequence& s) {
    std::vector<std::int64_t> omega; // empty: single vertex
    for (char op : s.ops()) {
        if (op == 'D')
            omega.push_back(0);
        else
            omega = isolated_step(omega);
    }
    return omega;
}

OmegaInversion omega_to_threshold(const std::vector<std::int64_t>& omega) {
    int n = static_cast<int>(omega.size());
    if (n < 1) throw std::invalid_argument("reduced Betti vector must be nonempty");
    check_length(n);
    OmegaInversion result;
    result.chain.push_back(omega);
    std::vector<std::int64_t> cur = omega;
    std::string reversed_ops;
    while (!cur.empty()) {
        for (std::int64_t v : cur)
            if (v < 0)
                throw NotRealizableError("negative entry in intermediate vector " + vec_to_string(cur));
        if (cur.back() == 0) {
            reversed_ops += 'D';
            cur.pop_back();
        } else {
            // undo omega = prev * Lambda + eta:  prev_j = x_j - prev_{j-1}
            // with x = omega - eta
            int m = static_cast<int>(cur.size());
            std::vector<std::int64_t> prev(static_cast<std::size_t>(m) - 1);
            std::int64_t carry = 0;
            for (int j = 1; j <= m - 1; ++j) {
                std::int64_t x = checked_sub(cur[j - 1], binomial(m, j));
                carry = checked_sub(x, carry);
                prev[j - 1] = carry;
            }
            std::vector<std::int64_t> forward = isolated_step(prev);
            if (forward != cur)
                throw NotRealizableError("vector " + vec_to_string(cur) +
                                         " is not in the image of the isolated-vertex step");
            reversed_ops += 'I';
            cur = std::move(prev);
        }
        result.chain.push_back(cur);
    }
    std::reverse(reversed_ops.begin(), reversed_ops.end());
    result.sequence = ThresholdSequence(reversed_ops);
    return result;
}

namespace {

ThresholdSequence representative_rec(Graph g, RewriteTrace* trace) {
    int k = g.vertex_count();
    if (k == 1) return ThresholdSequence();

    // pivot: lowest-labeled vertex of maximum degree
    int pivot = 1;
    for (int v = 2; v <= k; ++v)
        if (g.degree(v) > g.degree(pivot)) pivot = v;

    char op;
    Graph next(1);
    if (g.is_connected()) {
        // pull vertices at distance 2 into the pivot's neighborhood until it
        // dominates; each rewrite keeps the graph chordal and Betti-equal
        while (g.degree(pivot) < k - 1) {
            VertexSet nb = g.neighbors(pivot);
            VertexSet dist2 = 0;
            VertexSet scan = nb;
            while (scan != 0) {
                int x = std::countr_zero(scan) + 1;
                scan &= scan - 1;
                dist2 |= g.neighbors(x);
            }
            dist2 &= ~nb & ~(1u << (pivot - 1));
            assert(dist2 != 0);
            int u = std::countr_zero(dist2) + 1;
            VertexSet common = g.neighbors(pivot) & g.neighbors(u);
            int w = std::countr_zero(common) + 1;
            Graph moved = move_vertex(g, w, pivot);
            if (trace) trace->push_back({g, moved, w, pivot});
            assert(is_chordal(moved));
            g = std::move(moved);
        }
        op = 'D';
        next = g.without_vertex(pivot);
    } else {
        VertexSet outside = g.full_set() & ~g.component_of(pivot, g.full_set());
        int w = std::countr_zero(outside) + 1;
        Graph moved = move_vertex(g, pivot, w);
        if (trace) trace->push_back({g, moved, pivot, w});
        assert(is_chordal(moved));
        op = 'I';
        next = moved.without_vertex(pivot);
    }
    ThresholdSequence seq = representative_rec(std::move(next), trace);
    seq.append(op);
    return seq;
}

} // namespace

ThresholdSequence threshold_representative(const Graph& g, RewriteTrace* trace) {
    if (!is_chordal(g)) throw NotChordalError("threshold representative requires a chordal graph");
    return representative_rec(g, trace);
}

} // namespace betti
