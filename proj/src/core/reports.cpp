#include "core/reports.hpp"

#include <sstream>

#include <json.hpp>

#include "core/alhc.hpp"
#include "core/census.hpp"
#include "core/diagram.hpp"
#include "core/lattice.hpp"
#include "core/threshold.hpp"

namespace betti {

namespace {

using nlohmann::json;

json rational_json(const Rational& r) { return r.to_string(); }

json rational_vector_json(const std::vector<Rational>& v) {
    json arr = json::array();
    for (const Rational& r : v) arr.push_back(rational_json(r));
    return arr;
}

json matrix_json(const ExactMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 1; i <= m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 1; j <= m.cols(); ++j) row.push_back(rational_json(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

json edges_json(const Graph& g) {
    json arr = json::array();
    for (auto [u, v] : g.edges()) arr.push_back(json::array({u, v}));
    return arr;
}

std::string format_rational_vector(const std::vector<Rational>& v) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ", ";
        out << v[i].to_string();
    }
    out << ']';
    return out.str();
}

std::string format_edges(const Graph& g) {
    std::ostringstream out;
    auto edges = g.edges();
    if (edges.empty()) return "(none)";
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i) out << ' ';
        out << edges[i].first << '-' << edges[i].second;
    }
    return out.str();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace

std::string format_int_vector(const std::vector<std::int64_t>& v) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ", ";
        out << v[i];
    }
    out << ']';
    return out.str();
}

std::string report_betti(const Graph& g, bool json_mode) {
    std::vector<std::int64_t> omega = froberg_vector(g);
    bool chordal = is_chordal(g);
    BettiDiagram diagram = BettiDiagram::two_linear(1, omega);
    if (json_mode) {
        json j;
        j["vertices"] = g.vertex_count();
        j["edges"] = edges_json(g);
        j["beta00"] = 1;
        j["omega"] = omega;
        j["chordal"] = chordal;
        return dump(j);
    }
    std::ostringstream out;
    out << "graph: " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
    out << "omega: " << format_int_vector(omega) << "\n";
    out << diagram.to_table() << "\n";
    out << "chordal: " << (chordal ? "yes" : "no") << "\n";
    return out.str();
}

std::string report_decompose(const std::vector<std::int64_t>& omega, std::int64_t m,
                             bool json_mode, bool* admissible_out) {
    BSCoefficients bs = bs_decompose(omega, m);
    AlhcImage alhc = omega_to_alhc(omega);
    if (admissible_out) *admissible_out = bs.admissible();
    if (json_mode) {
        json j;
        j["beta00"] = m;
        j["omega"] = omega;
        j["c"] = rational_vector_json(bs.c);
        j["lambda"] = alhc.lambda;
        j["nonneg"] = bs.nonneg;
        j["sums_to_m"] = bs.sums_to_m;
        j["admissible"] = bs.admissible();
        return dump(j);
    }
    Rational sum(0);
    for (const Rational& x : bs.c) sum += x;
    std::ostringstream out;
    out << "omega: " << format_int_vector(omega) << "\n";
    out << "beta00: " << m << "\n";
    out << "c: " << format_rational_vector(bs.c) << "\n";
    out << "lambda: " << format_int_vector(alhc.lambda) << "\n";
    out << "nonnegative: " << (bs.nonneg ? "yes" : "no") << "\n";
    out << "sum: " << sum.to_string() << (bs.sums_to_m ? " (= beta00)" : " (!= beta00)") << "\n";
    out << "admissible: " << (bs.admissible() ? "yes" : "no") << "\n";
    return out.str();
}

std::string report_threshold_rep(const Graph& g, bool json_mode) {
    ThresholdSequence seq = threshold_representative(g);
    Graph rep = build_graph(seq);
    if (json_mode) {
        json j;
        j["sequence"] = seq.ops();
        j["vertices"] = rep.vertex_count();
        j["edges"] = edges_json(rep);
        j["omega"] = threshold_omega(seq);
        return dump(j);
    }
    std::ostringstream out;
    out << "sequence: " << (seq.length() == 0 ? "(empty)" : seq.ops()) << "\n";
    out << "graph: " << rep.vertex_count() << " vertices, " << rep.edge_count() << " edges\n";
    out << "edges: " << format_edges(rep) << "\n";
    out << "omega: " << format_int_vector(threshold_omega(seq)) << "\n";
    return out.str();
}

std::string report_from_omega(const std::vector<std::int64_t>& omega, bool json_mode) {
    OmegaInversion inv = omega_to_threshold(omega);
    Graph g = build_graph(inv.sequence);
    if (json_mode) {
        json j;
        j["omega"] = omega;
        j["sequence"] = inv.sequence.ops();
        json chain = json::array();
        for (const auto& step : inv.chain) chain.push_back(step);
        j["chain"] = chain;
        j["vertices"] = g.vertex_count();
        j["edges"] = edges_json(g);
        return dump(j);
    }
    std::ostringstream out;
    out << "omega: " << format_int_vector(omega) << "\n";
    out << "chain:";
    for (const auto& step : inv.chain) out << ' ' << format_int_vector(step);
    out << "\n";
    out << "sequence: " << inv.sequence.ops() << "\n";
    out << "graph: " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
    out << "edges: " << format_edges(g) << "\n";
    return out.str();
}

std::string report_module_decompose(const std::vector<std::int64_t>& omega, std::int64_t m,
                                    bool json_mode) {
    ModuleDecomposition dec = decompose_module(omega, m);
    if (json_mode) {
        json j;
        j["omega"] = omega;
        j["m"] = m;
        json summands = json::array();
        for (std::size_t i = 0; i < dec.summands.size(); ++i)
            summands.push_back({{"sequence", dec.summands[i].ops()},
                                {"omega", dec.summand_omegas[i]}});
        j["summands"] = summands;
        j["backtracks"] = dec.backtracks;
        return dump(j);
    }
    std::ostringstream out;
    out << "omega: " << format_int_vector(omega) << "\n";
    out << "m: " << m << "\n";
    for (std::size_t i = 0; i < dec.summands.size(); ++i)
        out << "summand " << (i + 1) << ": " << dec.summands[i].ops() << "  omega="
            << format_int_vector(dec.summand_omegas[i]) << "\n";
    out << "backtracks: " << dec.backtracks << "\n";
    return out.str();
}

std::string report_alhc(const std::vector<std::int64_t>& vec, bool inverse, bool json_mode) {
    if (inverse) {
        std::vector<std::int64_t> omega = alhc_to_omega(vec);
        if (json_mode) {
            json j;
            j["lambda"] = vec;
            j["omega"] = omega;
            j["is_alhc_t1"] = is_alhc(vec, 1);
            return dump(j);
        }
        std::ostringstream out;
        out << "lambda: " << format_int_vector(vec) << "\n";
        out << "omega: " << format_int_vector(omega) << "\n";
        out << "alhc with t=1: " << (is_alhc(vec, 1) ? "yes" : "no") << "\n";
        return out.str();
    }
    AlhcImage img = omega_to_alhc(vec);
    if (json_mode) {
        json j;
        j["omega"] = vec;
        j["lambda"] = img.lambda;
        j["is_alhc_t1"] = is_alhc(img.lambda, 1);
        j["in_simplex"] = img.in_simplex;
        return dump(j);
    }
    std::ostringstream out;
    out << "omega: " << format_int_vector(vec) << "\n";
    out << "lambda: " << format_int_vector(img.lambda) << "\n";
    out << "alhc with t=1: " << (is_alhc(img.lambda, 1) ? "yes" : "no") << "\n";
    out << "lattice point of the Betti simplex: " << (img.in_simplex ? "yes" : "no") << "\n";
    return out.str();
}

std::string report_pure(const std::vector<std::int64_t>& degrees, bool json_mode) {
    DegreeSequence d(degrees);
    BettiDiagram diagram = pure_diagram(d);
    if (json_mode) {
        json j;
        j["d"] = degrees;
        json entries = json::array();
        for (const auto& [pos, value] : diagram.entries())
            entries.push_back({{"i", pos.first}, {"j", pos.second}, {"value", rational_json(value)}});
        j["entries"] = entries;
        j["beta00"] = rational_json(diagram.beta00());
        return dump(j);
    }
    std::ostringstream out;
    out << "degrees: " << format_int_vector(degrees) << "\n";
    out << diagram.to_table() << "\n";
    return out.str();
}

std::string report_census(int kmax, CensusFormat format) {
    std::vector<CensusRow> rows = census_table(kmax);
    if (format == CensusFormat::Json) {
        json arr = json::array();
        for (const CensusRow& r : rows)
            arr.push_back({{"vertices", r.k},
                           {"chordal", r.chordal},
                           {"false_chordal", r.false_chordal},
                           {"not_chordal", r.not_chordal}});
        return dump(arr);
    }
    std::ostringstream out;
    if (format == CensusFormat::Csv) {
        out << "vertices,chordal,false_chordal,not_chordal\n";
        for (const CensusRow& r : rows)
            out << r.k << ',' << r.chordal << ',' << r.false_chordal << ',' << r.not_chordal
                << '\n';
        return out.str();
    }
    out << "vertices  chordal  false_chordal  not_chordal\n";
    for (const CensusRow& r : rows) {
        std::string k = std::to_string(r.k);
        std::string c = std::to_string(r.chordal);
        std::string f = std::to_string(r.false_chordal);
        std::string n = std::to_string(r.not_chordal);
        out << k << std::string(10 - k.size(), ' ') << c << std::string(9 - c.size(), ' ') << f
            << std::string(15 - f.size(), ' ') << n << '\n';
    }
    return out.str();
}

std::string report_polytope_ehrhart(int n, std::int64_t t, bool json_mode) {
    EhrhartCheck check = ehrhart_check(n, t);
    if (json_mode) {
        json j;
        j["n"] = n;
        j["t"] = t;
        j["count"] = check.count;
        j["expected"] = check.expected;
        j["pass"] = check.pass;
        return dump(j);
    }
    std::ostringstream out;
    out << "n=" << n << " t=" << t << ": lattice points " << check.count << ", expected (t+1)^n - t^n = "
        << check.expected << ": " << (check.pass ? "PASS" : "FAIL") << "\n";
    return out.str();
}

std::string report_polytope_reflexive(int n, bool json_mode) {
    ReflexiveDual dual = reflexive_dual(n);
    ExactMatrix formula = closed_form_dual(n);
    std::vector<std::pair<int, int>> diff = xi_formula_discrepancies(n);
    bool off_diag_ok = true, diag_ok = true;
    for (std::size_t i = 1; i <= dual.product.rows(); ++i)
        for (std::size_t j = 1; j <= dual.product.cols(); ++j) {
            if (i != j && dual.product.at(i, j) != Rational(-1)) off_diag_ok = false;
            if (i == j && i < dual.product.rows() &&
                dual.product.at(i, j) != Rational(static_cast<std::int64_t>(i) * i + i - 1))
                diag_ok = false;
        }
    bool interior_ok = true;
    bool interior_checked = n <= kMaxInteriorSize;
    InteriorCheck interior;
    if (interior_checked) {
        interior = interior_point_check(n);
        interior_ok = interior.pass;
    }
    bool reflexive = dual.integral && off_diag_ok && interior_ok;
    if (json_mode) {
        json j;
        j["n"] = n;
        j["vertices"] = matrix_json(truncated_vertex_matrix(n));
        j["xi_solved"] = matrix_json(dual.xi);
        j["xi_formula"] = matrix_json(formula);
        json d = json::array();
        for (auto [i, jj] : diff) d.push_back(json::array({i, jj}));
        j["formula_discrepancies"] = d;
        j["integral"] = dual.integral;
        j["product"] = matrix_json(dual.product);
        j["off_diagonal_minus_one"] = off_diag_ok;
        j["diagonal_matches_i2_plus_i_minus_1"] = diag_ok;
        j["corner_entry"] = rational_json(dual.product.at(dual.product.rows(), dual.product.cols()));
        if (interior_checked) {
            j["unique_interior_origin"] = interior_ok;
            j["origin_barycentrics"] = rational_vector_json(interior.origin_barycentrics);
        }
        j["reflexive"] = reflexive;
        return dump(j);
    }
    std::ostringstream out;
    out << "n=" << n << "\n";
    out << "truncated vertices:\n" << truncated_vertex_matrix(n).to_string() << "\n";
    out << "dual vertices (columns), solved exactly:\n" << dual.xi.to_string() << "\n";
    out << "integral: " << (dual.integral ? "yes" : "no") << "\n";
    out << "product:\n" << dual.product.to_string() << "\n";
    out << "off-diagonal all -1: " << (off_diag_ok ? "yes" : "no") << "\n";
    out << "diagonal i^2+i-1 for i<n: " << (diag_ok ? "yes" : "no") << ", corner entry "
        << dual.product.at(dual.product.rows(), dual.product.cols()).to_string() << "\n";
    out << "closed-form dual:\n" << formula.to_string() << "\n";
    if (diff.empty()) {
        out << "closed form matches the solved dual\n";
    } else {
        out << "closed form differs from the solved dual at:";
        for (auto [i, j] : diff)
            out << " (" << i << "," << j << ") solved " << dual.xi.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).to_string()
                << " vs formula " << formula.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).to_string();
        out << "\n";
    }
    if (interior_checked) {
        out << "unique interior lattice point at the origin: " << (interior_ok ? "yes" : "no")
            << ", barycentrics " << format_rational_vector(interior.origin_barycentrics) << "\n";
    }
    out << "reflexive: " << (reflexive ? "yes" : "no") << "\n";
    return out.str();
}

std::string report_polytope_normal(int n, std::int64_t t, bool json_mode) {
    NormalityCheck check = normality_check(n, t);
    if (json_mode) {
        json j;
        j["n"] = n;
        j["t"] = t;
        j["points"] = check.points;
        j["failures"] = check.failures;
        j["backtracks"] = check.backtracks;
        j["pass"] = check.pass;
        return dump(j);
    }
    std::ostringstream out;
    out << "n=" << n << " t=" << t << ": " << check.points
        << " lattice points in the dilation; decompositions into " << t
        << " base points: " << (check.pass ? "all succeeded" : std::to_string(check.failures) + " failed")
        << " (backtracks: " << check.backtracks << ")\n";
    return out.str();
}

} // namespace betti
