// Command-line front end. Talks to the library exclusively through the C API.
//
// Exit codes: 0 success, 1 domain errors (not realizable, not chordal, not in
// cone, inadmissible decomposition), 2 usage or parse errors, 3 anything else.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bettigraphs.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

int status_exit_code(betti_status s) {
    switch (s) {
    case BETTI_OK: return kExitOk;
    case BETTI_ERR_NOT_REALIZABLE:
    case BETTI_ERR_NOT_CHORDAL:
    case BETTI_ERR_NOT_IN_CONE:
    case BETTI_ERR_OVERFLOW: return kExitDomain;
    case BETTI_ERR_INVALID:
    case BETTI_ERR_RANGE:
    case BETTI_ERR_PARSE: return kExitUsage;
    default: return kExitInternal;
    }
}

int report_failure(betti_status s) {
    std::cerr << "error: " << betti_last_error() << "\n";
    return status_exit_code(s);
}

/// Prints and frees a report string.
int emit(betti_status s, char* text, int domain_exit = kExitOk) {
    if (s != BETTI_OK) return report_failure(s);
    std::cout << text;
    betti_string_free(text);
    return domain_exit;
}

std::vector<int64_t> parse_int_list(const std::string& arg) {
    std::vector<int64_t> out;
    std::string token;
    std::istringstream in(arg);
    while (std::getline(in, token, ',')) {
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(token, &used);
        } catch (const std::exception&) {
            throw CLI::ValidationError("'" + token + "' is not an integer");
        }
        if (used != token.size()) throw CLI::ValidationError("'" + token + "' is not an integer");
        out.push_back(value);
    }
    if (out.empty()) throw CLI::ValidationError("expected a comma-separated integer list");
    return out;
}

/// Reads the graph from a file (or stdin for "-") honoring --graph6.
betti_status load_graph(const std::string& path, bool graph6, betti_graph** out) {
    std::string text;
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path);
        if (!in) {
            std::cerr << "error: cannot open '" << path << "'\n";
            std::exit(kExitUsage);
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    return betti_graph_parse(text.c_str(), graph6 ? 1 : 0, out);
}

struct GraphGuard {
    betti_graph* g = nullptr;
    ~GraphGuard() { betti_graph_free(g); }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Betti diagrams of 2-linear resolutions via graph combinatorics"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand
    bool json = false;
    bool graph6 = false;
    app.add_flag("--json", json, "emit a JSON document instead of text");
    app.add_flag("--graph6", graph6, "read graphs in graph6 format");

    std::string graph_path;
    std::string vector_arg;
    std::string lambda_arg;
    std::string degree_arg;
    int64_t m_value = 1;
    int census_max = 7;
    bool census_csv = false;
    bool alhc_inverse = false;
    int poly_n = 2;
    int64_t poly_t = 1;

    auto* cmd_betti = app.add_subcommand("betti", "reduced Betti vector and diagram of a graph");
    cmd_betti->add_option("graphfile", graph_path, "graph file, or - for stdin")->required();

    auto* cmd_dec = app.add_subcommand("decompose", "Boij-Soderberg coefficients of omega");
    cmd_dec->add_option("omega", vector_arg, "comma-separated integers")->required();
    cmd_dec->add_option("--m", m_value, "beta_{0,0} of the diagram (default 1)");

    auto* cmd_rep = app.add_subcommand("threshold-rep", "threshold representative of a chordal graph");
    cmd_rep->add_option("graphfile", graph_path, "graph file, or - for stdin")->required();

    auto* cmd_from = app.add_subcommand("from-omega", "threshold graph realizing omega");
    cmd_from->add_option("omega", vector_arg, "comma-separated integers")->required();

    auto* cmd_mod = app.add_subcommand("module-decompose",
                                       "omega as a sum of m threshold Betti vectors");
    cmd_mod->add_option("omega", vector_arg, "comma-separated integers")->required();
    cmd_mod->add_option("m", m_value, "number of summands (beta_{0,0})")->required();

    auto* cmd_alhc = app.add_subcommand("alhc", "anti-lecture-hall coordinates of omega");
    cmd_alhc->add_option("vector", vector_arg, "comma-separated integers")->required();
    cmd_alhc->add_flag("--inverse", alhc_inverse, "treat the input as lambda and return omega");

    auto* cmd_pure = app.add_subcommand("pure", "pure diagram of a degree sequence");
    cmd_pure->add_option("degrees", degree_arg, "comma-separated degree sequence")->required();

    auto* cmd_census = app.add_subcommand("census", "classify all graphs up to isomorphism");
    cmd_census->add_option("--max", census_max, "largest vertex count (default 7, max 8)");
    cmd_census->add_flag("--csv", census_csv, "emit CSV");

    auto* cmd_poly = app.add_subcommand("polytope", "lattice simplex verification");
    cmd_poly->require_subcommand(1);
    auto* cmd_ehr = cmd_poly->add_subcommand("ehrhart", "lattice-point count of a dilation");
    cmd_ehr->add_option("n", poly_n, "composition length")->required();
    cmd_ehr->add_option("t", poly_t, "dilation factor")->required();
    auto* cmd_reflex = cmd_poly->add_subcommand("reflexive", "dual simplex and integrality");
    cmd_reflex->add_option("n", poly_n, "simplex index")->required();
    auto* cmd_norm = cmd_poly->add_subcommand("normal", "dilation decomposition check");
    cmd_norm->add_option("n", poly_n, "composition length")->required();
    cmd_norm->add_option("t", poly_t, "dilation factor")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        char* text = nullptr;
        if (cmd_betti->parsed()) {
            GraphGuard g;
            betti_status s = load_graph(graph_path, graph6, &g.g);
            if (s != BETTI_OK) return report_failure(s);
            s = betti_report_betti(g.g, json, &text);
            return emit(s, text);
        }
        if (cmd_dec->parsed()) {
            auto omega = parse_int_list(vector_arg);
            int admissible = 0;
            betti_status s = betti_report_decompose(omega.data(), omega.size(), m_value, json,
                                                    &admissible, &text);
            return emit(s, text, admissible ? kExitOk : kExitDomain);
        }
        if (cmd_rep->parsed()) {
            GraphGuard g;
            betti_status s = load_graph(graph_path, graph6, &g.g);
            if (s != BETTI_OK) return report_failure(s);
            s = betti_report_threshold_rep(g.g, json, &text);
            return emit(s, text);
        }
        if (cmd_from->parsed()) {
            auto omega = parse_int_list(vector_arg);
            betti_status s = betti_report_from_omega(omega.data(), omega.size(), json, &text);
            return emit(s, text);
        }
        if (cmd_mod->parsed()) {
            auto omega = parse_int_list(vector_arg);
            betti_status s =
                betti_report_module_decompose(omega.data(), omega.size(), m_value, json, &text);
            return emit(s, text);
        }
        if (cmd_alhc->parsed()) {
            auto vec = parse_int_list(vector_arg);
            betti_status s = betti_report_alhc(vec.data(), vec.size(), alhc_inverse, json, &text);
            return emit(s, text);
        }
        if (cmd_pure->parsed()) {
            auto degrees = parse_int_list(degree_arg);
            betti_status s = betti_report_pure(degrees.data(), degrees.size(), json, &text);
            return emit(s, text);
        }
        if (cmd_census->parsed()) {
            int format = json ? 2 : (census_csv ? 1 : 0);
            betti_status s = betti_report_census(census_max, format, &text);
            return emit(s, text);
        }
        if (cmd_ehr->parsed()) {
            betti_status s = betti_report_polytope_ehrhart(poly_n, poly_t, json, &text);
            return emit(s, text);
        }
        if (cmd_reflex->parsed()) {
            betti_status s = betti_report_polytope_reflexive(poly_n, json, &text);
            return emit(s, text);
        }
        if (cmd_norm->parsed()) {
            betti_status s = betti_report_polytope_normal(poly_n, poly_t, json, &text);
            return emit(s, text);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
