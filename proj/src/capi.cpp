#include "bettigraphs.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "core/alhc.hpp"
#include "core/census.hpp"
#include "core/diagram.hpp"
#include "core/errors.hpp"
#include "core/graph.hpp"
#include "core/lattice.hpp"
#include "core/reports.hpp"
#include "core/threshold.hpp"

extern "C" {
struct betti_graph {
    betti::Graph rep;
};
}

namespace {

thread_local std::string g_last_error;

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

betti_status fail(betti_status code, const char* what) {
    g_last_error = what;
    return code;
}

/// Runs the body and maps exceptions onto status codes.
template <typename F>
betti_status guarded(F&& body) noexcept {
    try {
        return body();
    } catch (const betti::NotRealizableError& e) {
        return fail(BETTI_ERR_NOT_REALIZABLE, e.what());
    } catch (const betti::NotChordalError& e) {
        return fail(BETTI_ERR_NOT_CHORDAL, e.what());
    } catch (const betti::NotInConeError& e) {
        return fail(BETTI_ERR_NOT_IN_CONE, e.what());
    } catch (const betti::OverflowError& e) {
        return fail(BETTI_ERR_OVERFLOW, e.what());
    } catch (const betti::ParseError& e) {
        return fail(BETTI_ERR_PARSE, e.what());
    } catch (const std::out_of_range& e) {
        return fail(BETTI_ERR_RANGE, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(BETTI_ERR_INVALID, e.what());
    } catch (const std::exception& e) {
        return fail(BETTI_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(BETTI_ERR_INTERNAL, "unknown error");
    }
}

std::vector<std::int64_t> to_vector(const int64_t* data, size_t n) {
    if (data == nullptr && n > 0) throw std::invalid_argument("null vector argument");
    return std::vector<std::int64_t>(data, data + n);
}

} // namespace

extern "C" {

const char* betti_last_error(void) { return g_last_error.c_str(); }

void betti_string_free(char* s) { std::free(s); }

void betti_string_array_free(char** strings, size_t count) {
    if (!strings) return;
    for (size_t i = 0; i < count; ++i) std::free(strings[i]);
    std::free(strings);
}

betti_status betti_graph_new(int32_t vertex_count, betti_graph** out) {
    return guarded([&]() {
        if (!out) throw std::invalid_argument("null output argument");
        *out = new betti_graph{betti::Graph(vertex_count)};
        return BETTI_OK;
    });
}

betti_status betti_graph_add_edge(betti_graph* g, int32_t u, int32_t v) {
    return guarded([&]() {
        if (!g) throw std::invalid_argument("null graph argument");
        g->rep.add_edge(u, v);
        return BETTI_OK;
    });
}

betti_status betti_graph_parse(const char* text, int use_graph6, betti_graph** out) {
    return guarded([&]() {
        if (!text || !out) throw std::invalid_argument("null argument");
        betti::Graph parsed =
            use_graph6 ? betti::parse_graph6(text) : betti::parse_graph_text(text);
        *out = new betti_graph{std::move(parsed)};
        return BETTI_OK;
    });
}

betti_status betti_graph_format(const betti_graph* g, int use_graph6, char** out_text) {
    return guarded([&]() {
        if (!g || !out_text) throw std::invalid_argument("null argument");
        *out_text = copy_string(use_graph6 ? betti::format_graph6(g->rep)
                                           : betti::format_graph_text(g->rep));
        return BETTI_OK;
    });
}

void betti_graph_free(betti_graph* g) { delete g; }

int32_t betti_graph_vertex_count(const betti_graph* g) {
    return g ? g->rep.vertex_count() : 0;
}

int32_t betti_graph_edge_count(const betti_graph* g) { return g ? g->rep.edge_count() : 0; }

betti_status betti_graph_edges(const betti_graph* g, int32_t* out_pairs) {
    return guarded([&]() {
        if (!g || !out_pairs) throw std::invalid_argument("null argument");
        size_t idx = 0;
        for (auto [u, v] : g->rep.edges()) {
            out_pairs[idx++] = u;
            out_pairs[idx++] = v;
        }
        return BETTI_OK;
    });
}

betti_status betti_graph_is_chordal(const betti_graph* g, int* out) {
    return guarded([&]() {
        if (!g || !out) throw std::invalid_argument("null argument");
        *out = betti::is_chordal(g->rep) ? 1 : 0;
        return BETTI_OK;
    });
}

betti_status betti_graph_component_count(const betti_graph* g, uint32_t subset, int32_t* out) {
    return guarded([&]() {
        if (!g || !out) throw std::invalid_argument("null argument");
        if ((subset & ~g->rep.full_set()) != 0)
            throw std::out_of_range("subset contains vertices outside the graph");
        *out = betti::component_count(g->rep, subset);
        return BETTI_OK;
    });
}

betti_status betti_graph_move_vertex(const betti_graph* g, int32_t v, int32_t w,
                                     betti_graph** out) {
    return guarded([&]() {
        if (!g || !out) throw std::invalid_argument("null argument");
        *out = new betti_graph{betti::move_vertex(g->rep, v, w)};
        return BETTI_OK;
    });
}

betti_status betti_froberg_vector(const betti_graph* g, int64_t* out) {
    return guarded([&]() {
        if (!g || !out) throw std::invalid_argument("null argument");
        std::vector<std::int64_t> omega = betti::froberg_vector(g->rep);
        std::copy(omega.begin(), omega.end(), out);
        return BETTI_OK;
    });
}

betti_status betti_bs_decompose(const int64_t* omega, size_t n, int64_t m, int64_t* c_num,
                                int64_t* c_den, int* out_nonneg, int* out_sums_to_m) {
    return guarded([&]() {
        if (!c_num || !c_den) throw std::invalid_argument("null output argument");
        betti::BSCoefficients bs = betti::bs_decompose(to_vector(omega, n), m);
        for (size_t i = 0; i < n; ++i) {
            c_num[i] = bs.c[i].numerator();
            c_den[i] = bs.c[i].denominator();
        }
        if (out_nonneg) *out_nonneg = bs.nonneg ? 1 : 0;
        if (out_sums_to_m) *out_sums_to_m = bs.sums_to_m ? 1 : 0;
        return BETTI_OK;
    });
}

betti_status betti_chordality_certificate(const int64_t* omega, size_t n, int* out_verdict) {
    return guarded([&]() {
        if (!out_verdict) throw std::invalid_argument("null output argument");
        betti::CertificateResult cert = betti::chordality_certificate(to_vector(omega, n));
        switch (cert.verdict) {
        case betti::Certificate::Admissible: *out_verdict = 0; break;
        case betti::Certificate::NegativeCoefficient: *out_verdict = 1; break;
        case betti::Certificate::WrongSum: *out_verdict = 2; break;
        }
        return BETTI_OK;
    });
}

betti_status betti_threshold_build_graph(const char* sequence, betti_graph** out) {
    return guarded([&]() {
        if (!sequence || !out) throw std::invalid_argument("null argument");
        *out = new betti_graph{betti::build_graph(betti::ThresholdSequence(sequence))};
        return BETTI_OK;
    });
}

betti_status betti_threshold_omega(const char* sequence, int64_t* out) {
    return guarded([&]() {
        if (!sequence || !out) throw std::invalid_argument("null argument");
        std::vector<std::int64_t> omega =
            betti::threshold_omega(betti::ThresholdSequence(sequence));
        std::copy(omega.begin(), omega.end(), out);
        return BETTI_OK;
    });
}

betti_status betti_omega_to_threshold(const int64_t* omega, size_t n, char** out_sequence) {
    return guarded([&]() {
        if (!out_sequence) throw std::invalid_argument("null output argument");
        *out_sequence = copy_string(betti::omega_to_threshold(to_vector(omega, n)).sequence.ops());
        return BETTI_OK;
    });
}

betti_status betti_threshold_representative(const betti_graph* g, char** out_sequence) {
    return guarded([&]() {
        if (!g || !out_sequence) throw std::invalid_argument("null argument");
        *out_sequence = copy_string(betti::threshold_representative(g->rep).ops());
        return BETTI_OK;
    });
}

betti_status betti_is_alhc(const int64_t* lambda, size_t n, int64_t t, int* out) {
    return guarded([&]() {
        if (!out) throw std::invalid_argument("null output argument");
        *out = betti::is_alhc(to_vector(lambda, n), t) ? 1 : 0;
        return BETTI_OK;
    });
}

betti_status betti_omega_to_alhc(const int64_t* omega, size_t n, int64_t* out_lambda,
                                 int* out_in_simplex) {
    return guarded([&]() {
        if (!out_lambda) throw std::invalid_argument("null output argument");
        betti::AlhcImage img = betti::omega_to_alhc(to_vector(omega, n));
        std::copy(img.lambda.begin(), img.lambda.end(), out_lambda);
        if (out_in_simplex) *out_in_simplex = img.in_simplex ? 1 : 0;
        return BETTI_OK;
    });
}

betti_status betti_alhc_to_omega(const int64_t* lambda, size_t n, int64_t* out_omega) {
    return guarded([&]() {
        if (!out_omega) throw std::invalid_argument("null output argument");
        std::vector<std::int64_t> omega = betti::alhc_to_omega(to_vector(lambda, n));
        std::copy(omega.begin(), omega.end(), out_omega);
        return BETTI_OK;
    });
}

betti_status betti_count_alhc(int32_t n, int64_t t, int64_t* out) {
    return guarded([&]() {
        if (!out) throw std::invalid_argument("null output argument");
        *out = betti::count_alhc(n, t);
        return BETTI_OK;
    });
}

betti_status betti_decompose_module(const int64_t* omega, size_t n, int64_t m,
                                    char*** out_sequences, size_t* out_count) {
    return guarded([&]() {
        if (!out_sequences || !out_count) throw std::invalid_argument("null output argument");
        betti::ModuleDecomposition dec = betti::decompose_module(to_vector(omega, n), m);
        char** strings = static_cast<char**>(std::malloc(sizeof(char*) * dec.summands.size()));
        for (size_t i = 0; i < dec.summands.size(); ++i)
            strings[i] = copy_string(dec.summands[i].ops());
        *out_sequences = strings;
        *out_count = dec.summands.size();
        return BETTI_OK;
    });
}

betti_status betti_ehrhart_check(int32_t n, int64_t t, int64_t* out_count, int64_t* out_expected,
                                 int* out_pass) {
    return guarded([&]() {
        betti::EhrhartCheck check = betti::ehrhart_check(n, t);
        if (out_count) *out_count = check.count;
        if (out_expected) *out_expected = check.expected;
        if (out_pass) *out_pass = check.pass ? 1 : 0;
        return BETTI_OK;
    });
}

betti_status betti_reflexive_check(int32_t n, int* out_integral, int* out_off_diagonal_ok,
                                   int* out_formula_discrepancies) {
    return guarded([&]() {
        betti::ReflexiveDual dual = betti::reflexive_dual(n);
        bool off_ok = true;
        for (std::size_t i = 1; i <= dual.product.rows(); ++i)
            for (std::size_t j = 1; j <= dual.product.cols(); ++j)
                if (i != j && dual.product.at(i, j) != betti::Rational(-1)) off_ok = false;
        if (out_integral) *out_integral = dual.integral ? 1 : 0;
        if (out_off_diagonal_ok) *out_off_diagonal_ok = off_ok ? 1 : 0;
        if (out_formula_discrepancies)
            *out_formula_discrepancies = static_cast<int>(betti::xi_formula_discrepancies(n).size());
        return BETTI_OK;
    });
}

betti_status betti_census_row(int32_t k, int64_t* out_chordal, int64_t* out_false_chordal,
                              int64_t* out_not_chordal) {
    return guarded([&]() {
        betti::CensusRow row = betti::census_table(k).back();
        if (out_chordal) *out_chordal = row.chordal;
        if (out_false_chordal) *out_false_chordal = row.false_chordal;
        if (out_not_chordal) *out_not_chordal = row.not_chordal;
        return BETTI_OK;
    });
}

betti_status betti_classify(const betti_graph* g, int* out_class) {
    return guarded([&]() {
        if (!g || !out_class) throw std::invalid_argument("null argument");
        switch (betti::classify(g->rep)) {
        case betti::GraphClass::Chordal: *out_class = 0; break;
        case betti::GraphClass::FalseChordal: *out_class = 1; break;
        case betti::GraphClass::NotChordal: *out_class = 2; break;
        }
        return BETTI_OK;
    });
}

betti_status betti_report_betti(const betti_graph* g, int as_json, char** out) {
    return guarded([&]() {
        if (!g || !out) throw std::invalid_argument("null argument");
        *out = copy_string(betti::report_betti(g->rep, as_json != 0));
        return BETTI_OK;
    });
}

betti_status betti_report_decompose(const int64_t* omega, size_t n, int64_t m, int as_json,
                                    int* out_admissible, char** out) {
    return guarded([&]() {
        if (!out) throw std::invalid_argument("null output argument");
        bool admissible = false;
        *out = copy_string(betti::report_decompose(to_vector(omega, n), m, as_json != 0, &admissible));
        if (out_admissible) *out_admissible = admissible ? 1 : 0;
        return BETTI_OK;
    });
}

betti_status betti_report_threshold_rep(const betti_graph* g, int as_json, char** out) {
    return guarded([&]() {
        if (!g || !out) throw std::invalid_argument("null argument");
        *out = copy_string(betti::report_threshold_rep(g->rep, as_json != 0));
        return BETTI_OK;
    });
}

betti_status betti_report_from_omega(const int64_t* omega, size_t n, int as_json, char** out) {
    return guarded([&]() {
        if (!out) throw std::invalid_argument("null output argument");
        *out = copy_string(betti::report_from_omega(to_vector(omega, n), as_json != 0));
        return BETTI_OK;
    });
}

betti_status betti_report_module_decompose(const int64_t* omega, size_t n, int64_t m, int as_json,
                                           char** out) {
    return guarded([&]() {
        if (!out) throw std::invalid_argument("null output argument");
        *out = copy_string(betti::report_module_decompose(to_vector(omega, n), m, as_json != 0));
        return BETTI_OK;
    });
}

betti_status betti_report_alhc(const int64_t* vec, size_t n, int inverse, int as_json, char** out) {
    return guarded([&]() {
        if (!out) throw std::invalid_argument("null output argument");
        *out = copy_string(betti::report_alhc(to_vector(vec, n), inverse != 0, as_json != 0));
        return BETTI_OK;
    });
}

betti_status betti_report_pure(const int64_t* degrees, size_t len, int as_json, char** out) {
    return guarded([&]() {
        if (!out) throw std::invalid_argument("null output argument");
        *out = copy_string(betti::report_pure(to_vector(degrees, len), as_json != 0));
        return BETTI_OK;
    });
}

betti_status betti_report_census(int32_t kmax, int format, char** out) {
    return guarded([&]() {
        if (!out) throw std::invalid_argument("null output argument");
        betti::CensusFormat f = format == 1   ? betti::CensusFormat::Csv
                                : format == 2 ? betti::CensusFormat::Json
                                              : betti::CensusFormat::Table;
        *out = copy_string(betti::report_census(kmax, f));
        return BETTI_OK;
    });
}

betti_status betti_report_polytope_ehrhart(int32_t n, int64_t t, int as_json, char** out) {
    return guarded([&]() {
        if (!out) throw std::invalid_argument("null output argument");
        *out = copy_string(betti::report_polytope_ehrhart(n, t, as_json != 0));
        return BETTI_OK;
    });
}

betti_status betti_report_polytope_reflexive(int32_t n, int as_json, char** out) {
    return guarded([&]() {
        if (!out) throw std::invalid_argument("null output argument");
        *out = copy_string(betti::report_polytope_reflexive(n, as_json != 0));
        return BETTI_OK;
    });
}

betti_status betti_report_polytope_normal(int32_t n, int64_t t, int as_json, char** out) {
    return guarded([&]() {
        if (!out) throw std::invalid_argument("null output argument");
        *out = copy_string(betti::report_polytope_normal(n, t, as_json != 0));
        return BETTI_OK;
    });
}

} // extern "C"
