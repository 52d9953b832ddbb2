#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/graph.hpp"

namespace betti {

enum class CensusFormat { Table, Csv, Json };

// One report per CLI subcommand, rendered as plain text or a JSON document.
// Rationals always serialize as "p/q" (or "p" when the denominator is 1).

std::string report_betti(const Graph& g, bool json);
/// admissible_out, when given, receives the admissibility verdict so callers
/// can map it onto an exit code.
std::string report_decompose(const std::vector<std::int64_t>& omega, std::int64_t m, bool json,
                             bool* admissible_out = nullptr);
std::string report_threshold_rep(const Graph& g, bool json);
std::string report_from_omega(const std::vector<std::int64_t>& omega, bool json);
std::string report_module_decompose(const std::vector<std::int64_t>& omega, std::int64_t m,
                                    bool json);
std::string report_alhc(const std::vector<std::int64_t>& vec, bool inverse, bool json);
std::string report_pure(const std::vector<std::int64_t>& degrees, bool json);
std::string report_census(int kmax, CensusFormat format);
std::string report_polytope_ehrhart(int n, std::int64_t t, bool json);
std::string report_polytope_reflexive(int n, bool json);
std::string report_polytope_normal(int n, std::int64_t t, bool json);

std::string format_int_vector(const std::vector<std::int64_t>& v);

} // namespace betti
