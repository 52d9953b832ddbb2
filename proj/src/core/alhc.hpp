#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "core/threshold.hpp"

namespace betti {

inline constexpr int kMaxAlhcCountLength = 12;
inline constexpr std::int64_t kMaxAlhcCountBound = 8;

/// True iff t >= lambda_1/1 >= lambda_2/2 >= ... >= lambda_n/n >= 0, checked
/// by exact cross-multiplication.
bool is_alhc(const std::vector<std::int64_t>& lambda, std::int64_t t);

struct AlhcImage {
    std::vector<std::int64_t> lambda;
    /// lambda is an anti-lecture hall composition bounded by 1 with
    /// lambda_1 = 1, i.e. omega is a lattice point of the Betti simplex.
    bool in_simplex = false;
};

/// lambda = omega * Psi^{-1}. Unimodular, so integer in and integer out.
AlhcImage omega_to_alhc(const std::vector<std::int64_t>& omega);

/// omega = lambda * Psi. Inverse of omega_to_alhc.
std::vector<std::int64_t> alhc_to_omega(const std::vector<std::int64_t>& lambda);

/// Exhaustive count of anti-lecture hall compositions of length n bounded by
/// t (dynamic program over the chain; no closed form involved). Guarded at
/// n <= 12, t <= 8.
std::int64_t count_alhc(int n, std::int64_t t);

/// Splits an ALHC with lambda_1 = m (bound m) into m ALHCs with first entry 1
/// (bound 1). Depth-first greedy with backtracking; nullopt when the search
/// space is exhausted. backtracks, when given, accumulates retry statistics.
std::optional<std::vector<std::vector<std::int64_t>>>
decompose_alhc_sum(const std::vector<std::int64_t>& lambda, std::int64_t m,
                   std::int64_t* backtracks = nullptr);

struct ModuleDecomposition {
    std::vector<ThresholdSequence> summands;
    std::vector<std::vector<std::int64_t>> summand_omegas;
    std::int64_t backtracks = 0;
};

/// Writes omega as the sum of the reduced Betti vectors of m threshold
/// graphs. Throws NotInConeError when omega * Psi^{-1} is not an ALHC with
/// first entry m and bound m. The returned summands re-sum to omega; this is
/// verified on every call.
ModuleDecomposition decompose_module(const std::vector<std::int64_t>& omega, std::int64_t m);

} // namespace betti
