#pragma once

#include <cstdint>
#include <vector>

#include "core/matrix.hpp"

namespace betti {

inline constexpr int kMaxDilationLength = 8;
inline constexpr std::int64_t kMaxDilationBound = 8;
inline constexpr int kMaxReflexiveSize = 12;
inline constexpr int kMaxInteriorSize = 6;

/// Lattice points of the t-th dilation of the composition simplex: all
/// anti-lecture hall compositions of length n with first entry exactly t.
/// With map_to_betti, each point is pushed through Psi into reduced-Betti
/// coordinates. Guarded at n <= 8, t <= 8.
std::vector<std::vector<std::int64_t>> lattice_points_dilation(int n, std::int64_t t,
                                                               bool map_to_betti = false);

struct EhrhartCheck {
    std::int64_t count = 0;
    std::int64_t expected = 0;
    bool pass = false;
};

/// Compares the enumerated lattice-point count of the t-th dilation against
/// (t+1)^n - t^n.
EhrhartCheck ehrhart_check(int n, std::int64_t t);

/// Truncated coordinates: subtract eta_n entrywise, drop the first entry.
std::vector<std::int64_t> truncate_point(const std::vector<std::int64_t>& p);

/// n x (n-1) matrix whose rows are the truncated simplex vertices, i.e. the
/// rows of the omega matrix with the first column removed, minus eta.
ExactMatrix truncated_vertex_matrix(int n);

struct ReflexiveDual {
    ExactMatrix xi;      // (n-1) x n, columns are the dual vertices
    bool integral = false;
    ExactMatrix product; // vertex matrix times xi, n x n
};

/// Dual simplex vertices solved exactly from v_i . c_j = -1 for i != j.
/// Integrality of xi is the reflexivity witness. Guarded at 2 <= n <= 12.
ReflexiveDual reflexive_dual(int n);

/// Literal closed-form dual (sum of three structured matrices), kept separate
/// from the solved dual for comparison.
ExactMatrix closed_form_dual(int n);

/// Positions (i, j) where the solved dual and the closed form disagree.
std::vector<std::pair<int, int>> xi_formula_discrepancies(int n);

struct InteriorCheck {
    bool pass = false;
    std::vector<std::vector<std::int64_t>> interior_points;
    std::vector<Rational> origin_barycentrics;
};

/// Bounding-box scan of the truncated simplex with exact barycentric
/// membership tests; passes iff the origin is the unique interior lattice
/// point. Guarded at n <= 6.
InteriorCheck interior_point_check(int n);

/// All lattice points of the truncated simplex (boundary included), by the
/// same scan. Guarded at n <= 6.
std::vector<std::vector<std::int64_t>> truncated_simplex_points(int n);

struct NormalityCheck {
    std::int64_t points = 0;
    std::int64_t failures = 0;
    std::int64_t backtracks = 0;
    bool pass = false;
};

/// Decomposes every lattice point of the t-th dilation into t lattice points
/// of the base simplex (first entries 1).
NormalityCheck normality_check(int n, std::int64_t t);

} // namespace betti
