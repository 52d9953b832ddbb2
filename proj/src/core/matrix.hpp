#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "core/rational.hpp"

namespace betti {

/// Dense matrix over exact rationals. Indices are 1-based everywhere, matching
/// the conventions of the formulas this library implements. A matrix may have
/// zero rows or columns (empty product conventions apply).
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static ExactMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j);
    const Rational& at(std::size_t i, std::size_t j) const;

    bool operator==(const ExactMatrix& o) const = default;

    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;

    bool is_identity() const;
    bool is_integral() const;

    /// Exact Gauss-Jordan inverse; throws SingularMatrixError.
    ExactMatrix inverse() const;

    std::string to_string() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> entries_; // row-major
};

/// Solves a x = b exactly for square a; throws SingularMatrixError.
std::vector<Rational> solve(const ExactMatrix& a, const std::vector<Rational>& b);

/// Row vector times matrix.
std::vector<Rational> row_times_matrix(const std::vector<Rational>& v, const ExactMatrix& m);
std::vector<Rational> row_times_matrix(const std::vector<std::int64_t>& v, const ExactMatrix& m);

std::vector<Rational> to_rational_vector(const std::vector<std::int64_t>& v);

// ---------------------------------------------------------------------------
// The closed-form matrices driving 2-linear Betti arithmetic. All are guarded
// at n <= 25 so that every entry and every product stays inside exact 64-bit
// range; larger n throws std::out_of_range.
// ---------------------------------------------------------------------------

inline constexpr int kMaxClosedFormSize = 25;

/// n x n, entry (i,j) = j*C(i+1, j+1). Lower triangular with nonzero diagonal;
/// row l is the reduced Betti vector of the pure diagram with degrees
/// (0, 2, ..., l+1).
ExactMatrix omega_matrix(int n);

/// n x n, entry (i,j) = (-1)^(i-j) * (1/i) * C(i+1, j+1). Exact inverse of
/// omega_matrix(n).
ExactMatrix omega_inverse(int n);

/// n x n, entry (i,j) = C(i-1, j-1). Unimodular.
ExactMatrix psi_matrix(int n);

/// n x n, entry (i,j) = (-1)^(i-j) * C(i-1, j-1). Exact inverse of psi_matrix(n).
ExactMatrix psi_inverse(int n);

/// (n-1) x n, entry (i,j) = 1 iff j = i or j = i+1.
ExactMatrix lambda_matrix(int n);

/// n x (n-1), entry (i,j) = (-1)^(i+j) for i <= j, else 0. Right inverse of
/// lambda_matrix(n): their product is the identity of size n-1.
ExactMatrix lambda_right_inverse(int n);

/// Length n, entry i = C(n, i).
std::vector<std::int64_t> eta_vector(int n);

} // namespace betti
