#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "core/matrix.hpp"
#include "core/rational.hpp"

namespace betti {

/// Strictly increasing nonnegative integers (d_0, ..., d_s).
class DegreeSequence {
public:
    explicit DegreeSequence(std::vector<std::int64_t> degrees);

    const std::vector<std::int64_t>& degrees() const { return degrees_; }
    std::size_t size() const { return degrees_.size(); }

private:
    std::vector<std::int64_t> degrees_;
};

/// Sparse table of graded Betti numbers, entry (i, j) rendered at row j-i,
/// column i. Only nonzero entries are stored.
class BettiDiagram {
public:
    BettiDiagram() = default;

    /// Diagram with beta_{0,0} = m and second row omega (entries (i, i+1)).
    static BettiDiagram two_linear(std::int64_t beta00, const std::vector<std::int64_t>& omega);

    void set_entry(int i, int j, const Rational& value);
    Rational entry(int i, int j) const;
    Rational beta00() const { return entry(0, 0); }

    const std::map<std::pair<int, int>, Rational>& entries() const { return entries_; }

    /// True when the only entries sit at (0,0) and (i, i+1) for i >= 1.
    bool is_two_linear() const;

    /// Entries (1,2), ..., (n, n+1) as a vector of length n.
    std::vector<Rational> second_row(int n) const;

    /// Aligned table, one row per degree shift, "." for zero entries. A
    /// diagram built by two_linear prints its full second row, trailing
    /// zeros included.
    std::string to_table() const;

private:
    std::map<std::pair<int, int>, Rational> entries_;
    int second_row_width_ = 0;
};

/// Pure diagram of a degree sequence: the entry at (i, d_i) is
/// prod_{k != 0, i} |(d_k - d_0) / (d_k - d_i)|, everything else zero.
BettiDiagram pure_diagram(const DegreeSequence& d);

struct BSCoefficients {
    std::vector<Rational> c;
    bool nonneg = false;
    bool sums_to_m = false;

    bool admissible() const { return nonneg && sums_to_m; }
};

/// c = omega * Omega^{-1}, with admissibility flags against beta_{0,0} = m.
/// Inadmissible results are returned, not rejected.
BSCoefficients bs_decompose(const std::vector<std::int64_t>& omega, std::int64_t m);

enum class Certificate {
    Admissible,
    NegativeCoefficient,
    WrongSum,
};

struct CertificateResult {
    Certificate verdict = Certificate::Admissible;
    std::vector<Rational> c;

    bool admissible() const { return verdict == Certificate::Admissible; }
};

/// Chordality certificate: admissible iff omega * Omega^{-1} is nonnegative
/// and sums to 1. When both conditions fail, the negative coefficient is
/// reported.
CertificateResult chordality_certificate(const std::vector<std::int64_t>& omega);

std::string certificate_name(Certificate c);

} // namespace betti
