#include "core/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "core/alhc.hpp"
#include "core/intops.hpp"

namespace betti {

namespace {

void check_dilation_guard(int n, std::int64_t t) {
    if (n < 1 || n > kMaxDilationLength)
        throw std::out_of_range("dilation length guarded at " + std::to_string(kMaxDilationLength));
    if (t < 0 || t > kMaxDilationBound)
        throw std::out_of_range("dilation factor guarded at " + std::to_string(kMaxDilationBound));
}

template <typename Visit>
void enumerate_chain(std::vector<std::int64_t>& lambda, int pos, Visit&& visit) {
    int n = static_cast<int>(lambda.size());
    if (pos == n) {
        visit(lambda);
        return;
    }
    int i = pos + 1;
    std::int64_t hi = static_cast<std::int64_t>(i) * lambda[pos - 1] / (i - 1);
    for (std::int64_t v = 0; v <= hi; ++v) {
        lambda[pos] = v;
        enumerate_chain(lambda, pos + 1, visit);
    }
}

/// Visits every ALHC of length n with first entry exactly t.
template <typename Visit>
void enumerate_dilation(int n, std::int64_t t, Visit&& visit) {
    std::vector<std::int64_t> lambda(static_cast<std::size_t>(n), 0);
    lambda[0] = t;
    if (n == 1)
        visit(lambda);
    else
        enumerate_chain(lambda, 1, visit);
}

std::int64_t lcm_denominators(const ExactMatrix& m) {
    std::int64_t l = 1;
    for (std::size_t i = 1; i <= m.rows(); ++i)
        for (std::size_t j = 1; j <= m.cols(); ++j) {
            std::int64_t d = m.at(i, j).denominator();
            l = checked_mul(l / std::gcd(l, d), d);
        }
    return l;
}

struct SimplexForms {
    int dim = 0;                          // ambient dimension n-1
    int count = 0;                        // number of forms = n
    std::vector<std::int64_t> coeff;      // count x dim, row-major
    std::vector<std::int64_t> constant;   // per form
    std::vector<std::int64_t> lo, hi;     // bounding box per coordinate
};

/// Integer multiples of the barycentric coordinates of the truncated simplex:
/// point p is interior iff all forms are > 0, in the closed simplex iff >= 0.
SimplexForms barycentric_forms(int n) {
    ExactMatrix v = truncated_vertex_matrix(n);
    int dim = n - 1;
    ExactMatrix b(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= dim; ++j) b.at(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = v.at(i, j);
        b.at(static_cast<std::size_t>(n), static_cast<std::size_t>(i)) = Rational(1);
    }
    ExactMatrix inv = b.inverse();
    std::int64_t scale = lcm_denominators(inv);
    SimplexForms f;
    f.dim = dim;
    f.count = n;
    f.coeff.assign(static_cast<std::size_t>(n) * dim, 0);
    f.constant.assign(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= dim; ++j) {
            Rational scaled = inv.at(i, j) * Rational(scale);
            f.coeff[static_cast<std::size_t>(i - 1) * dim + (j - 1)] = scaled.numerator();
        }
        Rational scaled = inv.at(i, n) * Rational(scale);
        f.constant[i - 1] = scaled.numerator();
    }
    f.lo.assign(static_cast<std::size_t>(dim), 0);
    f.hi.assign(static_cast<std::size_t>(dim), 0);
    for (int j = 1; j <= dim; ++j) {
        std::int64_t lo = v.at(1, j).numerator(), hi = lo;
        for (int i = 2; i <= n; ++i) {
            lo = std::min(lo, v.at(i, j).numerator());
            hi = std::max(hi, v.at(i, j).numerator());
        }
        f.lo[j - 1] = lo;
        f.hi[j - 1] = hi;
    }
    return f;
}

/// Box scan over integer points; keeps points with all forms > 0 (strict) or
/// >= 0. Subtrees are pruned when some form cannot reach the threshold on any
/// completion.
void scan_simplex(const SimplexForms& f, bool strict,
                  std::vector<std::vector<std::int64_t>>& out) {
    int dim = f.dim;
    // max_rem[d][i]: largest contribution of coordinates d+1..dim to form i
    std::vector<std::vector<std::int64_t>> max_rem(static_cast<std::size_t>(dim) + 1,
                                                   std::vector<std::int64_t>(f.count, 0));
    for (int d = dim - 1; d >= 0; --d)
        for (int i = 0; i < f.count; ++i) {
            std::int64_t c = f.coeff[static_cast<std::size_t>(i) * dim + d];
            max_rem[d][i] = max_rem[d + 1][i] + std::max(c * f.lo[d], c * f.hi[d]);
        }
    std::vector<std::int64_t> point(static_cast<std::size_t>(dim), 0);
    std::vector<std::int64_t> partial(f.constant);
    auto rec = [&](auto&& self, int d) -> void {
        for (int i = 0; i < f.count; ++i) {
            std::int64_t best = partial[i] + max_rem[d][i];
            if (strict ? best <= 0 : best < 0) return;
        }
        if (d == dim) {
            out.push_back(point);
            return;
        }
        for (std::int64_t x = f.lo[d]; x <= f.hi[d]; ++x) {
            point[d] = x;
            for (int i = 0; i < f.count; ++i)
                partial[i] += f.coeff[static_cast<std::size_t>(i) * dim + d] * x;
            self(self, d + 1);
            for (int i = 0; i < f.count; ++i)
                partial[i] -= f.coeff[static_cast<std::size_t>(i) * dim + d] * x;
        }
    };
    rec(rec, 0);
}

} // namespace

std::vector<std::vector<std::int64_t>> lattice_points_dilation(int n, std::int64_t t,
                                                               bool map_to_betti) {
    check_dilation_guard(n, t);
    std::vector<std::vector<std::int64_t>> out;
    enumerate_dilation(n, t, [&](const std::vector<std::int64_t>& lambda) {
        out.push_back(map_to_betti ? alhc_to_omega(lambda) : lambda);
    });
    return out;
}

EhrhartCheck ehrhart_check(int n, std::int64_t t) {
    check_dilation_guard(n, t);
    EhrhartCheck result;
    enumerate_dilation(n, t, [&](const std::vector<std::int64_t>&) { ++result.count; });
    result.expected = checked_sub(checked_pow(t + 1, n), checked_pow(t, n));
    result.pass = result.count == result.expected;
    return result;
}

std::vector<std::int64_t> truncate_point(const std::vector<std::int64_t>& p) {
    int n = static_cast<int>(p.size());
    if (n < 2) throw std::invalid_argument("truncation needs length >= 2");
    if (n > kMaxClosedFormSize)
        throw std::out_of_range("truncation guarded at length " +
                                std::to_string(kMaxClosedFormSize));
    std::vector<std::int64_t> out(static_cast<std::size_t>(n) - 1);
    for (int j = 2; j <= n; ++j) out[j - 2] = checked_sub(p[j - 1], binomial(n, j));
    return out;
}

ExactMatrix truncated_vertex_matrix(int n) {
    if (n < 2 || n > kMaxClosedFormSize)
        throw std::out_of_range("truncated vertices need 2 <= n <= " +
                                std::to_string(kMaxClosedFormSize));
    ExactMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n) - 1);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n - 1; ++j)
            m.at(i, j) = Rational(checked_sub(checked_mul(j + 1, binomial(i + 1, j + 2)),
                                              binomial(n, j + 1)));
    return m;
}

ReflexiveDual reflexive_dual(int n) {
    if (n < 2 || n > kMaxReflexiveSize)
        throw std::out_of_range("reflexive dual guarded at 2 <= n <= " +
                                std::to_string(kMaxReflexiveSize));
    ExactMatrix v = truncated_vertex_matrix(n);
    int dim = n - 1;
    ReflexiveDual result;
    result.xi = ExactMatrix(static_cast<std::size_t>(dim), static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        // v_i . c_j = -1 for every vertex i != j
        ExactMatrix a(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
        int row = 0;
        for (int i = 1; i <= n; ++i) {
            if (i == j) continue;
            ++row;
            for (int c = 1; c <= dim; ++c)
                a.at(static_cast<std::size_t>(row), static_cast<std::size_t>(c)) = v.at(i, c);
        }
        std::vector<Rational> x = solve(a, std::vector<Rational>(static_cast<std::size_t>(dim), Rational(-1)));
        for (int c = 1; c <= dim; ++c) result.xi.at(static_cast<std::size_t>(c), static_cast<std::size_t>(j)) = x[c - 1];
    }
    result.integral = result.xi.is_integral();
    result.product = v * result.xi;
    return result;
}

ExactMatrix closed_form_dual(int n) {
    if (n < 2 || n > kMaxReflexiveSize)
        throw std::out_of_range("closed-form dual guarded at 2 <= n <= " +
                                std::to_string(kMaxReflexiveSize));
    ExactMatrix m(static_cast<std::size_t>(n) - 1, static_cast<std::size_t>(n));
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n; ++j) {
            // -(i+2) * (-1)^(i+j) * C(i, j-1), first-column correction
            // -2 * (-1)^i, bottom-right correction 1-n
            std::int64_t sign = ((i + j) % 2 == 0) ? 1 : -1;
            std::int64_t value = checked_mul(checked_mul(-(i + 2), sign), binomial(i, j - 1));
            if (j == 1) value = checked_add(value, (i % 2 == 0) ? -2 : 2);
            if (i == n - 1 && j == n) value = checked_add(value, 1 - n);
            m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Rational(value);
        }
    return m;
}

std::vector<std::pair<int, int>> xi_formula_discrepancies(int n) {
    ExactMatrix solved = reflexive_dual(n).xi;
    ExactMatrix formula = closed_form_dual(n);
    std::vector<std::pair<int, int>> diff;
    for (std::size_t i = 1; i <= solved.rows(); ++i)
        for (std::size_t j = 1; j <= solved.cols(); ++j)
            if (solved.at(i, j) != formula.at(i, j))
                diff.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return diff;
}

InteriorCheck interior_point_check(int n) {
    if (n < 2 || n > kMaxInteriorSize)
        throw std::out_of_range("interior-point scan guarded at 2 <= n <= " +
                                std::to_string(kMaxInteriorSize));
    SimplexForms f = barycentric_forms(n);
    InteriorCheck result;
    scan_simplex(f, /*strict=*/true, result.interior_points);
    std::vector<std::int64_t> origin(static_cast<std::size_t>(n) - 1, 0);
    result.pass = result.interior_points.size() == 1 && result.interior_points[0] == origin;
    ExactMatrix v = truncated_vertex_matrix(n);
    ExactMatrix b(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n - 1; ++j) b.at(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = v.at(i, j);
        b.at(static_cast<std::size_t>(n), static_cast<std::size_t>(i)) = Rational(1);
    }
    std::vector<Rational> rhs(static_cast<std::size_t>(n), Rational(0));
    rhs[static_cast<std::size_t>(n) - 1] = Rational(1);
    result.origin_barycentrics = solve(b, rhs);
    return result;
}

std::vector<std::vector<std::int64_t>> truncated_simplex_points(int n) {
    if (n < 2 || n > kMaxInteriorSize)
        throw std::out_of_range("simplex scan guarded at 2 <= n <= " +
                                std::to_string(kMaxInteriorSize));
    SimplexForms f = barycentric_forms(n);
    std::vector<std::vector<std::int64_t>> out;
    scan_simplex(f, /*strict=*/false, out);
    return out;
}

NormalityCheck normality_check(int n, std::int64_t t) {
    check_dilation_guard(n, t);
    if (t < 1) throw std::out_of_range("normality check needs t >= 1");
    NormalityCheck result;
    enumerate_dilation(n, t, [&](const std::vector<std::int64_t>& lambda) {
        ++result.points;
        auto split = decompose_alhc_sum(lambda, t, &result.backtracks);
        if (!split) {
            ++result.failures;
            return;
        }
        std::vector<std::int64_t> total(lambda.size(), 0);
        for (const auto& mu : *split)
            for (std::size_t i = 0; i < mu.size(); ++i) total[i] = checked_add(total[i], mu[i]);
        if (total != lambda) ++result.failures;
    });
    result.pass = result.failures == 0;
    return result;
}

} // namespace betti
