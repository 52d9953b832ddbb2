#include <doctest.h>

#include "core/matrix.hpp"

using betti::ExactMatrix;
using betti::Rational;

namespace {

ExactMatrix from_ints(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    ExactMatrix m(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size());
    std::size_t i = 1;
    for (const auto& row : rows) {
        std::size_t j = 1;
        for (std::int64_t v : row) m.at(i, j++) = Rational(v);
        ++i;
    }
    return m;
}

} // namespace

TEST_CASE("omega matrix closed form") {
    CHECK(betti::omega_matrix(1) == from_ints({{1}}));
    CHECK(betti::omega_matrix(2) == from_ints({{1, 0}, {3, 2}}));
    ExactMatrix m5 = betti::omega_matrix(5);
    std::int64_t row5[] = {15, 40, 45, 24, 5};
    for (int j = 1; j <= 5; ++j) CHECK(m5.at(5, j) == Rational(row5[j - 1]));
    // strictly lower-triangular-with-diagonal shape
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j) CHECK(m5.at(i, j) == Rational(0));
}

TEST_CASE("omega inverse closed form") {
    CHECK(betti::omega_inverse(1) == from_ints({{1}}));
    ExactMatrix inv2 = betti::omega_inverse(2);
    CHECK(inv2.at(1, 1) == Rational(1));
    CHECK(inv2.at(1, 2) == Rational(0));
    CHECK(inv2.at(2, 1) == Rational(-3, 2));
    CHECK(inv2.at(2, 2) == Rational(1, 2));
    ExactMatrix inv3 = betti::omega_inverse(3);
    CHECK(inv3.at(3, 1) == Rational(2));
    CHECK(inv3.at(3, 2) == Rational(-4, 3));
    CHECK(inv3.at(3, 3) == Rational(1, 3));
}

TEST_CASE("omega closed-form inverse agrees with Gaussian elimination") {
    for (int n = 1; n <= 12; ++n) {
        CHECK(betti::omega_matrix(n).inverse() == betti::omega_inverse(n));
        CHECK(betti::psi_matrix(n).inverse() == betti::psi_inverse(n));
    }
}

TEST_CASE("matrix identities hold exactly up to n = 20") {
    for (int n = 1; n <= 20; ++n) {
        CHECK((betti::omega_matrix(n) * betti::omega_inverse(n)).is_identity());
        CHECK((betti::psi_matrix(n) * betti::psi_inverse(n)).is_identity());
        if (n >= 2) CHECK((betti::lambda_matrix(n) * betti::lambda_right_inverse(n)).is_identity());
    }
}

TEST_CASE("psi times omega inverse is bidiagonal") {
    CHECK(betti::psi_matrix(3) == from_ints({{1, 0, 0}, {1, 1, 0}, {1, 2, 1}}));
    CHECK(betti::psi_inverse(1) == from_ints({{1}}));
    for (int n = 1; n <= 20; ++n) {
        ExactMatrix prod = betti::psi_matrix(n) * betti::omega_inverse(n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                Rational expected(0);
                if (i == j) expected = Rational(1, i);
                if (i == j + 1) expected = Rational(-1, i);
                CHECK(prod.at(i, j) == expected);
            }
    }
}

TEST_CASE("lambda matrices and eta") {
    CHECK(betti::lambda_matrix(2) == from_ints({{1, 1}}));
    CHECK(betti::lambda_right_inverse(2) == from_ints({{1}, {0}}));
    CHECK((betti::lambda_matrix(2) * betti::lambda_right_inverse(2)) == from_ints({{1}}));
    CHECK(betti::eta_vector(4) == std::vector<std::int64_t>{4, 6, 4, 1});
    CHECK(betti::eta_vector(1) == std::vector<std::int64_t>{1});

    // [3,5,2,0] * Lambda^{-1} = [3,2,0]
    std::vector<Rational> v{3, 5, 2, 0};
    std::vector<Rational> out = betti::row_times_matrix(v, betti::lambda_right_inverse(4));
    CHECK(out == std::vector<Rational>{3, 2, 0});
}

TEST_CASE("size guards") {
    CHECK_THROWS_AS(betti::omega_matrix(26), std::out_of_range);
    CHECK_THROWS_AS(betti::omega_matrix(0), std::out_of_range);
    CHECK_THROWS_AS(betti::psi_inverse(-3), std::out_of_range);
    CHECK_NOTHROW(betti::omega_matrix(25));
}

TEST_CASE("generic inverse rejects singular input") {
    CHECK_THROWS_AS(from_ints({{1, 2}, {2, 4}}).inverse(), betti::SingularMatrixError);
    CHECK_THROWS_AS(betti::solve(from_ints({{0, 0}, {0, 0}}), std::vector<Rational>{1, 1}),
                    betti::SingularMatrixError);
}

TEST_CASE("solve returns the exact solution") {
    ExactMatrix a = from_ints({{2, 1}, {1, 3}});
    std::vector<Rational> x = betti::solve(a, {Rational(1), Rational(2)});
    CHECK(x == std::vector<Rational>{Rational(1, 5), Rational(3, 5)});
}

TEST_CASE("matrix printing aligns columns") {
    CHECK(from_ints({{1, 0}, {3, 2}}).to_string() == "[ 1 0 ]\n[ 3 2 ]");
}
