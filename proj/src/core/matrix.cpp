#include "core/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "core/intops.hpp"

namespace betti {

namespace {

void check_size_guard(int n, int min_allowed) {
    if (n < min_allowed || n > kMaxClosedFormSize)
        throw std::out_of_range("matrix size " + std::to_string(n) + " outside supported range [" +
                                std::to_string(min_allowed) + ", " +
                                std::to_string(kMaxClosedFormSize) + "]");
}

int sign_pow(int e) { return (e % 2 == 0) ? 1 : -1; }

} // namespace

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 1; i <= n; ++i) m.at(i, i) = Rational(1);
    return m;
}

Rational& ExactMatrix::at(std::size_t i, std::size_t j) {
    if (i < 1 || i > rows_ || j < 1 || j > cols_)
        throw std::out_of_range("matrix index (" + std::to_string(i) + ", " + std::to_string(j) +
                                ") outside " + std::to_string(rows_) + " x " + std::to_string(cols_));
    return entries_[(i - 1) * cols_ + (j - 1)];
}

const Rational& ExactMatrix::at(std::size_t i, std::size_t j) const {
    return const_cast<ExactMatrix*>(this)->at(i, j);
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    ExactMatrix r(rows_, o.cols_);
    for (std::size_t i = 1; i <= rows_; ++i)
        for (std::size_t k = 1; k <= cols_; ++k) {
            const Rational& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 1; j <= o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    ExactMatrix r = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] += o.entries_[i];
    return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference shape mismatch");
    ExactMatrix r = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] -= o.entries_[i];
    return r;
}

bool ExactMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 1; i <= rows_; ++i)
        for (std::size_t j = 1; j <= cols_; ++j)
            if (at(i, j) != Rational(i == j ? 1 : 0)) return false;
    return true;
}

bool ExactMatrix::is_integral() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Rational& r) { return r.is_integer(); });
}

ExactMatrix ExactMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    std::size_t n = rows_;
    ExactMatrix work = *this;
    ExactMatrix inv = identity(n);
    for (std::size_t col = 1; col <= n; ++col) {
        std::size_t pivot = 0;
        for (std::size_t r = col; r <= n; ++r)
            if (!work.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot == 0) throw SingularMatrixError("matrix is singular");
        if (pivot != col)
            for (std::size_t j = 1; j <= n; ++j) {
                std::swap(work.at(pivot, j), work.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        Rational p = work.at(col, col);
        for (std::size_t j = 1; j <= n; ++j) {
            work.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (std::size_t r = 1; r <= n; ++r) {
            if (r == col) continue;
            Rational f = work.at(r, col);
            if (f.is_zero()) continue;
            for (std::size_t j = 1; j <= n; ++j) {
                work.at(r, j) -= f * work.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

std::string ExactMatrix::to_string() const {
    std::size_t width = 1;
    for (std::size_t i = 1; i <= rows_; ++i)
        for (std::size_t j = 1; j <= cols_; ++j)
            width = std::max(width, at(i, j).to_string().size());
    std::ostringstream out;
    for (std::size_t i = 1; i <= rows_; ++i) {
        out << '[';
        for (std::size_t j = 1; j <= cols_; ++j) {
            std::string cell = at(i, j).to_string();
            out << ' ' << std::string(width - cell.size(), ' ') << cell;
        }
        out << " ]";
        if (i < rows_) out << '\n';
    }
    return out.str();
}

std::vector<Rational> solve(const ExactMatrix& a, const std::vector<Rational>& b) {
    if (a.rows() != a.cols()) throw std::invalid_argument("solve requires a square matrix");
    std::size_t n = a.rows();
    if (b.size() != n) throw std::invalid_argument("solve shape mismatch");
    ExactMatrix work = a;
    std::vector<Rational> rhs = b;
    for (std::size_t col = 1; col <= n; ++col) {
        std::size_t pivot = 0;
        for (std::size_t r = col; r <= n; ++r)
            if (!work.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot == 0) throw SingularMatrixError("linear system is singular");
        if (pivot != col) {
            for (std::size_t j = 1; j <= n; ++j) std::swap(work.at(pivot, j), work.at(col, j));
            std::swap(rhs[pivot - 1], rhs[col - 1]);
        }
        Rational p = work.at(col, col);
        for (std::size_t j = col; j <= n; ++j) work.at(col, j) /= p;
        rhs[col - 1] /= p;
        for (std::size_t r = 1; r <= n; ++r) {
            if (r == col) continue;
            Rational f = work.at(r, col);
            if (f.is_zero()) continue;
            for (std::size_t j = col; j <= n; ++j) work.at(r, j) -= f * work.at(col, j);
            rhs[r - 1] -= f * rhs[col - 1];
        }
    }
    return rhs;
}

std::vector<Rational> row_times_matrix(const std::vector<Rational>& v, const ExactMatrix& m) {
    if (v.size() != m.rows()) throw std::invalid_argument("row-vector product shape mismatch");
    std::vector<Rational> out(m.cols());
    for (std::size_t i = 1; i <= m.rows(); ++i) {
        if (v[i - 1].is_zero()) continue;
        for (std::size_t j = 1; j <= m.cols(); ++j) out[j - 1] += v[i - 1] * m.at(i, j);
    }
    return out;
}

std::vector<Rational> row_times_matrix(const std::vector<std::int64_t>& v, const ExactMatrix& m) {
    return row_times_matrix(to_rational_vector(v), m);
}

std::vector<Rational> to_rational_vector(const std::vector<std::int64_t>& v) {
    return std::vector<Rational>(v.begin(), v.end());
}

ExactMatrix omega_matrix(int n) {
    check_size_guard(n, 1);
    ExactMatrix m(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j) m.at(i, j) = Rational(checked_mul(j, binomial(i + 1, j + 1)));
    return m;
}

ExactMatrix omega_inverse(int n) {
    check_size_guard(n, 1);
    ExactMatrix m(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j)
            m.at(i, j) = Rational(checked_mul(sign_pow(i - j), binomial(i + 1, j + 1)), i);
    return m;
}

ExactMatrix psi_matrix(int n) {
    check_size_guard(n, 1);
    ExactMatrix m(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j) m.at(i, j) = Rational(binomial(i - 1, j - 1));
    return m;
}

ExactMatrix psi_inverse(int n) {
    check_size_guard(n, 1);
    ExactMatrix m(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j)
            m.at(i, j) = Rational(checked_mul(sign_pow(i - j), binomial(i - 1, j - 1)));
    return m;
}

ExactMatrix lambda_matrix(int n) {
    check_size_guard(n, 1);
    ExactMatrix m(n - 1, n);
    for (int i = 1; i <= n - 1; ++i) {
        m.at(i, i) = Rational(1);
        m.at(i, i + 1) = Rational(1);
    }
    return m;
}

ExactMatrix lambda_right_inverse(int n) {
    check_size_guard(n, 1);
    ExactMatrix m(n, n - 1);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n - 1; ++j) m.at(i, j) = Rational(sign_pow(i + j));
    return m;
}

std::vector<std::int64_t> eta_vector(int n) {
    check_size_guard(n, 1);
    std::vector<std::int64_t> eta(n);
    for (int i = 1; i <= n; ++i) eta[i - 1] = binomial(n, i);
    return eta;
}

} // namespace betti
