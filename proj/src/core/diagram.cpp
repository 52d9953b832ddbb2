#include "core/diagram.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace betti {

DegreeSequence::DegreeSequence(std::vector<std::int64_t> degrees) : degrees_(std::move(degrees)) {
    if (degrees_.empty()) throw std::invalid_argument("degree sequence must be nonempty");
    if (degrees_.front() < 0) throw std::invalid_argument("degree sequence entries must be nonnegative");
    for (std::size_t i = 1; i < degrees_.size(); ++i)
        if (degrees_[i] <= degrees_[i - 1])
            throw std::invalid_argument("degree sequence must be strictly increasing");
}

BettiDiagram BettiDiagram::two_linear(std::int64_t beta00, const std::vector<std::int64_t>& omega) {
    BettiDiagram d;
    d.set_entry(0, 0, Rational(beta00));
    for (std::size_t i = 0; i < omega.size(); ++i)
        d.set_entry(static_cast<int>(i) + 1, static_cast<int>(i) + 2, Rational(omega[i]));
    d.second_row_width_ = static_cast<int>(omega.size());
    return d;
}

void BettiDiagram::set_entry(int i, int j, const Rational& value) {
    if (value.is_zero())
        entries_.erase({i, j});
    else
        entries_[{i, j}] = value;
}

Rational BettiDiagram::entry(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? Rational(0) : it->second;
}

bool BettiDiagram::is_two_linear() const {
    for (const auto& [pos, value] : entries_) {
        auto [i, j] = pos;
        if (i == 0 && j == 0) continue;
        if (i >= 1 && j == i + 1) continue;
        return false;
    }
    return true;
}

std::vector<Rational> BettiDiagram::second_row(int n) const {
    std::vector<Rational> row(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) row[i - 1] = entry(i, i + 1);
    return row;
}

std::string BettiDiagram::to_table() const {
    int max_col = std::max(0, second_row_width_), max_row = second_row_width_ > 0 ? 1 : 0;
    for (const auto& [pos, value] : entries_) {
        max_col = std::max(max_col, pos.first);
        max_row = std::max(max_row, pos.second - pos.first);
    }
    std::size_t width = 1;
    for (const auto& [pos, value] : entries_)
        width = std::max(width, value.to_string().size());
    std::ostringstream out;
    for (int r = 0; r <= max_row; ++r) {
        out << '[';
        for (int c = 0; c <= max_col; ++c) {
            Rational v = entry(c, c + r);
            bool declared = r == 1 && c >= 1 && c <= second_row_width_;
            std::string cell = v.is_zero() && !declared ? "." : v.to_string();
            out << ' ' << std::string(width - cell.size(), ' ') << cell;
        }
        out << " ]";
        if (r < max_row) out << '\n';
    }
    return out.str();
}

BettiDiagram pure_diagram(const DegreeSequence& d) {
    const auto& deg = d.degrees();
    BettiDiagram out;
    for (std::size_t i = 0; i < deg.size(); ++i) {
        Rational v(1);
        for (std::size_t k = 1; k < deg.size(); ++k) {
            if (k == i) continue;
            Rational factor(deg[k] - deg[0], deg[k] - deg[i]);
            if (!factor.is_nonnegative()) factor = -factor;
            v *= factor;
        }
        out.set_entry(static_cast<int>(i), static_cast<int>(deg[i]), v);
    }
    return out;
}

BSCoefficients bs_decompose(const std::vector<std::int64_t>& omega, std::int64_t m) {
    int n = static_cast<int>(omega.size());
    if (n == 0) throw std::invalid_argument("reduced Betti vector must be nonempty");
    if (m < 1) throw std::invalid_argument("beta_{0,0} must be positive");
    BSCoefficients result;
    result.c = row_times_matrix(omega, omega_inverse(n));
    result.nonneg = std::all_of(result.c.begin(), result.c.end(),
                                [](const Rational& x) { return x.is_nonnegative(); });
    Rational sum(0);
    for (const Rational& x : result.c) sum += x;
    result.sums_to_m = (sum == Rational(m));
    return result;
}

CertificateResult chordality_certificate(const std::vector<std::int64_t>& omega) {
    BSCoefficients bs = bs_decompose(omega, 1);
    CertificateResult result;
    result.c = bs.c;
    if (!bs.nonneg)
        result.verdict = Certificate::NegativeCoefficient;
    else if (!bs.sums_to_m)
        result.verdict = Certificate::WrongSum;
    else
        result.verdict = Certificate::Admissible;
    return result;
}

std::string certificate_name(Certificate c) {
    switch (c) {
    case Certificate::Admissible: return "admissible";
    case Certificate::NegativeCoefficient: return "negative-coefficient";
    case Certificate::WrongSum: return "wrong-sum";
    }
    return "?";
}

} // namespace betti
