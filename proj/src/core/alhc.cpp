#include "core/alhc.hpp"

#include <algorithm>
#include <stdexcept>

#include "core/intops.hpp"
#include "core/matrix.hpp"

namespace betti {

namespace {

using int128 = __int128;

int sign_pow(int e) { return (e % 2 == 0) ? 1 : -1; }

void check_transform_length(int n) {
    if (n < 1 || n > kMaxClosedFormSize)
        throw std::out_of_range("vector length " + std::to_string(n) + " outside [1, " +
                                std::to_string(kMaxClosedFormSize) + "]");
}

} // namespace

bool is_alhc(const std::vector<std::int64_t>& lambda, std::int64_t t) {
    if (t < 0) return false;
    int n = static_cast<int>(lambda.size());
    if (n == 0) return true;
    if (lambda[0] > t) return false;
    for (int i = 2; i <= n; ++i)
        if (static_cast<int128>(i) * lambda[i - 2] < static_cast<int128>(i - 1) * lambda[i - 1])
            return false;
    return lambda[n - 1] >= 0;
}

AlhcImage omega_to_alhc(const std::vector<std::int64_t>& omega) {
    int n = static_cast<int>(omega.size());
    check_transform_length(n);
    AlhcImage result;
    result.lambda.assign(static_cast<std::size_t>(n), 0);
    for (int j = 1; j <= n; ++j) {
        std::int64_t sum = 0;
        for (int i = j; i <= n; ++i)
            sum = checked_add(sum, checked_mul(omega[i - 1],
                                               checked_mul(sign_pow(i - j), binomial(i - 1, j - 1))));
        result.lambda[j - 1] = sum;
    }
    result.in_simplex = is_alhc(result.lambda, 1) && result.lambda[0] == 1;
    return result;
}

std::vector<std::int64_t> alhc_to_omega(const std::vector<std::int64_t>& lambda) {
    int n = static_cast<int>(lambda.size());
    check_transform_length(n);
    std::vector<std::int64_t> omega(static_cast<std::size_t>(n), 0);
    for (int j = 1; j <= n; ++j) {
        std::int64_t sum = 0;
        for (int i = j; i <= n; ++i)
            sum = checked_add(sum, checked_mul(lambda[i - 1], binomial(i - 1, j - 1)));
        omega[j - 1] = sum;
    }
    return omega;
}

std::int64_t count_alhc(int n, std::int64_t t) {
    if (n < 1 || n > kMaxAlhcCountLength)
        throw std::out_of_range("count_alhc length guarded at " +
                                std::to_string(kMaxAlhcCountLength));
    if (t < 0 || t > kMaxAlhcCountBound)
        throw std::out_of_range("count_alhc bound guarded at " +
                                std::to_string(kMaxAlhcCountBound));
    // ways[v] = number of valid prefixes ending with lambda_i = v
    std::vector<std::int64_t> ways(static_cast<std::size_t>(t) + 1, 1);
    for (int i = 2; i <= n; ++i) {
        std::vector<std::int64_t> next(static_cast<std::size_t>(i) * t + 1, 0);
        for (std::int64_t u = 0; u <= static_cast<std::int64_t>(i) * t; ++u) {
            std::int64_t acc = 0;
            for (std::int64_t v = 0; v < static_cast<std::int64_t>(ways.size()); ++v)
                if (static_cast<int128>(i) * v >= static_cast<int128>(i - 1) * u)
                    acc = checked_add(acc, ways[static_cast<std::size_t>(v)]);
            next[static_cast<std::size_t>(u)] = acc;
        }
        ways = std::move(next);
    }
    std::int64_t total = 0;
    for (std::int64_t w : ways) total = checked_add(total, w);
    return total;
}

namespace {

/// Chooses mu[pos..n-1] (mu[0] = 1 fixed), largest admissible value first so
/// greedy succeeds without backtracking whenever it can. Both mu and the
/// remainder lambda - mu must keep their chains valid; the conditions are
/// local to consecutive entries, so the search is complete. On a full mu the
/// remainder is handed to decompose_alhc_sum for the remaining m-1 summands,
/// and a failure there backtracks into this level.
struct SummandSearch {
    const std::vector<std::int64_t>& lambda;
    std::int64_t m;
    std::int64_t* backtracks;
    std::vector<std::int64_t> mu;
    std::optional<std::vector<std::vector<std::int64_t>>> result;

    bool run(int pos) {
        int n = static_cast<int>(lambda.size());
        if (pos == n) {
            std::vector<std::int64_t> rest(lambda.size());
            for (int i = 0; i < n; ++i) rest[i] = lambda[i] - mu[i];
            auto sub = decompose_alhc_sum(rest, m - 1, backtracks);
            if (!sub) return false;
            result = std::move(sub);
            result->insert(result->begin(), mu);
            return true;
        }
        int i = pos + 1; // 1-based index of the entry being chosen
        std::int64_t mu_prev = mu[pos - 1];
        std::int64_t rem_prev = lambda[pos - 1] - mu_prev;
        // mu chain: i * mu_prev >= (i-1) * mu_i
        std::int64_t hi = std::min(static_cast<std::int64_t>(i) * mu_prev / (i - 1), lambda[pos]);
        // remainder chain: i * rem_prev >= (i-1) * (lambda_i - mu_i)
        std::int64_t lo = std::max<std::int64_t>(
            lambda[pos] - static_cast<std::int64_t>(i) * rem_prev / (i - 1), 0);
        for (std::int64_t v = hi; v >= lo; --v) {
            mu[pos] = v;
            if (run(pos + 1)) return true;
            if (backtracks) ++*backtracks;
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<std::vector<std::int64_t>>>
decompose_alhc_sum(const std::vector<std::int64_t>& lambda, std::int64_t m,
                   std::int64_t* backtracks) {
    int n = static_cast<int>(lambda.size());
    if (n < 1) throw std::invalid_argument("composition must be nonempty");
    if (m < 1) throw std::invalid_argument("number of summands must be positive");
    if (!is_alhc(lambda, m) || lambda[0] != m) return std::nullopt;
    if (m == 1) return std::vector<std::vector<std::int64_t>>{lambda};
    SummandSearch search{lambda, m, backtracks, std::vector<std::int64_t>(lambda.size(), 0), {}};
    search.mu[0] = 1;
    if (!search.run(1)) return std::nullopt;
    return std::move(search.result);
}

ModuleDecomposition decompose_module(const std::vector<std::int64_t>& omega, std::int64_t m) {
    int n = static_cast<int>(omega.size());
    if (n < 1) throw std::invalid_argument("reduced Betti vector must be nonempty");
    if (m < 1) throw std::invalid_argument("beta_{0,0} must be positive");
    AlhcImage img = omega_to_alhc(omega);
    const auto& lambda = img.lambda;
    if (lambda[0] != m)
        throw NotInConeError("omega * Psi^{-1} has first entry " + std::to_string(lambda[0]) +
                             ", expected " + std::to_string(m) +
                             "; omega is not the reduced Betti vector of any module with " +
                             "beta_{0,0} = " + std::to_string(m) + " and 2-linear resolution");
    if (!is_alhc(lambda, m))
        throw NotInConeError("omega * Psi^{-1} violates the anti-lecture hall chain with bound " +
                             std::to_string(m));
    ModuleDecomposition result;
    auto split = decompose_alhc_sum(lambda, m, &result.backtracks);
    if (!split)
        throw std::logic_error("decomposition search exhausted on an in-cone vector; "
                               "this contradicts normality of the Betti simplex");
    std::vector<std::int64_t> total(static_cast<std::size_t>(n), 0);
    for (const auto& mu : *split) {
        std::vector<std::int64_t> summand = alhc_to_omega(mu);
        for (int i = 0; i < n; ++i) total[i] = checked_add(total[i], summand[i]);
        result.summands.push_back(omega_to_threshold(summand).sequence);
        result.summand_omegas.push_back(std::move(summand));
    }
    if (total != omega)
        throw std::logic_error("module decomposition failed its re-sum check");
    return result;
}

} // namespace betti
