#include "ssga/markov/fitness_levels.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ssga/markov/runtime_bounds.hpp"

namespace ssga::markov {

namespace {

constexpr double kTolerance = 1e-12;

} // namespace

void FitnessLevelBounds::validate() const {
    const std::size_t rows = u.size();
    if (rows == 0) throw RejectedInput("need at least two levels");
    if (gamma.size() != rows || start_distribution.size() != rows)
        throw RejectedInput("u, gamma and start_distribution must cover the same levels");
    if (!(chi >= 0.0 && chi <= 1.0)) throw RejectedInput("chi must lie in [0, 1]");

    double start_total = 0.0;
    for (double s : start_distribution) {
        if (s < 0.0) throw RejectedInput("start probabilities must be non-negative");
        start_total += s;
    }
    if (start_total > 1.0 + kTolerance) throw RejectedInput("start probabilities sum above 1");

    for (std::size_t i = 0; i < rows; ++i) {
        if (!(u[i] > 0.0)) throw RejectedInput("u_" + std::to_string(i + 1) + " must be positive");
        const auto& row = gamma[i];
        if (row.size() != rows - i)
            throw RejectedInput("gamma row " + std::to_string(i + 1) + " has the wrong length");
        const double total = std::accumulate(row.begin(), row.end(), 0.0);
        if (std::abs(total - 1.0) > kTolerance)
            throw RejectedInput("gamma row " + std::to_string(i + 1) + " does not sum to 1");
        double tail = 0.0;
        for (std::size_t t = row.size(); t-- > 0;) {
            if (row[t] < 0.0) throw RejectedInput("gamma entries must be non-negative");
            tail += row[t];
            if (row[t] < chi * tail - kTolerance)
                throw RejectedInput("viability condition fails at level " + std::to_string(i + 1));
        }
    }
}

double fitness_level_lower_bound(const FitnessLevelBounds& flb) {
    flb.validate();
    const std::size_t rows = flb.u.size();
    // tail[i] = sum_{j > i} 1/u_j over the non-target levels.
    std::vector<double> tail(rows + 1, 0.0);
    for (std::size_t i = rows; i-- > 0;) tail[i] = tail[i + 1] + 1.0 / flb.u[i];
    double total = 0.0;
    for (std::size_t i = 0; i < rows; ++i)
        total += flb.start_distribution[i] * (1.0 / flb.u[i] + flb.chi * tail[i + 1]);
    return total;
}

LowerBoundParams make_lower_bound_params(double c, std::size_t n) {
    if (!(c > 0.0)) throw RejectedInput("mutation constant c must be positive");
    if (n < 3) throw RejectedInput("problem size must be at least 3");
    const double nn = static_cast<double>(n);
    const double p = c / nn;
    const double ln = std::log(nn);
    LowerBoundParams out;
    out.c = c;
    out.n = n;
    out.y = lower_bound_peak_term(c, n);
    out.ell = static_cast<std::size_t>(std::ceil(nn - std::min(nn / ln, nn / (p * p * ln))));
    return out;
}

LevelJumpTerms lower_bound_level_terms(const LowerBoundParams& params, std::size_t i, std::size_t k) {
    const std::size_t n = params.n;
    if (i < params.ell || i >= n)
        throw RejectedInput("level must satisfy ell <= i < n (ell = " + std::to_string(params.ell) + ")");
    if (k < 1 || k > n - i) throw RejectedInput("jump length must satisfy 1 <= k <= n - i");

    const double nn = static_cast<double>(n);
    const double ii = static_cast<double>(i);
    const double kk = static_cast<double>(k);
    const double c = params.c;
    const double p = c / nn;
    const double q2 = (1.0 - p) * (1.0 - p);
    const double base = std::pow(1.0 - p, nn) * std::pow(p * (nn - ii) / q2, kk);
    const double log_fact = std::lgamma(kk + 1.0);

    LevelJumpTerms out;
    out.p_mk = base * (1.0 + 0.6 * ii * (nn - ii) * p * p / q2);
    out.p_dk = base * std::exp(kk * std::log(c) - 2.0 * log_fact);
    out.u_i_prime = std::exp(-c) * (nn - ii) * p / q2 * (3.0 + params.y) / 3.0;
    out.gamma_prime = std::pow((3.0 + 12.0 * c) * p * (nn - ii) / q2, kk - 1.0);
    return out;
}

FitnessLevelBounds lower_bound_fitness_levels(const LowerBoundParams& params) {
    const std::size_t n = params.n;
    if (params.ell >= n) throw RejectedInput("no levels between ell and n");
    const double nn = static_cast<double>(n);
    const double p = params.c / nn;
    const double q2 = (1.0 - p) * (1.0 - p);

    FitnessLevelBounds flb;
    double worst_ratio = 0.0;
    for (std::size_t i = params.ell; i < n; ++i) {
        const std::size_t jumps = n - i;
        const double ratio = (3.0 + 12.0 * params.c) * p * static_cast<double>(jumps) / q2;
        worst_ratio = std::max(worst_ratio, ratio);

        // gamma'_{i,i+k} = ratio^{k-1}; scale by ratio^{-(jumps-1)} when ratio > 1
        // so the largest weight is 1 and nothing overflows.
        const double shift = ratio > 1.0 ? static_cast<double>(jumps - 1) : 0.0;
        std::vector<double> row(jumps);
        double scaled_sum = 0.0;
        for (std::size_t k = 1; k <= jumps; ++k) {
            row[k - 1] = std::pow(ratio, static_cast<double>(k - 1) - shift);
            scaled_sum += row[k - 1];
        }
        for (auto& g : row) g /= scaled_sum;

        const double u_prime = lower_bound_level_terms(params, i, 1).u_i_prime;
        flb.u.push_back(u_prime * std::exp(shift * std::log(ratio) + std::log(scaled_sum)));
        flb.gamma.push_back(std::move(row));
        flb.start_distribution.push_back(i == params.ell ? 1.0 : 0.0);
    }
    flb.chi = std::max(0.0, 1.0 - worst_ratio);
    return flb;
}

} // namespace ssga::markov
