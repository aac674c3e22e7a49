#pragma once

#include <cstddef>
#include <vector>

#include "ssga/markov/transition_bounds.hpp"

namespace ssga::markov {

/// Lower-bound fitness-level data over levels A_1..A_m, stored 0-based:
/// entry i describes level A_{i+1} for i = 0..m-2 (A_m is the target).
///
/// gamma[i][t] is the share of jumps from level i landing on level i+1+t,
/// so row i has m-1-i entries.
struct FitnessLevelBounds {
    std::vector<double> u;
    std::vector<std::vector<double>> gamma;
    double chi = 0.0;
    std::vector<double> start_distribution;

    std::size_t levels() const noexcept { return u.size() + 1; }

    /// Throws RejectedInput on shape errors, rows not summing to 1 (1e-12),
    /// chi outside [0, 1], or a broken viability condition
    /// gamma_{i,j} >= chi * sum_{k >= j} gamma_{i,k}.
    void validate() const;
};

/// sum_i Pr(start in A_i) * (1/u_i + chi * sum_{j=i+1}^{m-1} 1/u_j).
double fitness_level_lower_bound(const FitnessLevelBounds& flb);

struct LowerBoundParams {
    double c = 1.0;
    std::size_t n = 0;
    double y = 0.0;       ///< max_k c^k / (k!)^2
    std::size_t ell = 0;  ///< ceil(n - min{n / ln n, n / (p^2 ln n)}), p = c / n
};

LowerBoundParams make_lower_bound_params(double c, std::size_t n);

struct LevelJumpTerms {
    double u_i_prime = 0.0;
    double gamma_prime = 0.0;
    double p_mk = 0.0; ///< mutation flips k more 0-bits than 1-bits
    double p_dk = 0.0; ///< mutation flips exactly k 0-bits and k 1-bits
};

/// Jump bounds of the (2+1)_S GA from level i to level i + k, with the
/// O(1/log n) term in u_i' instantiated as 0.
LevelJumpTerms lower_bound_level_terms(const LowerBoundParams& params, std::size_t i, std::size_t k);

/// Normalised fitness-level data for levels ell..n of the (2+1)_S GA:
/// u_i = u_i' * sum_j gamma'_{i,j}, gamma_{i,j} = gamma'_{i,j} / sum_j gamma'_{i,j},
/// chi = max(0, 1 - max_i r_i) with r_i = (3 + 12c) p (n - i) / (1 - p)^2, and
/// the run pessimistically started at level ell.
FitnessLevelBounds lower_bound_fitness_levels(const LowerBoundParams& params);

} // namespace ssga::markov
