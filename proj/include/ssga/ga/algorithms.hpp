#pragma once

#include <cstdint>

#include "ssga/ga/config.hpp"
#include "ssga/ga/population.hpp"
#include "ssga/rng.hpp"

namespace ssga::ga {

struct RunResult {
    std::uint64_t evaluations = 0; ///< includes the initialization evaluations
    std::uint64_t generations = 0;
    std::uint64_t seed = 0;
    bool hit_cap = false;
    std::size_t best_fitness = 0;

    friend bool operator==(const RunResult&, const RunResult&) = default;
};

/// Mutable state of one run. Steps advance it by one generation (one
/// iteration for the (1+(lambda,lambda)) GA).
struct RunState {
    AlgorithmConfig config;
    Population population;
    std::uint64_t evaluations = 0;
    std::uint64_t generations = 0;
    bool optimum_found = false;
    double lambda = 1.0; ///< offspring population size of the (1+(lambda,lambda)) GA
    Genome offspring;    ///< reused buffer

    /// Counts one fitness evaluation of g and records whether it is optimal.
    void evaluate(const Genome& g) noexcept {
        ++evaluations;
        if (g.is_optimal()) optimum_found = true;
    }
};

/// Samples mu uniform genomes and counts their mu evaluations.
RunState initialize(const AlgorithmConfig& config, Rng& rng);

/// Starts from the given members instead of random ones (still counts them).
RunState initialize_with(const AlgorithmConfig& config, std::vector<Genome> members);

void step_one_plus_one_ea(RunState& state, Rng& rng);
void step_mu_plus_one_ga(RunState& state, Rng& rng);
void step_two_plus_one_greedy_s(RunState& state, Rng& rng);
void step_sudholt_diversity(RunState& state, Rng& rng);
void step_one_lambda_lambda(RunState& state, Rng& rng);

/// Dispatches on state.config.variant.
void step(RunState& state, Rng& rng);

/// OR shortcut of the (2+1)_S GA: if z sits on the best level f* and differs from
/// some best-level member in more than 2 positions, z becomes z OR that member
/// (farthest member; ties uniform). Returns true when the shortcut fired.
bool apply_or_shortcut(Genome& z, std::span<const Genome> members, Rng& rng);

/// Runs from a uniform random start until an optimum is first evaluated or the
/// evaluation cap is reached. Identical configs give identical results.
RunResult run_to_optimum(const AlgorithmConfig& config);

/// One-fifth rule update factor of the (1+(lambda,lambda)) GA.
inline constexpr double kLambdaUpdateFactor = 1.5;

} // namespace ssga::ga
