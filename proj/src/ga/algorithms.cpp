#include "ssga/ga/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace ssga::ga {

namespace {

double mutation_rate(const AlgorithmConfig& cfg) { return cfg.c / static_cast<double>(cfg.n); }

// Adds state.offspring to the population, then discards one least fit member.
// The discarded genome's storage becomes the next offspring buffer.
void insert_and_select(RunState& state, TieBreak tie_break, Rng& rng) {
    auto& members = state.population.members;
    members.push_back(std::move(state.offspring));
    const std::size_t idx = choose_removal(members, tie_break, rng);
    if (idx != members.size() - 1) std::swap(members[idx], members.back());
    state.offspring = std::move(members.back());
    members.pop_back();
}

void require_variant(const RunState& state, std::initializer_list<Variant> allowed) {
    if (std::find(allowed.begin(), allowed.end(), state.config.variant) == allowed.end())
        throw ContractViolation("step function called for variant " +
                                std::string(to_string(state.config.variant)));
}

} // namespace

RunState initialize(const AlgorithmConfig& config, Rng& rng) {
    config.validate();
    std::vector<Genome> members;
    members.reserve(config.mu + 1);
    for (std::size_t i = 0; i < config.mu; ++i) members.push_back(Genome::random(config.n, rng));
    return initialize_with(config, std::move(members));
}

RunState initialize_with(const AlgorithmConfig& config, std::vector<Genome> members) {
    config.validate();
    if (members.size() != config.mu) throw ContractViolation("initial population must hold mu genomes");
    RunState state;
    state.config = config;
    state.population.capacity = config.mu;
    state.population.members = std::move(members);
    state.population.members.reserve(config.mu + 1);
    for (const auto& g : state.population.members) {
        if (g.size() != config.n) throw ContractViolation("initial genome has wrong length");
        state.evaluate(g);
    }
    state.offspring = Genome(config.n);
    return state;
}

void step_one_plus_one_ea(RunState& state, Rng& rng) {
    require_variant(state, {Variant::OnePlusOneEA, Variant::MuPlusOneEA});
    const auto& members = state.population.members;
    const std::size_t p = select_parent_index(members, state.config.parent_selection, rng);
    state.offspring = members[p];
    state.offspring.mutate(mutation_rate(state.config), rng);
    state.evaluate(state.offspring);
    ++state.generations;
    insert_and_select(state, TieBreak::Random, rng);
}

void step_mu_plus_one_ga(RunState& state, Rng& rng) {
    require_variant(state, {Variant::MuPlusOneGA});
    const auto& members = state.population.members;
    const auto policy = state.config.parent_selection;
    const std::size_t x = select_parent_index(members, policy, rng);
    const std::size_t y = select_parent_index(members, policy, rng);
    state.offspring.assign_crossover(members[x], members[y], rng);
    state.offspring.mutate(mutation_rate(state.config), rng);
    state.evaluate(state.offspring);
    ++state.generations;
    insert_and_select(state, TieBreak::Random, rng);
}

bool apply_or_shortcut(Genome& z, std::span<const Genome> members, Rng& rng) {
    std::size_t best = 0;
    for (const auto& w : members) best = std::max(best, w.fitness());
    if (z.fitness() != best) return false;

    std::size_t farthest = 0;
    std::size_t ties = 0;
    for (const auto& w : members) {
        if (w.fitness() != best) continue;
        const std::size_t d = hamming_distance(w, z);
        if (d > farthest) {
            farthest = d;
            ties = 1;
        } else if (d == farthest) {
            ++ties;
        }
    }
    if (farthest <= 2) return false;

    std::size_t target = ties > 1 ? std::uniform_int_distribution<std::size_t>(0, ties - 1)(rng) : 0;
    for (const auto& w : members) {
        if (w.fitness() != best || hamming_distance(w, z) != farthest) continue;
        if (target-- == 0) {
            Genome merged;
            merged.assign_or(z, w);
            z = std::move(merged);
            return true;
        }
    }
    return false;
}

void step_two_plus_one_greedy_s(RunState& state, Rng& rng) {
    require_variant(state, {Variant::TwoPlusOneGreedyS});
    const auto& members = state.population.members;
    const std::size_t x = select_parent_index(members, ParentSelection::Greedy, rng);
    const std::size_t y = select_parent_index(members, ParentSelection::Greedy, rng);
    state.offspring.assign_crossover(members[x], members[y], rng);
    state.offspring.mutate(mutation_rate(state.config), rng);
    apply_or_shortcut(state.offspring, members, rng);
    state.evaluate(state.offspring);
    ++state.generations;
    insert_and_select(state, TieBreak::Random, rng);
}

void step_sudholt_diversity(RunState& state, Rng& rng) {
    require_variant(state, {Variant::SudholtDiversity, Variant::SudholtDiversityGreedySelection,
                            Variant::SudholtDiversityGreedySelectionGreedyXO});
    const auto variant = state.config.variant;
    const auto policy =
        variant == Variant::SudholtDiversity ? state.config.parent_selection : ParentSelection::Greedy;
    const auto& members = state.population.members;
    const std::size_t x = select_parent_index(members, policy, rng);
    const std::size_t y = select_parent_index(members, policy, rng);
    if (variant == Variant::SudholtDiversityGreedySelectionGreedyXO && !(members[x] == members[y]))
        state.offspring.assign_or(members[x], members[y]);
    else
        state.offspring.assign_crossover(members[x], members[y], rng);
    state.offspring.mutate(mutation_rate(state.config), rng);
    state.evaluate(state.offspring);
    ++state.generations;
    insert_and_select(state, TieBreak::PreferDuplicates, rng);
}

void step_one_lambda_lambda(RunState& state, Rng& rng) {
    require_variant(state, {Variant::OneLambdaLambdaSelfAdjusting});
    const std::size_t n = state.config.n;
    const double nn = static_cast<double>(n);
    Genome& parent = state.population.members.front();

    const double lambda = state.lambda;
    const auto count = static_cast<std::size_t>(std::max(1L, std::lround(lambda)));
    const double rate = std::min(1.0, lambda / nn);
    const std::size_t flips = rate < 1.0 ? std::binomial_distribution<std::size_t>(n, rate)(rng) : n;
    ++state.generations;
    // Stopping early only makes sense while the optimum is still unseen.
    const bool stop_on_optimum = !parent.is_optimal();

    // Mutation phase: `count` mutants, each flipping exactly `flips` bits.
    Genome best_mutant;
    Genome candidate;
    for (std::size_t j = 0; j < count; ++j) {
        candidate = parent;
        candidate.flip_exactly(flips, rng);
        state.evaluate(candidate);
        if (stop_on_optimum && state.optimum_found) {
            parent = std::move(candidate);
            return;
        }
        if (j == 0 || candidate.fitness() > best_mutant.fitness()) std::swap(best_mutant, candidate);
    }

    // Crossover phase: take each differing bit from the mutant with probability 1/lambda.
    Genome best_child;
    const double bias = 1.0 / lambda;
    for (std::size_t j = 0; j < count; ++j) {
        candidate.assign_biased_crossover(parent, best_mutant, bias, rng);
        state.evaluate(candidate);
        if (stop_on_optimum && state.optimum_found) {
            parent = std::move(candidate);
            return;
        }
        if (j == 0 || candidate.fitness() > best_child.fitness()) std::swap(best_child, candidate);
    }

    if (best_child.fitness() > parent.fitness()) {
        parent = std::move(best_child);
        state.lambda = std::max(lambda / kLambdaUpdateFactor, 1.0);
    } else {
        if (best_child.fitness() == parent.fitness()) parent = std::move(best_child);
        state.lambda = std::min(lambda * std::pow(kLambdaUpdateFactor, 0.25), nn);
    }
}

void step(RunState& state, Rng& rng) {
    switch (state.config.variant) {
    case Variant::OnePlusOneEA:
    case Variant::MuPlusOneEA: step_one_plus_one_ea(state, rng); return;
    case Variant::MuPlusOneGA: step_mu_plus_one_ga(state, rng); return;
    case Variant::TwoPlusOneGreedyS: step_two_plus_one_greedy_s(state, rng); return;
    case Variant::SudholtDiversity:
    case Variant::SudholtDiversityGreedySelection:
    case Variant::SudholtDiversityGreedySelectionGreedyXO: step_sudholt_diversity(state, rng); return;
    case Variant::OneLambdaLambdaSelfAdjusting: step_one_lambda_lambda(state, rng); return;
    }
}

RunResult run_to_optimum(const AlgorithmConfig& config) {
    config.validate();
    Rng rng = make_rng(config.seed);
    RunState state = initialize(config, rng);
    const std::uint64_t cap = config.evaluation_cap();
    while (!state.optimum_found && state.evaluations < cap) step(state, rng);

    RunResult result;
    result.evaluations = state.evaluations;
    result.generations = state.generations;
    result.seed = config.seed;
    result.hit_cap = !state.optimum_found;
    result.best_fitness = state.population.best_fitness();
    return result;
}

} // namespace ssga::ga
