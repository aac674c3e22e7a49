#include "ssga/ga/population.hpp"

#include <algorithm>
#include <random>

namespace ssga::ga {

namespace {

void require_non_empty(std::span<const Genome> members) {
    if (members.empty()) throw ContractViolation("cannot select from an empty population");
}

bool has_copy(std::span<const Genome> members, std::size_t index) {
    for (std::size_t j = 0; j < members.size(); ++j)
        if (j != index && members[j] == members[index]) return true;
    return false;
}

// Uniform pick among indices satisfying `pred`; `count` is how many do.
template <typename Pred>
std::size_t pick_nth(std::span<const Genome> members, std::size_t count, Pred pred, Rng& rng) {
    std::size_t target = 0;
    if (count > 1) target = std::uniform_int_distribution<std::size_t>(0, count - 1)(rng);
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (!pred(i)) continue;
        if (target == 0) return i;
        --target;
    }
    throw ContractViolation("selection predicate matched fewer members than counted");
}

std::size_t pick_weighted(std::span<const double> weights, Rng& rng) {
    std::discrete_distribution<std::size_t> dist(weights.begin(), weights.end());
    return dist(rng);
}

} // namespace

std::size_t Population::best_fitness() const {
    require_non_empty(members);
    std::size_t best = 0;
    for (const auto& g : members) best = std::max(best, g.fitness());
    return best;
}

std::size_t Population::worst_fitness() const {
    require_non_empty(members);
    std::size_t worst = members.front().fitness();
    for (const auto& g : members) worst = std::min(worst, g.fitness());
    return worst;
}

std::size_t Population::distinct_best() const {
    const std::size_t best = best_fitness();
    std::size_t distinct = 0;
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (members[i].fitness() != best) continue;
        const bool seen = std::any_of(members.begin(), members.begin() + static_cast<std::ptrdiff_t>(i),
                                      [&](const Genome& g) { return g == members[i]; });
        if (!seen) ++distinct;
    }
    return distinct;
}

std::size_t select_parent_index(std::span<const Genome> members, ParentSelection policy, Rng& rng) {
    require_non_empty(members);
    const std::size_t mu = members.size();
    if (mu == 1) return 0;

    switch (policy) {
    case ParentSelection::Uniform:
        return std::uniform_int_distribution<std::size_t>(0, mu - 1)(rng);

    case ParentSelection::Greedy: {
        std::size_t best = 0;
        std::size_t count = 0;
        for (const auto& g : members) {
            if (g.fitness() > best) {
                best = g.fitness();
                count = 1;
            } else if (g.fitness() == best) {
                ++count;
            }
        }
        return pick_nth(members, count, [&](std::size_t i) { return members[i].fitness() == best; }, rng);
    }

    case ParentSelection::FitnessProportional: {
        std::vector<double> w(mu);
        double total = 0.0;
        for (std::size_t i = 0; i < mu; ++i) total += w[i] = static_cast<double>(members[i].fitness());
        if (total == 0.0) return std::uniform_int_distribution<std::size_t>(0, mu - 1)(rng);
        return pick_weighted(w, rng);
    }

    case ParentSelection::Rank: {
        // Weight = average 1-based rank in ascending fitness; ties share a rank.
        std::vector<double> w(mu);
        for (std::size_t i = 0; i < mu; ++i) {
            std::size_t below = 0;
            std::size_t equal = 0;
            for (const auto& g : members) {
                if (g.fitness() < members[i].fitness()) ++below;
                if (g.fitness() == members[i].fitness()) ++equal;
            }
            w[i] = static_cast<double>(below) + (static_cast<double>(equal) + 1.0) / 2.0;
        }
        return pick_weighted(w, rng);
    }
    }
    throw ContractViolation("unknown parent selection policy");
}

const Genome& select_parent(const Population& pop, ParentSelection policy, Rng& rng) {
    return pop.members[select_parent_index(pop.members, policy, rng)];
}

std::size_t choose_removal(std::span<const Genome> members, TieBreak tie_break, Rng& rng) {
    require_non_empty(members);
    std::size_t worst = members.front().fitness();
    std::size_t ties = 0;
    for (const auto& g : members) {
        if (g.fitness() < worst) {
            worst = g.fitness();
            ties = 1;
        } else if (g.fitness() == worst) {
            ++ties;
        }
    }
    auto is_worst = [&](std::size_t i) { return members[i].fitness() == worst; };
    if (ties == 1) return pick_nth(members, 1, is_worst, rng);

    if (tie_break == TieBreak::PreferDuplicates) {
        std::size_t dups = 0;
        for (std::size_t i = 0; i < members.size(); ++i)
            if (is_worst(i) && has_copy(members, i)) ++dups;
        if (dups > 0)
            return pick_nth(members, dups, [&](std::size_t i) { return is_worst(i) && has_copy(members, i); },
                            rng);
    }
    return pick_nth(members, ties, is_worst, rng);
}

Population environmental_selection(Population pop, TieBreak tie_break, Rng& rng) {
    if (pop.members.size() != pop.capacity + 1)
        throw ContractViolation("environmental selection expects exactly mu + 1 genomes");
    const std::size_t idx = choose_removal(pop.members, tie_break, rng);
    pop.members.erase(pop.members.begin() + static_cast<std::ptrdiff_t>(idx));
    return pop;
}

void swap_remove(std::vector<Genome>& members, std::size_t index) {
    if (index != members.size() - 1) std::swap(members[index], members.back());
    members.pop_back();
}

} // namespace ssga::ga
