#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ssga/ga/config.hpp"
#include "ssga/ga/genome.hpp"
#include "ssga/rng.hpp"

namespace ssga::ga {

/// Multiset of equal-length genomes. Holds `capacity` members between
/// generations and `capacity + 1` while the offspring awaits selection.
struct Population {
    std::vector<Genome> members;
    std::size_t capacity = 0;

    std::size_t size() const noexcept { return members.size(); }
    std::size_t best_fitness() const;
    std::size_t worst_fitness() const;
    /// Number of distinct genotypes among the members of best fitness.
    std::size_t distinct_best() const;
};

/// How environmental selection breaks ties among the least fit members.
enum class TieBreak {
    Random,           ///< uniform among minimal-fitness members
    PreferDuplicates, ///< remove a minimal-fitness member that has an identical copy, if any
};

std::size_t select_parent_index(std::span<const Genome> members, ParentSelection policy, Rng& rng);
const Genome& select_parent(const Population& pop, ParentSelection policy, Rng& rng);

/// Index of the member environmental selection discards.
std::size_t choose_removal(std::span<const Genome> members, TieBreak tie_break, Rng& rng);

/// Drops one least-fit member of a population holding capacity + 1 genomes.
Population environmental_selection(Population pop, TieBreak tie_break, Rng& rng);

/// Removes members[index] in O(1) by swapping with the last element.
void swap_remove(std::vector<Genome>& members, std::size_t index);

} // namespace ssga::ga
