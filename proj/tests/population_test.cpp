#include <doctest.h>

#include <map>
#include <vector>

#include "oracles.hpp"
#include "ssga/ga/population.hpp"
#include "ssga/harness/stats.hpp"

using namespace ssga;
using namespace ssga::ga;

namespace {

std::vector<Genome> genomes(std::initializer_list<const char*> bits) {
    std::vector<Genome> out;
    for (const char* b : bits) out.push_back(Genome::from_string(b));
    return out;
}

std::vector<double> selection_counts(const std::vector<Genome>& members, ParentSelection policy, int samples,
                                     Rng& rng) {
    std::vector<double> counts(members.size(), 0.0);
    for (int s = 0; s < samples; ++s) counts[select_parent_index(members, policy, rng)] += 1.0;
    return counts;
}

bool fits(const std::vector<double>& counts, const std::vector<double>& probs, double total) {
    const auto t = oracle::chi_square(counts, probs, total);
    return harness::chi_squared_upper_tail(t.statistic, t.df) > 1e-4;
}

} // namespace

TEST_CASE("single member is always selected") {
    Rng rng(1);
    const auto members = genomes({"0110"});
    for (auto policy : {ParentSelection::Uniform, ParentSelection::FitnessProportional, ParentSelection::Rank,
                        ParentSelection::Greedy})
        for (int i = 0; i < 20; ++i) CHECK(select_parent_index(members, policy, rng) == 0);
    CHECK_THROWS_AS(select_parent_index(std::vector<Genome>{}, ParentSelection::Uniform, rng), ContractViolation);
}

TEST_CASE("selection policies have the intended laws") {
    Rng rng(7);
    const auto members = genomes({"1000", "1100", "1110", "1100"});
    const int samples = 40000;

    CHECK(fits(selection_counts(members, ParentSelection::Uniform, samples, rng), {0.25, 0.25, 0.25, 0.25}, samples));
    CHECK(fits(selection_counts(members, ParentSelection::FitnessProportional, samples, rng),
               {1.0 / 8, 2.0 / 8, 3.0 / 8, 2.0 / 8}, samples));
    // Ranks 1, 2.5, 4, 2.5: ties share the average rank.
    CHECK(fits(selection_counts(members, ParentSelection::Rank, samples, rng), {0.1, 0.25, 0.4, 0.25}, samples));

    const auto greedy = selection_counts(members, ParentSelection::Greedy, 1000, rng);
    CHECK(greedy[2] == 1000);

    const auto zeros = genomes({"000", "000"});
    CHECK(fits(selection_counts(zeros, ParentSelection::FitnessProportional, samples, rng), {0.5, 0.5}, samples));
}

TEST_CASE("environmental selection removes the unique minimum") {
    Rng rng(3);
    Population pop;
    pop.capacity = 2;
    pop.members = genomes({"11111", "11100", "11110"});
    const auto out = environmental_selection(pop, TieBreak::Random, rng);
    REQUIRE(out.size() == 2);
    for (const auto& g : out.members) CHECK(g.fitness() != 3);

    pop.members.pop_back();
    CHECK_THROWS_AS(environmental_selection(pop, TieBreak::Random, rng), ContractViolation);
}

TEST_CASE("random tie-break is uniform over the least fit") {
    Rng rng(5);
    const auto members = genomes({"110", "100", "010", "001"});
    std::vector<double> counts(4, 0.0);
    const int samples = 30000;
    for (int s = 0; s < samples; ++s) counts[choose_removal(members, TieBreak::Random, rng)] += 1.0;
    CHECK(counts[0] == 0);
    CHECK(fits({counts[1], counts[2], counts[3]}, {1.0 / 3, 1.0 / 3, 1.0 / 3}, samples));
}

TEST_CASE("duplicate-preferring tie-break keeps distinct genotypes") {
    Rng rng(9);
    const auto members = genomes({"1100", "1100", "1010"});
    for (int s = 0; s < 200; ++s) CHECK(choose_removal(members, TieBreak::PreferDuplicates, rng) != 2);

    // Without duplicates it falls back to a uniform choice among the least fit.
    const auto distinct = genomes({"1100", "0110", "1110"});
    std::vector<double> counts(3, 0.0);
    for (int s = 0; s < 20000; ++s) counts[choose_removal(distinct, TieBreak::PreferDuplicates, rng)] += 1.0;
    CHECK(counts[2] == 0);
    CHECK(fits({counts[0], counts[1]}, {0.5, 0.5}, 20000));
}

TEST_CASE("diversity on the best level survives duplicate-preferring selection") {
    Rng rng(13);
    for (int trial = 0; trial < 500; ++trial) {
        Population pop;
        pop.capacity = 3;
        const auto a = Genome::random(12, rng);
        Genome b = a;
        b.flip_exactly(2, rng);
        if (b.fitness() != a.fitness()) continue;
        pop.members = {a, a, b, a};
        const auto out = environmental_selection(pop, TieBreak::PreferDuplicates, rng);
        CHECK(out.distinct_best() == 2);
    }
}

TEST_CASE("population summaries") {
    Population pop;
    pop.capacity = 4;
    pop.members = genomes({"1100", "0011", "1100", "1000"});
    CHECK(pop.best_fitness() == 2);
    CHECK(pop.worst_fitness() == 1);
    CHECK(pop.distinct_best() == 2);
}
