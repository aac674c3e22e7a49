#include <doctest.h>

#include <vector>

#include "oracles.hpp"
#include "ssga/ga/genome.hpp"
#include "ssga/harness/stats.hpp"

using namespace ssga;
using namespace ssga::ga;

TEST_CASE("onemax counts ones") {
    CHECK(onemax(Genome::ones(8)) == 8);
    CHECK(onemax(Genome::from_string("10110")) == 3);
    CHECK(onemax(Genome(37)) == 0);
    CHECK(Genome::from_string("10110").fitness() == 3);
}

TEST_CASE("string round trip and padding bits") {
    const std::string s = "1101000000000000000000000000000000000000000000000000000000000000011";
    const auto g = Genome::from_string(s);
    CHECK(g.to_string() == s);
    CHECK(g.size() == s.size());
    const auto ones = Genome::ones(70);
    CHECK(ones.words().size() == 2);
    CHECK(ones.words()[1] == 0x3fULL);
    CHECK_THROWS_AS(Genome::from_string("10x"), ContractViolation);
}

TEST_CASE("flip keeps fitness cached") {
    Genome g(100);
    g.flip(3);
    g.flip(99);
    CHECK(g.fitness() == 2);
    g.flip(3);
    CHECK(g.fitness() == 1);
    CHECK(g.fitness() == onemax(g));
    CHECK_THROWS_AS(g.flip(100), ContractViolation);
}

TEST_CASE("hamming distance") {
    CHECK(hamming_distance(Genome::from_string("110000"), Genome::from_string("001100")) == 4);
    CHECK(hamming_distance(Genome::ones(9), Genome::ones(9)) == 0);
    CHECK_THROWS_AS(hamming_distance(Genome(3), Genome(4)), ContractViolation);
}

TEST_CASE("crossover of identical parents is a fixed point") {
    Rng rng(5);
    const auto x = Genome::from_string("1010");
    for (int i = 0; i < 100; ++i) CHECK(uniform_crossover(x, x, rng) == x);
}

TEST_CASE("crossover keeps agreeing bits and has fair marginals") {
    Rng rng(11);
    const std::size_t n = 150;
    Genome x = Genome::random(n, rng);
    Genome y = Genome::random(n, rng);
    const int samples = 20000;
    std::vector<double> ones(n, 0.0);
    for (int s = 0; s < samples; ++s) {
        const auto z = uniform_crossover(x, y, rng);
        REQUIRE(z.fitness() == onemax(z));
        for (std::size_t i = 0; i < n; ++i) {
            if (x.bit(i) == y.bit(i)) REQUIRE(z.bit(i) == x.bit(i));
            if (z.bit(i)) ones[i] += 1.0;
        }
    }
    // Every differing position is an independent fair coin.
    double stat = 0.0;
    double df = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (x.bit(i) == y.bit(i)) continue;
        const double from_x = x.bit(i) ? ones[i] : samples - ones[i];
        const double e = samples / 2.0;
        stat += 2.0 * (from_x - e) * (from_x - e) / e;
        df += 1.0;
    }
    REQUIRE(df > 0.0);
    CHECK(harness::chi_squared_upper_tail(stat, df) > 1e-4);
}

TEST_CASE("bitwise or") {
    CHECK(bitwise_or(Genome::from_string("110000"), Genome::from_string("001100")).to_string() == "111100");
    Rng rng(2);
    for (int i = 0; i < 50; ++i) {
        const auto a = Genome::random(90, rng);
        const auto b = Genome::random(90, rng);
        const auto o = bitwise_or(a, b);
        CHECK(o.fitness() >= std::max(a.fitness(), b.fitness()));
        CHECK(o.fitness() == onemax(o));
    }
}

TEST_CASE("mutation edge rates") {
    Rng rng(3);
    const auto zero = Genome(1);
    for (int i = 0; i < 20; ++i) CHECK(standard_bit_mutation(zero, 1.0, rng).to_string() == "1");
    const auto g = Genome::from_string("1100101");
    Genome complement = g;
    for (std::size_t i = 0; i < g.size(); ++i) complement.flip(i);
    CHECK(standard_bit_mutation(g, 7.0, rng) == complement);
    CHECK_THROWS_AS(standard_bit_mutation(g, 0.0, rng), ContractViolation);
    CHECK_THROWS_AS(standard_bit_mutation(g, 8.0, rng), ContractViolation);
}

TEST_CASE("mutation flip count is binomial and positions are uniform") {
    Rng rng(17);
    const std::size_t n = 120;
    const double c = 1.5;
    const double p = c / n;
    const int samples = 40000;
    const Genome base(n);
    std::vector<double> counts(n + 1, 0.0);
    std::vector<double> position(n, 0.0);
    for (int s = 0; s < samples; ++s) {
        const auto m = standard_bit_mutation(base, c, rng);
        counts[m.fitness()] += 1.0;
        for (std::size_t i = 0; i < n; ++i)
            if (m.bit(i)) position[i] += 1.0;
    }
    std::vector<double> pmf(n + 1);
    for (std::size_t k = 0; k <= n; ++k) pmf[k] = oracle::binomial_pmf(n, k, p);
    const auto count_test = oracle::chi_square(counts, pmf, samples);
    CHECK(harness::chi_squared_upper_tail(count_test.statistic, count_test.df) > 1e-4);

    double total_flips = 0.0;
    for (double v : position) total_flips += v;
    const auto pos_test = oracle::chi_square(position, std::vector<double>(n, 1.0 / n), total_flips);
    CHECK(harness::chi_squared_upper_tail(pos_test.statistic, pos_test.df) > 1e-4);
}

TEST_CASE("flip_exactly flips the requested number of distinct bits") {
    Rng rng(23);
    for (std::size_t n : {1u, 13u, 64u, 100u, 257u}) {
        for (std::size_t k : {std::size_t{0}, std::size_t{1}, n / 3, n / 2 + 1, n}) {
            if (k > n) continue;
            Genome g = Genome::random(n, rng);
            const Genome before = g;
            g.flip_exactly(k, rng);
            CHECK(hamming_distance(g, before) == k);
            CHECK(g.fitness() == onemax(g));
        }
    }
    Genome g(5);
    CHECK_THROWS_AS(g.flip_exactly(6, rng), ContractViolation);
}

TEST_CASE("biased crossover extremes") {
    Rng rng(29);
    const auto parent = Genome::random(80, rng);
    const auto donor = Genome::random(80, rng);
    Genome out;
    out.assign_biased_crossover(parent, donor, 0.0, rng);
    CHECK(out == parent);
    out.assign_biased_crossover(parent, donor, 1.0, rng);
    CHECK(out == donor);
}
